#pragma once

#include <cstddef>
#include <vector>

#include "qkm/dataset.hpp"
#include "qkm/statevector.hpp"

namespace qkm {

/// Qubit layout of the distance-estimator circuit: one ancilla, an index
/// register and a norm register of a = ceil(log2(M+1)) qubits each, and a
/// data register of log2(d) qubits. Ancilla is qubit 0, then index, data,
/// norm in ascending qubit order.
struct RegisterLayout {
    std::size_t ancilla = 0;
    QubitRange psi_index;
    QubitRange data;
    QubitRange phi;
    std::size_t total_qubits = 0;

    std::vector<std::size_t> psi_index_qubits() const;
    std::vector<std::size_t> phi_qubits() const;
};

RegisterLayout make_layout(std::size_t set_size, std::size_t padded_dim);

/// The scalar |u|^2 + (1/M) * sum_j |v_j|^2 that links the swap-test
/// probability to the Euclidean distance.
struct ZTerm {
    double value = 0.0;
};

ZTerm compute_z(const DataPoint& u, const DataSet& set);

/// Index-register superposition amplitudes: 1/sqrt(2) on address 0,
/// 1/sqrt(2M) on addresses 1..M, zero above. Length 2^a, unit norm,
/// exactly M+1 nonzero entries.
std::vector<Amplitude> superposition_column(std::size_t set_size);

/// Completes superposition_column to a full unitary via the Householder
/// reflection that maps |0...0> to the column.
std::vector<std::vector<Amplitude>> superposition_unitary(std::size_t set_size);

/// Puts the index register (currently in its ground state) into the
/// superposition_column state by applying superposition_unitary.
void prepare_index_register(StateVector& state, const RegisterLayout& layout,
                            std::size_t set_size);

/// Binary tree of y-rotation angles realizing amplitude encoding of a real
/// vector: levels[l] holds 2^l angles; the node (l, j) angle splits the
/// subtree covering coords[j*2^(n-l) .. (j+1)*2^(n-l)). Signs are carried
/// by atan2 of signed leaf values.
struct RotationTree {
    std::vector<std::vector<double>> levels;
};

RotationTree encode_angles(const DataPoint& v);

/// Applies the rotation cascade of `tree` to the data register, each
/// rotation conditioned on the index register reading `address`. With an
/// empty index register range this is plain amplitude encoding.
void apply_rotation_cascade(StateVector& state, QubitRange data,
                            const RotationTree& tree, QubitRange index,
                            std::size_t address);

/// Conditional loading of normalized vectors: for address 0 the query u,
/// for address j in 1..M the stored vector v_{j-1}, each realized as a
/// multi-controlled rotation cascade. Addresses above M stay untouched
/// (their index amplitude is zero).
void apply_qram_oracle(StateVector& state, const RegisterLayout& layout,
                       const DataPoint& u, const DataSet& set);

/// Norm-weighted register entries: |u|/sqrt(Z) on entry 0 and
/// -|v_j|/(sqrt(M) * sqrt(Z)) on entries 1..M, zero above. Unit norm.
std::vector<Amplitude> norm_register_amplitudes(const DataPoint& u,
                                                const DataSet& set);

/// Loads norm_register_amplitudes onto the phi register by direct
/// amplitude initialization.
void prepare_norm_register(StateVector& state, const RegisterLayout& layout,
                           const DataPoint& u, const DataSet& set);

} // namespace qkm
