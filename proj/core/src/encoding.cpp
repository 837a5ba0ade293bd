#include "qkm/encoding.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "qkm/errors.hpp"

namespace qkm {

namespace {

std::vector<std::size_t> range_qubits(QubitRange reg) {
    std::vector<std::size_t> qubits(reg.count);
    std::iota(qubits.begin(), qubits.end(), reg.first);
    return qubits;
}

/// Index qubits needed to address M+1 cells: ceil(log2(M+1)).
std::size_t index_register_width(std::size_t set_size) {
    return static_cast<std::size_t>(std::bit_width(set_size));
}

/// Ry(theta) on `target`, conditioned on the given qubits matching the bit
/// pattern. Zero-valued pattern bits are handled by conjugating with NOT
/// gates, so only all-ones controls reach the simulator.
void apply_pattern_controlled_ry(StateVector& state, double theta,
                                 std::size_t target,
                                 const std::vector<std::size_t>& pattern_qubits,
                                 std::size_t pattern) {
    std::vector<std::size_t> flipped;
    for (std::size_t i = 0; i < pattern_qubits.size(); ++i) {
        if (((pattern >> i) & 1) == 0) flipped.push_back(pattern_qubits[i]);
    }
    for (std::size_t q : flipped) state.apply_gate(gates::pauli_x(), q);
    state.apply_gate(gates::ry(theta), target, pattern_qubits);
    for (std::size_t q : flipped) state.apply_gate(gates::pauli_x(), q);
}

} // namespace

std::vector<std::size_t> RegisterLayout::psi_index_qubits() const {
    return range_qubits(psi_index);
}

std::vector<std::size_t> RegisterLayout::phi_qubits() const {
    return range_qubits(phi);
}

RegisterLayout make_layout(std::size_t set_size, std::size_t padded_dim) {
    if (set_size == 0) {
        throw ValidationError("layout requires at least one stored vector");
    }
    if (padded_dim < 2 || !std::has_single_bit(padded_dim)) {
        throw ValidationError("padded dimension must be a power of two >= 2");
    }
    const std::size_t a = index_register_width(set_size);
    const std::size_t nd =
        static_cast<std::size_t>(std::countr_zero(padded_dim));

    RegisterLayout layout;
    layout.ancilla = 0;
    layout.psi_index = {1, a};
    layout.data = {1 + a, nd};
    layout.phi = {1 + a + nd, a};
    layout.total_qubits = 1 + 2 * a + nd;
    return layout;
}

ZTerm compute_z(const DataPoint& u, const DataSet& set) {
    if (u.coords.size() != set.padded_dim) {
        throw ValidationError("query and dataset dimensions differ");
    }
    double mean_sq = 0.0;
    for (const DataPoint& p : set.points) mean_sq += p.norm * p.norm;
    mean_sq /= static_cast<double>(set.size());
    return ZTerm{u.norm * u.norm + mean_sq};
}

std::vector<Amplitude> superposition_column(std::size_t set_size) {
    if (set_size == 0) {
        throw ValidationError("superposition column requires M >= 1");
    }
    const std::size_t a = index_register_width(set_size);
    std::vector<Amplitude> column(std::size_t{1} << a, Amplitude{0.0, 0.0});
    column[0] = Amplitude{1.0 / std::sqrt(2.0), 0.0};
    const double tail =
        1.0 / std::sqrt(2.0 * static_cast<double>(set_size));
    for (std::size_t j = 1; j <= set_size; ++j) {
        column[j] = Amplitude{tail, 0.0};
    }
    return column;
}

std::vector<std::vector<Amplitude>> superposition_unitary(
    std::size_t set_size) {
    const std::vector<Amplitude> column = superposition_column(set_size);
    const std::size_t dim = column.size();

    // Householder reflection I - 2ww^T with w = normalize(e0 - column)
    // maps e0 to the column. The column is real with a positive entry 0,
    // so |e0 - column| is never zero.
    std::vector<double> w(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        w[i] = (i == 0 ? 1.0 : 0.0) - column[i].real();
    }
    double wnorm2 = 0.0;
    for (double x : w) wnorm2 += x * x;

    std::vector<std::vector<Amplitude>> unitary(
        dim, std::vector<Amplitude>(dim, Amplitude{0.0, 0.0}));
    for (std::size_t i = 0; i < dim; ++i) unitary[i][i] = Amplitude{1.0, 0.0};
    if (wnorm2 == 0.0) return unitary;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            unitary[i][j] -= Amplitude{2.0 * w[i] * w[j] / wnorm2, 0.0};
        }
    }
    return unitary;
}

void prepare_index_register(StateVector& state, const RegisterLayout& layout,
                            std::size_t set_size) {
    if (!state.register_in_ground_state(layout.psi_index)) {
        throw ValidationError("index register is not in its ground state");
    }
    state.apply_register_unitary(layout.psi_index,
                                 superposition_unitary(set_size));
}

RotationTree encode_angles(const DataPoint& v) {
    const std::size_t d = v.coords.size();
    if (d < 2 || !std::has_single_bit(d)) {
        throw ValidationError("vector dimension must be a power of two >= 2");
    }
    if (!(v.norm > 0.0)) {
        throw ValidationError("cannot encode a zero-norm vector");
    }
    const std::size_t depth =
        static_cast<std::size_t>(std::countr_zero(d));

    // Subtree masses, bottom-up: leaves keep their signs, inner nodes are
    // nonnegative, matching the amplitudes the cascade actually produces.
    std::vector<std::vector<double>> masses(depth + 1);
    masses[depth] = v.coords;
    for (std::size_t level = depth; level-- > 0;) {
        masses[level].resize(std::size_t{1} << level);
        for (std::size_t j = 0; j < masses[level].size(); ++j) {
            masses[level][j] =
                std::hypot(masses[level + 1][2 * j], masses[level + 1][2 * j + 1]);
        }
    }

    RotationTree tree;
    tree.levels.resize(depth);
    for (std::size_t level = 0; level < depth; ++level) {
        tree.levels[level].resize(std::size_t{1} << level);
        for (std::size_t j = 0; j < tree.levels[level].size(); ++j) {
            // atan2(0, 0) == 0, so empty subtrees get a harmless no-op angle.
            tree.levels[level][j] = 2.0 * std::atan2(masses[level + 1][2 * j + 1],
                                                     masses[level + 1][2 * j]);
        }
    }
    return tree;
}

void apply_rotation_cascade(StateVector& state, QubitRange data,
                            const RotationTree& tree, QubitRange index,
                            std::size_t address) {
    const std::size_t depth = tree.levels.size();
    if (data.count != depth) {
        throw ValidationError("rotation tree depth does not match register");
    }
    if (address >= (std::size_t{1} << index.count)) {
        throw ValidationError("address does not fit the index register");
    }
    const std::vector<std::size_t> address_qubits = range_qubits(index);

    for (std::size_t level = 0; level < depth; ++level) {
        // Level l targets the (depth-1-l)-th data qubit and is conditioned
        // on the l higher data qubits spelling out the node number.
        const std::size_t target = data.first + (depth - 1 - level);
        for (std::size_t node = 0; node < tree.levels[level].size(); ++node) {
            std::vector<std::size_t> pattern_qubits = address_qubits;
            std::size_t pattern = address;
            for (std::size_t t = 0; t < level; ++t) {
                pattern_qubits.push_back(data.first + (depth - 1 - t));
                const std::size_t bit = (node >> (level - 1 - t)) & 1;
                pattern |= bit << (pattern_qubits.size() - 1);
            }
            apply_pattern_controlled_ry(state, tree.levels[level][node],
                                        target, pattern_qubits, pattern);
        }
    }
}

void apply_qram_oracle(StateVector& state, const RegisterLayout& layout,
                       const DataPoint& u, const DataSet& set) {
    if (u.coords.size() != set.padded_dim ||
        layout.data.count !=
            static_cast<std::size_t>(std::countr_zero(set.padded_dim)) ||
        layout.psi_index.count != index_register_width(set.size())) {
        throw ValidationError("layout does not match query and dataset");
    }
    if (!state.register_in_ground_state(layout.data)) {
        throw ValidationError("data register is not in its ground state");
    }
    apply_rotation_cascade(state, layout.data, encode_angles(u),
                           layout.psi_index, 0);
    for (std::size_t j = 0; j < set.size(); ++j) {
        apply_rotation_cascade(state, layout.data,
                               encode_angles(set.points[j]),
                               layout.psi_index, j + 1);
    }
}

std::vector<Amplitude> norm_register_amplitudes(const DataPoint& u,
                                                const DataSet& set) {
    const double z = compute_z(u, set).value;
    if (!(z > 0.0)) {
        throw ValidationError("Z term must be positive");
    }
    const double root_z = std::sqrt(z);
    const double root_m = std::sqrt(static_cast<double>(set.size()));
    const std::size_t a = index_register_width(set.size());

    std::vector<Amplitude> amps(std::size_t{1} << a, Amplitude{0.0, 0.0});
    amps[0] = Amplitude{u.norm / root_z, 0.0};
    for (std::size_t j = 1; j <= set.size(); ++j) {
        amps[j] = Amplitude{-set.points[j - 1].norm / (root_m * root_z), 0.0};
    }
    return amps;
}

void prepare_norm_register(StateVector& state, const RegisterLayout& layout,
                           const DataPoint& u, const DataSet& set) {
    state.set_register_amplitudes(layout.phi,
                                  norm_register_amplitudes(u, set));
}

} // namespace qkm
