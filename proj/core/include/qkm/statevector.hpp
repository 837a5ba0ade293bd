#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qkm/gates.hpp"

namespace qkm {

/// Range of contiguous qubits [first, first + count).
struct QubitRange {
    std::size_t first = 0;
    std::size_t count = 0;
};

/// Outcome histogram of repeated single-qubit measurements.
struct ShotHistogram {
    std::uint64_t zeros = 0;
    std::uint64_t ones = 0;

    std::uint64_t shots() const { return zeros + ones; }
};

/// Running tally of simulator operations applied to a state.
struct OpCounts {
    std::uint64_t gate_applications = 0;
    std::uint64_t cswap_applications = 0;
    std::uint64_t register_unitaries = 0;
    std::uint64_t amplitude_loads = 0;
};

/// Dense statevector over 2^n complex amplitudes.
///
/// Basis-index convention, fixed for the whole library: qubit q corresponds
/// to bit q of the amplitude index, bit 0 least significant. So for a
/// three-qubit state, amplitude index 0b101 is the basis state with qubits
/// 0 and 2 in |1> and qubit 1 in |0>.
///
/// A StateVector is exclusively owned by one thread while it is being
/// mutated; read-only queries are safe concurrently once mutation stops.
class StateVector {
  public:
    static constexpr std::size_t kDefaultMaxQubits = 26;

    /// Ground state |0...0> on num_qubits qubits.
    explicit StateVector(std::size_t num_qubits,
                         std::size_t max_qubits = kDefaultMaxQubits);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    const std::vector<Amplitude>& amplitudes() const { return amplitudes_; }
    Amplitude amplitude(std::size_t basis_index) const;

    /// Sum of squared amplitude magnitudes (1 for any valid state).
    double norm_squared() const;

    /// Loads amplitudes onto a contiguous register that is still in its
    /// all-zeros basis state (and therefore unentangled with the rest).
    /// The sequence must have length 2^reg.count and unit norm within 1e-9;
    /// it is written verbatim, never renormalized.
    void set_register_amplitudes(QubitRange reg,
                                 const std::vector<Amplitude>& amps);

    /// Applies a 2x2 unitary to `target`, restricted to basis states whose
    /// control bits are all 1. Empty `controls` means an ordinary gate.
    void apply_gate(const Gate2x2& gate, std::size_t target,
                    const std::vector<std::size_t>& controls = {});

    /// Exchanges the bit patterns of reg_a and reg_b (pairwise qubit swaps)
    /// on basis states whose control bit is 1.
    void apply_controlled_swap(std::size_t control,
                               const std::vector<std::size_t>& reg_a,
                               const std::vector<std::size_t>& reg_b);

    /// Applies a dense unitary over a whole contiguous register.
    /// `matrix` is row-major with dimension 2^reg.count.
    void apply_register_unitary(QubitRange reg,
                                const std::vector<std::vector<Amplitude>>& matrix);

    /// True when every amplitude with any register bit set is (numerically)
    /// zero, i.e. the register factors out as |0...0>.
    bool register_in_ground_state(QubitRange reg) const;

    /// Exact marginal probability of reading 0 on one qubit (no sampling).
    double probability_of_zero(std::size_t qubit) const;

    /// Seeded measurement histogram for one qubit: a single binomial draw
    /// with success probability probability_of_zero(qubit). The same seed
    /// always produces the same counts.
    ShotHistogram sample_counts(std::size_t qubit, std::uint64_t shots,
                                std::uint64_t seed) const;

    const OpCounts& op_counts() const { return op_counts_; }

  private:
    void check_qubit(std::size_t qubit) const;
    void check_norm() const;

    std::size_t num_qubits_;
    std::vector<Amplitude> amplitudes_;
    OpCounts op_counts_;
};

} // namespace qkm
