#include "qkm/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "qkm/errors.hpp"

namespace qkm {

namespace {

constexpr double kGateUnitarityTol = 1e-12;
constexpr double kRegisterUnitarityTol = 1e-10;
constexpr double kInputNormTol = 1e-9;
constexpr double kNormDriftTol = 1e-8;

std::size_t bit_mask(const std::vector<std::size_t>& qubits) {
    std::size_t mask = 0;
    for (std::size_t q : qubits) mask |= std::size_t{1} << q;
    return mask;
}

} // namespace

StateVector::StateVector(std::size_t num_qubits, std::size_t max_qubits)
    : num_qubits_(num_qubits) {
    if (num_qubits > max_qubits) {
        throw ResourceError("statevector of " + std::to_string(num_qubits) +
                            " qubits exceeds the configured maximum of " +
                            std::to_string(max_qubits));
    }
    amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
    amplitudes_[0] = Amplitude{1.0, 0.0};
}

Amplitude StateVector::amplitude(std::size_t basis_index) const {
    if (basis_index >= amplitudes_.size()) {
        throw ValidationError("basis index " + std::to_string(basis_index) +
                              " out of range");
    }
    return amplitudes_[basis_index];
}

double StateVector::norm_squared() const {
    double s = 0.0;
    for (const Amplitude& a : amplitudes_) s += std::norm(a);
    return s;
}

void StateVector::check_qubit(std::size_t qubit) const {
    if (qubit >= num_qubits_) {
        throw ValidationError("qubit index " + std::to_string(qubit) +
                              " out of range for " +
                              std::to_string(num_qubits_) + " qubits");
    }
}

void StateVector::check_norm() const {
    const double deviation = std::abs(norm_squared() - 1.0);
    // Written so a NaN amplitude also trips the check.
    if (!(deviation <= kNormDriftTol)) {
        throw NumericError("state norm drifted by " +
                           std::to_string(deviation) +
                           "; refusing to renormalize silently");
    }
}

void StateVector::set_register_amplitudes(QubitRange reg,
                                          const std::vector<Amplitude>& amps) {
    if (reg.count == 0 || reg.first + reg.count > num_qubits_) {
        throw ValidationError("register [" + std::to_string(reg.first) + ", " +
                              std::to_string(reg.first + reg.count) +
                              ") does not fit in " +
                              std::to_string(num_qubits_) + " qubits");
    }
    const std::size_t reg_dim = std::size_t{1} << reg.count;
    if (amps.size() != reg_dim) {
        throw ValidationError("amplitude sequence has length " +
                              std::to_string(amps.size()) + ", expected " +
                              std::to_string(reg_dim));
    }
    double norm2 = 0.0;
    for (const Amplitude& a : amps) norm2 += std::norm(a);
    if (!(std::abs(std::sqrt(norm2) - 1.0) <= kInputNormTol)) {
        throw ValidationError("amplitude sequence has norm " +
                              std::to_string(std::sqrt(norm2)) +
                              ", expected 1 within 1e-9");
    }

    if (!register_in_ground_state(reg)) {
        throw ValidationError(
            "register must be in its all-zeros basis state before "
            "amplitudes are loaded");
    }
    const std::size_t reg_mask = (reg_dim - 1) << reg.first;

    // The register factors out exactly, so the product state is formed by
    // scaling each remaining-qubit amplitude across the register values.
    for (std::size_t rest = 0; rest < amplitudes_.size(); ++rest) {
        if ((rest & reg_mask) != 0) continue;
        const Amplitude base = amplitudes_[rest];
        if (base == Amplitude{0.0, 0.0}) continue;
        for (std::size_t r = 0; r < reg_dim; ++r) {
            amplitudes_[rest | (r << reg.first)] = base * amps[r];
        }
    }
    ++op_counts_.amplitude_loads;
    check_norm();
}

void StateVector::apply_gate(const Gate2x2& gate, std::size_t target,
                             const std::vector<std::size_t>& controls) {
    check_qubit(target);
    for (std::size_t c : controls) {
        check_qubit(c);
        if (c == target) {
            throw ValidationError("target qubit " + std::to_string(target) +
                                  " also appears as a control");
        }
    }
    if (gate.unitarity_defect() > kGateUnitarityTol) {
        throw ValidationError("gate matrix is not unitary within 1e-12");
    }

    const std::size_t target_bit = std::size_t{1} << target;
    const std::size_t control_mask = bit_mask(controls);
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if ((i & target_bit) != 0) continue;
        if ((i & control_mask) != control_mask) continue;
        const std::size_t j = i | target_bit;
        const Amplitude a0 = amplitudes_[i];
        const Amplitude a1 = amplitudes_[j];
        amplitudes_[i] = gate.u00 * a0 + gate.u01 * a1;
        amplitudes_[j] = gate.u10 * a0 + gate.u11 * a1;
    }
    ++op_counts_.gate_applications;
    check_norm();
}

void StateVector::apply_controlled_swap(std::size_t control,
                                        const std::vector<std::size_t>& reg_a,
                                        const std::vector<std::size_t>& reg_b) {
    if (reg_a.size() != reg_b.size()) {
        throw ValidationError("swap registers differ in size");
    }
    check_qubit(control);
    const std::size_t mask_a = bit_mask(reg_a);
    const std::size_t mask_b = bit_mask(reg_b);
    const std::size_t control_bit = std::size_t{1} << control;
    if ((mask_a & mask_b) != 0 || ((mask_a | mask_b) & control_bit) != 0) {
        throw ValidationError("swap registers and control must be disjoint");
    }
    for (std::size_t q : reg_a) check_qubit(q);
    for (std::size_t q : reg_b) check_qubit(q);

    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if ((i & control_bit) == 0) continue;
        // Rebuild the index with the a/b bit patterns exchanged.
        std::size_t j = i & ~(mask_a | mask_b);
        for (std::size_t q = 0; q < reg_a.size(); ++q) {
            const std::size_t bit_a = std::size_t{1} << reg_a[q];
            const std::size_t bit_b = std::size_t{1} << reg_b[q];
            if (i & bit_a) j |= bit_b;
            if (i & bit_b) j |= bit_a;
        }
        if (j > i) std::swap(amplitudes_[i], amplitudes_[j]);
    }
    ++op_counts_.cswap_applications;
    check_norm();
}

void StateVector::apply_register_unitary(
    QubitRange reg, const std::vector<std::vector<Amplitude>>& matrix) {
    if (reg.count == 0 || reg.first + reg.count > num_qubits_) {
        throw ValidationError("register does not fit in the state");
    }
    const std::size_t dim = std::size_t{1} << reg.count;
    if (matrix.size() != dim) {
        throw ValidationError("register unitary has dimension " +
                              std::to_string(matrix.size()) + ", expected " +
                              std::to_string(dim));
    }
    for (const auto& row : matrix) {
        if (row.size() != dim) {
            throw ValidationError("register unitary is not square");
        }
    }
    // U† U == I within tolerance.
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            Amplitude entry{0.0, 0.0};
            for (std::size_t k = 0; k < dim; ++k) {
                entry += std::conj(matrix[k][i]) * matrix[k][j];
            }
            const double expected = (i == j) ? 1.0 : 0.0;
            if (std::abs(entry - Amplitude{expected, 0.0}) >
                kRegisterUnitarityTol) {
                throw ValidationError(
                    "register matrix is not unitary within 1e-10");
            }
        }
    }

    const std::size_t reg_mask = (dim - 1) << reg.first;
    std::vector<Amplitude> block(dim);
    for (std::size_t rest = 0; rest < amplitudes_.size(); ++rest) {
        if ((rest & reg_mask) != 0) continue;
        for (std::size_t r = 0; r < dim; ++r) {
            block[r] = amplitudes_[rest | (r << reg.first)];
        }
        for (std::size_t r = 0; r < dim; ++r) {
            Amplitude acc{0.0, 0.0};
            for (std::size_t c = 0; c < dim; ++c) acc += matrix[r][c] * block[c];
            amplitudes_[rest | (r << reg.first)] = acc;
        }
    }
    ++op_counts_.register_unitaries;
    check_norm();
}

bool StateVector::register_in_ground_state(QubitRange reg) const {
    if (reg.count == 0 || reg.first + reg.count > num_qubits_) {
        throw ValidationError("register does not fit in the state");
    }
    const std::size_t reg_mask = ((std::size_t{1} << reg.count) - 1)
                                 << reg.first;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if ((i & reg_mask) != 0 && std::abs(amplitudes_[i]) > 1e-12) {
            return false;
        }
    }
    return true;
}

double StateVector::probability_of_zero(std::size_t qubit) const {
    check_qubit(qubit);
    const std::size_t bit = std::size_t{1} << qubit;
    double p = 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if ((i & bit) == 0) p += std::norm(amplitudes_[i]);
    }
    return p;
}

ShotHistogram StateVector::sample_counts(std::size_t qubit,
                                         std::uint64_t shots,
                                         std::uint64_t seed) const {
    if (shots == 0) {
        throw ValidationError("shots must be at least 1");
    }
    const double p = std::clamp(probability_of_zero(qubit), 0.0, 1.0);
    // One binomial draw per call; identical in distribution to per-shot
    // Bernoulli sampling and identical across calls with the same seed.
    std::mt19937_64 rng(seed);
    std::binomial_distribution<std::uint64_t> binomial(shots, p);
    ShotHistogram histogram;
    histogram.zeros = binomial(rng);
    histogram.ones = shots - histogram.zeros;
    return histogram;
}

} // namespace qkm
