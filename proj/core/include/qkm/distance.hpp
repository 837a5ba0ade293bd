#pragma once

#include <cstdint>
#include <optional>

#include "qkm/dataset.hpp"
#include "qkm/encoding.hpp"
#include "qkm/statevector.hpp"

namespace qkm {

enum class EstimatorMode { exact, sampled };

/// How a single distance estimate is produced: either the exact ancilla
/// marginal, or a seeded shot histogram. When `shots` is unset, sampled
/// mode uses ceil(1/epsilon^2) repetitions.
struct EstimatorConfig {
    EstimatorMode mode = EstimatorMode::exact;
    std::optional<std::uint64_t> shots;
    double epsilon = 0.05;
    std::uint64_t seed = 0;

    std::uint64_t resolved_shots() const;
    void validate() const;
};

/// Work done by one estimate, for reporting.
struct CircuitCounts {
    std::uint64_t gate_applications = 0;
    std::uint64_t cswap_applications = 0;
    std::uint64_t register_unitaries = 0;
    std::uint64_t amplitude_loads = 0;
    std::uint64_t oracle_queries = 0;
    std::uint64_t swap_test_repetitions = 0;
};

/// A distance estimate plus everything needed to reproduce it.
struct DistanceEstimate {
    double p0 = 0.0;
    ZTerm z;
    double distance = 0.0;
    bool clamped = false;
    EstimatorMode mode = EstimatorMode::exact;
    std::uint64_t shots = 0; // 0 in exact mode
    std::uint64_t seed = 0;
    CircuitCounts counts;
    std::optional<ShotHistogram> histogram; // present in sampled mode
};

struct RecoveredDistance {
    double distance = 0.0;
    bool clamped = false;
};

/// Assembles the full estimator circuit: index superposition, conditional
/// data loading, norm register, then Hadamard / controlled-SWAP (index
/// against norm register) / Hadamard on the ancilla. If `layout_out` is
/// non-null it receives the register layout used.
StateVector prepare_swap_test_state(const DataPoint& u, const DataSet& set,
                                    RegisterLayout* layout_out = nullptr);

/// Ancilla-0 probability read exactly from the final statevector.
double swap_test_probability_exact(const DataPoint& u, const DataSet& set);

/// Ancilla-0 probability estimated from seeded measurement counts. If
/// `histogram_out` is non-null it receives the raw counts.
double swap_test_probability_sampled(const DataPoint& u, const DataSet& set,
                                     const EstimatorConfig& config,
                                     ShotHistogram* histogram_out = nullptr);

/// Inverts the probability into a distance: sqrt(2 * z * (2*p0 - 1)) when
/// the radicand is nonnegative, otherwise distance 0 with the clamped flag
/// set. Never produces NaN for p0 in [0, 1], z >= 0.
RecoveredDistance recover_distance(double p0, ZTerm z);

/// The composite estimator: Z term, configured swap-test mode, then
/// distance recovery. In exact mode the result equals the classical
/// distance to the set mean within 1e-9.
DistanceEstimate estimate_distance(const DataPoint& u, const DataSet& set,
                                   const EstimatorConfig& config);

/// Brute-force reference: the Euclidean norm of u - mean(set).
double classical_distance_to_mean(const DataPoint& u, const DataSet& set);

} // namespace qkm
