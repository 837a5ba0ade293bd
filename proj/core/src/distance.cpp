#include "qkm/distance.hpp"

#include <cmath>
#include <string>

#include "qkm/errors.hpp"

namespace qkm {

std::uint64_t EstimatorConfig::resolved_shots() const {
    if (shots) return *shots;
    return static_cast<std::uint64_t>(std::ceil(1.0 / (epsilon * epsilon)));
}

void EstimatorConfig::validate() const {
    if (!(epsilon > 0.0 && epsilon < 0.5)) {
        throw ValidationError("epsilon must lie in (0, 0.5)");
    }
    if (shots && *shots == 0) {
        throw ValidationError("shots must be at least 1");
    }
}

StateVector prepare_swap_test_state(const DataPoint& u, const DataSet& set,
                                    RegisterLayout* layout_out) {
    const RegisterLayout layout = make_layout(set.size(), set.padded_dim);
    if (layout_out) *layout_out = layout;

    StateVector state(layout.total_qubits);
    prepare_index_register(state, layout, set.size());
    apply_qram_oracle(state, layout, u, set);
    prepare_norm_register(state, layout, u, set);

    state.apply_gate(gates::hadamard(), layout.ancilla);
    state.apply_controlled_swap(layout.ancilla, layout.psi_index_qubits(),
                                layout.phi_qubits());
    state.apply_gate(gates::hadamard(), layout.ancilla);
    return state;
}

double swap_test_probability_exact(const DataPoint& u, const DataSet& set) {
    RegisterLayout layout;
    const StateVector state = prepare_swap_test_state(u, set, &layout);
    return state.probability_of_zero(layout.ancilla);
}

double swap_test_probability_sampled(const DataPoint& u, const DataSet& set,
                                     const EstimatorConfig& config,
                                     ShotHistogram* histogram_out) {
    config.validate();
    RegisterLayout layout;
    const StateVector state = prepare_swap_test_state(u, set, &layout);
    const ShotHistogram histogram = state.sample_counts(
        layout.ancilla, config.resolved_shots(), config.seed);
    if (histogram_out) *histogram_out = histogram;
    return static_cast<double>(histogram.zeros) /
           static_cast<double>(histogram.shots());
}

RecoveredDistance recover_distance(double p0, ZTerm z) {
    if (!(p0 >= 0.0 && p0 <= 1.0)) {
        throw ValidationError("p0 must lie in [0, 1]");
    }
    if (!(z.value >= 0.0)) {
        throw ValidationError("Z term must be nonnegative");
    }
    const double radicand = 2.0 * z.value * (2.0 * p0 - 1.0);
    if (radicand < 0.0) {
        return {0.0, true};
    }
    return {std::sqrt(radicand), false};
}

DistanceEstimate estimate_distance(const DataPoint& u, const DataSet& set,
                                   const EstimatorConfig& config) {
    config.validate();

    DistanceEstimate estimate;
    estimate.mode = config.mode;
    estimate.seed = config.seed;
    estimate.z = compute_z(u, set);

    RegisterLayout layout;
    const StateVector state = prepare_swap_test_state(u, set, &layout);
    if (config.mode == EstimatorMode::exact) {
        estimate.p0 = state.probability_of_zero(layout.ancilla);
    } else {
        estimate.shots = config.resolved_shots();
        const ShotHistogram histogram =
            state.sample_counts(layout.ancilla, estimate.shots, config.seed);
        estimate.histogram = histogram;
        estimate.p0 = static_cast<double>(histogram.zeros) /
                      static_cast<double>(histogram.shots());
    }

    const RecoveredDistance recovered = recover_distance(estimate.p0, estimate.z);
    estimate.distance = recovered.distance;
    estimate.clamped = recovered.clamped;
    if (config.mode == EstimatorMode::exact && estimate.clamped &&
        2.0 * estimate.p0 - 1.0 >= -1e-12) {
        // An exact marginal can sit a rounding step below one half when the
        // true distance is zero; that is not a genuine clamp.
        estimate.clamped = false;
    }

    const OpCounts& ops = state.op_counts();
    estimate.counts.gate_applications = ops.gate_applications;
    estimate.counts.cswap_applications = ops.cswap_applications;
    estimate.counts.register_unitaries = ops.register_unitaries;
    estimate.counts.amplitude_loads = ops.amplitude_loads;
    estimate.counts.oracle_queries = 1;
    estimate.counts.swap_test_repetitions =
        config.mode == EstimatorMode::sampled ? estimate.shots : 0;
    return estimate;
}

double classical_distance_to_mean(const DataPoint& u, const DataSet& set) {
    if (u.coords.size() != set.padded_dim) {
        throw ValidationError("query and dataset dimensions differ");
    }
    const std::vector<double> mean = mean_point(set);
    double s = 0.0;
    for (std::size_t i = 0; i < mean.size(); ++i) {
        const double diff = u.coords[i] - mean[i];
        s += diff * diff;
    }
    return std::sqrt(s);
}

} // namespace qkm
