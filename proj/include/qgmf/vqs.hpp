#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "qgmf/circuit.hpp"
#include "qgmf/hadamard_test.hpp"
#include "qgmf/state_vector.hpp"

namespace qgmf {

// ---------------------------------------------------------------------------
// Ansatz

enum class AnsatzStyle {
    // Per layer: RY column, RZ column, one brick of nearest-neighbour ZZ
    // rotations (even pairs on even layers, odd pairs on odd layers). Every
    // layer has depth 3.
    LinearDepth,
    // A product of Pauli rotations over every non-identity Pauli string,
    // repeated `layers` times. Covers the full unitary group; only for
    // registers of at most 3 qubits.
    FullRankTiny,
};

struct AnsatzConfig {
    std::size_t num_qubits = 2;  // overflow + value
    std::size_t layers = 0;      // 0 selects the style default
    AnsatzStyle style = AnsatzStyle::LinearDepth;

    std::size_t effective_layers() const;
    std::size_t parameter_count() const;
};

inline constexpr std::size_t kFullRankTinyMaxQubits = 3;

// Every angle drives exactly one rotation gate, and all angles zero give the
// identity.
Circuit ansatz_circuit(const AnsatzConfig& config, Qubit offset, std::span<const double> theta);

// ---------------------------------------------------------------------------
// Objective

struct ObjectiveValue {
    double value;  // -0.5 (<Z1> - <Z2>)
    double z1;
    double z2;
};

// f(theta) = -0.5 (<Z1> - <Z2>) with both terms from Hadamard tests on the
// overflow+value block. Sampled mode draws `options.shots` per test, with the
// two tests on independent streams split from `options.seed`.
ObjectiveValue objective(const StateVector& phi2, const ValueBlock& block, const Circuit& u,
                         const HadamardTestOptions& options = {});
ObjectiveValue objective(const StateVector& phi2, const ValueBlock& block,
                         const AnsatzConfig& config, std::span<const double> theta,
                         const HadamardTestOptions& options = {});

// ---------------------------------------------------------------------------
// Optimizer

struct OptimizerSettings {
    std::size_t max_iterations = 500;  // coordinate sweeps
    double plateau_tolerance = 1e-4;   // relative improvement over the window
    std::size_t patience = 30;         // sweeps in the plateau window
    std::size_t restarts = 1;          // perturbed restarts from the best point
    double restart_scale = 1.5;        // radians, perturbation half-width
    // Linear-depth ansatz only: optimize one layer, then add layers one at a
    // time starting from the identity.
    bool grow_layers = true;
    EstimateMode mode = EstimateMode::Exact;
    std::size_t shots = 8000;          // per Hadamard test in sampled mode
};

struct VqsOutcome {
    std::vector<double> theta_best;
    std::vector<double> trace;  // best objective after each sweep; trace[0] is the start
    std::size_t iterations = 0;
    bool converged = false;
};

// Sweeps the angles one at a time. The objective is a sinusoid in each angle
// (period 4 pi), so three evaluations per angle fix it and the angle jumps to
// the fitted minimum; moves that do not lower the objective are rejected.
// Starts at theta = 0 (the identity), so a state that is already optimal is
// left untouched. The sweep budget is shared across growth stages.
VqsOutcome optimize(const StateVector& phi2, const ValueBlock& block, const AnsatzConfig& config,
                    const OptimizerSettings& settings, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Negative-value scan

enum class NegClass { Zero, InRange, ExceedsThreshold };

const char* to_string(NegClass c);

struct NegativeScan {
    std::set<std::int64_t> distinct_values;   // all strictly negative
    std::map<std::int64_t, double> frequencies;  // probability (exact) or empirical share
    std::optional<std::int64_t> y_min;
    bool truncated = false;  // stopped once more than T distinct negatives were seen
    std::size_t shots_used = 0;

    std::size_t n_neg() const { return distinct_values.size(); }
    NegClass classify(std::size_t threshold) const;
};

struct ScanOptions {
    EstimateMode mode = EstimateMode::Sampled;
    std::size_t shots = 8000;
    std::uint64_t seed = 0;
    double support_cutoff = 1e-20;  // exact mode: ignore |amp|^2 at or below
};

// Decodes overflow+value outcomes as (m+1)-bit two's complement and keeps the
// strictly negative ones; non-negative outcomes are discarded. Stops as soon as
// more than `threshold` distinct negatives have been seen. Exact mode walks the
// nonzero amplitudes in index order.
NegativeScan scan_negatives(const StateVector& phi3, const ValueBlock& block,
                            std::size_t threshold, const ScanOptions& options);

}  // namespace qgmf
