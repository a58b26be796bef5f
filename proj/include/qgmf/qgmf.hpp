#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qgmf/oracle.hpp"
#include "qgmf/state_vector.hpp"
#include "qgmf/vqs.hpp"

namespace qgmf {

enum class SearchMode {
    Exact,        // filter negatives straight from the |phi_2(s)> amplitudes
    Variational,  // VQS on |phi_2(s)>, then sample |phi_3(s, theta_best)>
};

const char* to_string(SearchMode mode);

struct QgmfConfig {
    std::size_t threshold = 2;  // T
    SearchMode mode = SearchMode::Exact;
    std::size_t shots = 8000;   // measurements of |phi_3> per scan
    std::size_t max_outer_iters = 64;
    std::int64_t epsilon = 0;   // extra slack on the confirmation shift
    std::uint64_t seed = 0;
    std::size_t ansatz_layers = 0;  // 0: ansatz default
    OptimizerSettings optimizer{};
    double support_cutoff = 1e-20;
};

// One measurement of the shifted function.
struct ShiftProbe {
    NegativeScan scan;
    double good_probability = 0.0;  // P(label = 1) of the measured state
    std::size_t vqs_iterations = 0;
    double vqs_objective = 0.0;
};

struct TraceStep {
    std::int64_t s;
    std::int64_t low;
    std::int64_t high;
    NegClass n_neg_class;
    std::size_t n_neg;
    std::optional<std::int64_t> y_min;
    double good_probability;
    std::size_t vqs_iterations;
};

struct ConfirmationStep {
    std::int64_t s;
    std::size_t n_neg;
    std::optional<std::int64_t> y_min;
    double good_probability;
};

struct QgmfResult {
    std::int64_t g_m = 0;
    std::size_t outer_steps = 0;
    std::size_t confirmation_passes = 0;
    std::vector<TraceStep> trace;
    std::vector<ConfirmationStep> confirmations;
    // Good-subspace probability of the measured state behind the last
    // nonempty scan (the one g_m was read from).
    double final_good_probability = 0.0;
};

// Prepares |phi_2(s)> from a fixed |phi_1> and measures it the configured way.
class ShiftScanner {
public:
    ShiftScanner(StateVector phi1, ValueBlock block, QgmfConfig config);

    ShiftProbe probe(std::int64_t shift, std::uint64_t stream) const;
    StateVector shifted(std::int64_t shift) const;

    const ValueBlock& block() const { return block_; }
    const QgmfConfig& config() const { return config_; }

private:
    StateVector phi1_;
    ValueBlock block_;
    QgmfConfig config_;
};

// Enumerates the block marginal of |phi_2> in ascending block order and keeps
// strictly negative decoded values, stopping once more than `threshold`
// distinct ones are found.
NegativeScan exact_filter_scan(const StateVector& phi2, const ValueBlock& block,
                               std::size_t threshold, double support_cutoff = 1e-20);

struct ConfirmationOutcome {
    bool finished = false;
    std::int64_t g_m = 0;       // valid when finished
    std::int64_t shift = 0;     // shift the new probe was taken at
    ShiftProbe probe;           // the new probe
};

// Candidate g_m = y_min - s. Re-probes at s' = s + |y_min| + epsilon: every
// value already seen becomes non-negative, anything smaller stays negative.
// An empty re-probe confirms the candidate; otherwise the caller adopts the
// new probe and repeats. Throws std::out_of_range if s' leaves the adder's
// representable range.
ConfirmationOutcome confirmation_pass(const ShiftScanner& scanner, const NegativeScan& scan,
                                      std::int64_t shift, std::uint64_t stream);

// Binary search over the shift with the unbalanced-probability confirmation
// loop. Low/High start at -2^(m-1) and 2^(m-1) for an m-qubit value register.
QgmfResult find_global_minimum(const OracleSpec& oracle, const QgmfConfig& config);
QgmfResult find_global_minimum(StateVector phi1, const ValueBlock& block, const QgmfConfig& config);

}  // namespace qgmf
