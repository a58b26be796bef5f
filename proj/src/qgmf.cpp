#include "qgmf/qgmf.hpp"

#include <stdexcept>
#include <string>

#include "qgmf/adder.hpp"
#include "qgmf/measurement.hpp"
#include "qgmf/twos_complement.hpp"

namespace qgmf {
namespace {

std::int64_t floor_half(std::int64_t sum) {
    return sum >= 0 ? sum / 2 : -((-sum + 1) / 2);
}

}  // namespace

const char* to_string(SearchMode mode) {
    return mode == SearchMode::Exact ? "exact" : "variational";
}

ShiftScanner::ShiftScanner(StateVector phi1, ValueBlock block, QgmfConfig config)
    : phi1_(std::move(phi1)), block_(block), config_(config) {
    if (config_.threshold < 1) throw std::invalid_argument("threshold must be at least 1");
    if (config_.mode == SearchMode::Variational && config_.shots == 0) {
        throw std::invalid_argument("variational mode needs at least one shot");
    }
}

StateVector ShiftScanner::shifted(std::int64_t shift) const {
    StateVector phi2 = phi1_;
    apply_shift(phi2, block_, shift);
    return phi2;
}

ShiftProbe ShiftScanner::probe(std::int64_t shift, std::uint64_t stream) const {
    StateVector phi2 = shifted(shift);
    ShiftProbe out;
    if (config_.mode == SearchMode::Exact) {
        out.scan = exact_filter_scan(phi2, block_, config_.threshold, config_.support_cutoff);
        out.good_probability = phi2.probability(block_.overflow(), true);
        return out;
    }

    const std::uint64_t seed = split_seed(config_.seed, stream);
    const AnsatzConfig ansatz{block_.width(), config_.ansatz_layers, AnsatzStyle::LinearDepth};
    const VqsOutcome vqs = optimize(phi2, block_, ansatz, config_.optimizer, split_seed(seed, 1));
    phi2.apply(ansatz_circuit(ansatz, block_.offset, vqs.theta_best));  // now |phi_3>

    ScanOptions scan{EstimateMode::Sampled, config_.shots, split_seed(seed, 2), config_.support_cutoff};
    out.scan = scan_negatives(phi2, block_, config_.threshold, scan);
    out.good_probability = phi2.probability(block_.overflow(), true);
    out.vqs_iterations = vqs.iterations;
    out.vqs_objective = vqs.trace.back();
    return out;
}

NegativeScan exact_filter_scan(const StateVector& phi2, const ValueBlock& block,
                               std::size_t threshold, double support_cutoff) {
    if (threshold < 1) throw std::invalid_argument("threshold must be at least 1");
    const auto qubits = block_qubits(block);
    const auto dist = phi2.marginal(qubits);
    NegativeScan scan;
    for (std::uint64_t v = 0; v < dist.size(); ++v) {
        if (dist[v] <= support_cutoff) continue;
        const std::int64_t y = decode(v, block.width());
        if (y >= 0) continue;
        scan.distinct_values.insert(y);
        scan.frequencies[y] = dist[v];
        if (!scan.y_min || y < *scan.y_min) scan.y_min = y;
        if (scan.distinct_values.size() > threshold) {
            scan.truncated = true;
            break;
        }
    }
    return scan;
}

ConfirmationOutcome confirmation_pass(const ShiftScanner& scanner, const NegativeScan& scan,
                                      std::int64_t shift, std::uint64_t stream) {
    if (!scan.y_min) throw std::invalid_argument("confirmation needs at least one negative value");
    const std::int64_t y_min = *scan.y_min;
    const std::int64_t candidate = y_min - shift;
    const std::int64_t next = shift - y_min + scanner.config().epsilon;

    const auto m = scanner.block().value_width;
    if (next < -(std::int64_t{1} << m) || next > (std::int64_t{1} << m) - 1) {
        throw std::out_of_range("confirmation shift " + std::to_string(next) +
                                " leaves the representable range of the overflow+value block");
    }

    ConfirmationOutcome out;
    out.shift = next;
    out.probe = scanner.probe(next, stream);
    if (out.probe.scan.n_neg() == 0) {
        out.finished = true;
        out.g_m = candidate;
    }
    return out;
}

QgmfResult find_global_minimum(StateVector phi1, const ValueBlock& block, const QgmfConfig& config) {
    const std::size_t m = block.value_width;
    const ShiftScanner scanner(std::move(phi1), block, config);

    QgmfResult result;
    std::int64_t low = -(std::int64_t{1} << (m - 1));
    std::int64_t high = std::int64_t{1} << (m - 1);
    std::uint64_t stream = 0;

    for (std::size_t step = 0; step < config.max_outer_iters; ++step) {
        const std::int64_t s = floor_half(low + high);
        const ShiftProbe probe = scanner.probe(s, stream++);
        const NegClass cls = probe.scan.classify(config.threshold);
        result.trace.push_back(TraceStep{s, low, high, cls, probe.scan.n_neg(), probe.scan.y_min,
                                         probe.good_probability, probe.vqs_iterations});
        result.outer_steps = result.trace.size();

        if (cls == NegClass::ExceedsThreshold) {
            low = s;
            continue;
        }
        if (cls == NegClass::Zero) {
            high = s;
            continue;
        }

        // Confirmation loop: keep lowering the candidate until a re-probe
        // finds nothing below it.
        NegativeScan current = probe.scan;
        std::int64_t shift = s;
        result.final_good_probability = probe.good_probability;
        for (;;) {
            ConfirmationOutcome next = confirmation_pass(scanner, current, shift, stream++);
            ++result.confirmation_passes;
            result.confirmations.push_back(ConfirmationStep{next.shift, next.probe.scan.n_neg(),
                                                            next.probe.scan.y_min,
                                                            next.probe.good_probability});
            if (next.finished) {
                result.g_m = next.g_m;
                return result;
            }
            result.final_good_probability = next.probe.good_probability;
            current = std::move(next.probe.scan);
            shift = next.shift;
        }
    }
    throw std::runtime_error("binary search exceeded " + std::to_string(config.max_outer_iters) +
                             " outer iterations");
}

QgmfResult find_global_minimum(const OracleSpec& oracle, const QgmfConfig& config) {
    StateVector phi1 = prepare_phi1(oracle);
    const ValueBlock block = phi1.layout().value_block();
    return find_global_minimum(std::move(phi1), block, config);
}

}  // namespace qgmf
