#include "qgmf/vqs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qgmf/measurement.hpp"
#include "qgmf/twos_complement.hpp"

namespace qgmf {
namespace {

using Pair = std::pair<std::size_t, std::size_t>;

std::vector<Pair> brick(std::size_t q, std::size_t layer) {
    std::vector<Pair> pairs;
    const std::size_t start = (layer % 2 == 1 && q > 2) ? 1 : 0;
    for (std::size_t a = start; a + 1 < q; a += 2) pairs.emplace_back(a, a + 1);
    return pairs;
}

std::size_t pauli_string_count(std::size_t q) { return (std::size_t{1} << (2 * q)) - 1; }

}  // namespace

// ---------------------------------------------------------------------------

std::size_t AnsatzConfig::effective_layers() const {
    if (layers != 0) return layers;
    return style == AnsatzStyle::LinearDepth ? num_qubits : 2;
}

std::size_t AnsatzConfig::parameter_count() const {
    const std::size_t l = effective_layers();
    if (style == AnsatzStyle::FullRankTiny) return l * pauli_string_count(num_qubits);
    std::size_t count = 0;
    for (std::size_t layer = 0; layer < l; ++layer) count += 2 * num_qubits + brick(num_qubits, layer).size();
    return count;
}

Circuit ansatz_circuit(const AnsatzConfig& config, Qubit offset, std::span<const double> theta) {
    const std::size_t q = config.num_qubits;
    if (q == 0) throw std::invalid_argument("ansatz needs at least one qubit");
    if (config.style == AnsatzStyle::FullRankTiny && q > kFullRankTinyMaxQubits) {
        throw std::invalid_argument("full-rank ansatz is limited to 3 qubits");
    }
    if (theta.size() != config.parameter_count()) {
        throw std::invalid_argument("ansatz expects " + std::to_string(config.parameter_count()) +
                                    " angles, got " + std::to_string(theta.size()));
    }
    for (double t : theta) {
        if (!std::isfinite(t)) throw std::invalid_argument("ansatz angle is not finite");
    }

    Circuit c;
    std::size_t k = 0;
    const std::size_t l = config.effective_layers();
    if (config.style == AnsatzStyle::LinearDepth) {
        for (std::size_t layer = 0; layer < l; ++layer) {
            for (std::size_t j = 0; j < q; ++j) c.add(gate::RY{offset + j, theta[k++]});
            for (std::size_t j = 0; j < q; ++j) c.add(gate::RZ{offset + j, theta[k++]});
            for (const auto& [a, b] : brick(q, layer)) {
                c.add(gate::PauliRotation{{offset + a, offset + b}, "ZZ", theta[k++]});
            }
        }
        return c;
    }

    static constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};
    for (std::size_t rep = 0; rep < l; ++rep) {
        for (std::size_t code = 1; code <= pauli_string_count(q); ++code) {
            gate::PauliRotation rot{{}, {}, theta[k++]};
            for (std::size_t j = 0; j < q; ++j) {
                const char p = kLetters[(code >> (2 * j)) & 3];
                if (p == 'I') continue;
                rot.qubits.push_back(offset + j);
                rot.paulis.push_back(p);
            }
            c.add(std::move(rot));
        }
    }
    return c;
}

// ---------------------------------------------------------------------------

ObjectiveValue objective(const StateVector& phi2, const ValueBlock& block, const Circuit& u,
                         const HadamardTestOptions& options) {
    HadamardTestOptions o1 = options, o2 = options;
    o1.seed = split_seed(options.seed, 1);
    o2.seed = split_seed(options.seed, 2);
    const double z1 = hadamard_test(phi2, u, block, false, o1);
    const double z2 = hadamard_test(phi2, u, block, true, o2);
    return {-0.5 * (z1 - z2), z1, z2};
}

ObjectiveValue objective(const StateVector& phi2, const ValueBlock& block,
                         const AnsatzConfig& config, std::span<const double> theta,
                         const HadamardTestOptions& options) {
    return objective(phi2, block, ansatz_circuit(config, block.offset, theta), options);
}

namespace {

// Objective floor is -1; nothing can beat it.
constexpr double kFloor = -1.0 + 1e-12;
// Gains below this are rounding noise. Taking them would walk away from the
// identity on a flat landscape (no good element at all).
constexpr double kMinGain = 1e-12;

// Coordinate sweeps from `theta` until stationary or plateaued, with perturbed
// restarts from the best point. Appends to `out` and spends from the shared
// sweep budget. Returns true when it stopped on its own.
template <typename Eval>
bool descend(Eval&& evaluate, std::vector<double> theta, const OptimizerSettings& settings,
             std::size_t restarts_left, std::mt19937_64& rng, VqsOutcome& out, double& best) {
    const std::size_t n = theta.size();
    std::uniform_real_distribution<double> jitter(-settings.restart_scale, settings.restart_scale);
    double f = evaluate(theta);
    std::vector<double> window{f};

    while (out.iterations < settings.max_iterations && best > kFloor) {
        const double before = f;
        for (std::size_t k = 0; k < n; ++k) {
            const double t0 = theta[k];
            theta[k] = t0 + std::numbers::pi;
            const double f_plus = evaluate(theta);
            theta[k] = t0 - std::numbers::pi;
            const double f_minus = evaluate(theta);
            // f(t0 + 2y) = a cos y + b sin y + c
            const double c = 0.5 * (f_plus + f_minus);
            const double b = 0.5 * (f_plus - f_minus);
            const double a = f - c;
            const double y = std::atan2(-b, -a);
            const double predicted = c - std::hypot(a, b);
            if (predicted < f - kMinGain) {
                theta[k] = t0 + 2.0 * y;
                const double actual = evaluate(theta);
                if (actual < f - kMinGain) {
                    f = actual;
                    continue;
                }
            }
            theta[k] = t0;
        }
        ++out.iterations;
        if (f < best - kMinGain) {
            best = f;
            out.theta_best = theta;
        }
        out.trace.push_back(best);
        window.push_back(f);

        const bool stationary = before - f <= kMinGain;
        bool plateau = false;
        if (window.size() > settings.patience) {
            const double old = window[window.size() - 1 - settings.patience];
            plateau = old - f <= settings.plateau_tolerance * std::max(std::abs(f), 1e-12);
        }
        if (stationary || plateau) {
            if (restarts_left == 0 || best <= kFloor) return true;
            --restarts_left;
            theta = out.theta_best;
            for (auto& t : theta) t += jitter(rng);
            f = evaluate(theta);
            window.assign(1, f);
        }
    }
    return best <= kFloor;
}

}  // namespace

VqsOutcome optimize(const StateVector& phi2, const ValueBlock& block, const AnsatzConfig& config,
                    const OptimizerSettings& settings, std::uint64_t seed) {
    if (config.num_qubits != block.width()) {
        throw std::invalid_argument("ansatz width does not match the overflow+value block");
    }
    std::uint64_t evaluations = 0;
    std::mt19937_64 rng(split_seed(seed, 0));

    // Layer-wise growth: solve with the first layer, then append one zeroed
    // (identity) layer at a time and continue from the best point so far.
    // Angles are stored layer-major, so a prefix of theta is a shallower
    // ansatz.
    const std::size_t layers = config.effective_layers();
    const bool grow = settings.grow_layers && config.style == AnsatzStyle::LinearDepth;
    const std::size_t first = grow ? 1 : layers;

    VqsOutcome out;
    out.theta_best.assign(AnsatzConfig{config.num_qubits, first, config.style}.parameter_count(), 0.0);
    double best = 0.0, start = 0.0;
    bool converged = false;
    for (std::size_t l = first; l <= layers; ++l) {
        const AnsatzConfig stage{config.num_qubits, l, config.style};
        auto evaluate = [&](std::span<const double> theta) {
            HadamardTestOptions o{settings.mode, settings.shots, split_seed(seed, ++evaluations)};
            return objective(phi2, block, stage, theta, o).value;
        };
        std::vector<double> theta = out.theta_best;
        theta.resize(stage.parameter_count(), 0.0);
        if (l == first) {
            best = start = evaluate(theta);
            out.trace.push_back(best);
        }
        out.theta_best = theta;
        // Restarts exist to leave the flat region around the identity. A stage
        // only starts there if every shallower stage failed to move.
        const std::size_t restarts = best >= start - kMinGain ? settings.restarts : 0;
        converged = descend(evaluate, theta, settings, restarts, rng, out, best);
        if (best <= kFloor || out.iterations >= settings.max_iterations) break;
    }
    out.theta_best.resize(config.parameter_count(), 0.0);
    out.converged = converged || best <= kFloor;
    return out;
}

// ---------------------------------------------------------------------------

const char* to_string(NegClass c) {
    switch (c) {
        case NegClass::Zero: return "zero";
        case NegClass::InRange: return "in_range";
        case NegClass::ExceedsThreshold: return "exceeds_threshold";
    }
    return "unknown";
}

NegClass NegativeScan::classify(std::size_t threshold) const {
    if (n_neg() == 0) return NegClass::Zero;
    return n_neg() <= threshold ? NegClass::InRange : NegClass::ExceedsThreshold;
}

NegativeScan scan_negatives(const StateVector& phi3, const ValueBlock& block,
                            std::size_t threshold, const ScanOptions& options) {
    if (threshold < 1) throw std::invalid_argument("threshold must be at least 1");
    const std::size_t width = block.width();
    NegativeScan scan;

    auto record = [&](std::int64_t y, double weight) {
        if (y >= 0) return false;
        scan.distinct_values.insert(y);
        scan.frequencies[y] += weight;
        if (!scan.y_min || y < *scan.y_min) scan.y_min = y;
        if (scan.distinct_values.size() > threshold) {
            scan.truncated = true;
            return true;
        }
        return false;
    };

    if (options.mode == EstimateMode::Exact) {
        const auto amps = phi3.amplitudes();
        for (std::uint64_t i = 0; i < amps.size(); ++i) {
            const double p = std::norm(amps[i]);
            if (p <= options.support_cutoff) continue;
            const std::uint64_t bits = (i >> block.offset) & ((std::uint64_t{1} << width) - 1);
            if (record(decode(bits, width), p)) break;
        }
        return scan;
    }

    if (options.shots == 0) throw std::invalid_argument("shots must be at least 1");
    const auto qubits = block_qubits(block);
    Sampler sampler(phi3, qubits, options.seed);
    std::map<std::int64_t, std::size_t> counts;
    for (std::size_t shot = 0; shot < options.shots; ++shot) {
        ++scan.shots_used;
        const std::int64_t y = decode(sampler.draw(), width);
        if (y < 0) ++counts[y];
        if (record(y, 0.0)) break;
    }
    for (const auto& [y, n] : counts) {
        scan.frequencies[y] = static_cast<double>(n) / static_cast<double>(scan.shots_used);
    }
    return scan;
}

}  // namespace qgmf
