#include "qgmf/measurement.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgmf {

Sampler::Sampler(const StateVector& state, std::span<const Qubit> qubits, std::uint64_t seed)
    : rng_(seed) {
    const auto dist = state.marginal(qubits);
    cdf_.resize(dist.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        acc += dist[i];
        cdf_[i] = acc;
    }
}

std::uint64_t Sampler::draw() {
    const double u = unit_(rng_) * cdf_.back();
    // The first cumulative value strictly above u always closes a
    // positive-probability slot.
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.end()) {
        it = std::lower_bound(cdf_.begin(), cdf_.end(), cdf_.back());
    }
    return static_cast<std::uint64_t>(it - cdf_.begin());
}

std::vector<std::uint64_t> sample(const StateVector& state, std::span<const Qubit> qubits,
                                  std::size_t shots, std::uint64_t seed) {
    if (shots == 0) throw std::invalid_argument("shots must be at least 1");
    Sampler sampler(state, qubits, seed);
    std::vector<std::uint64_t> out(shots);
    for (auto& o : out) o = sampler.draw();
    return out;
}

std::vector<std::uint64_t> sample(const StateVector& state, std::span<const Register> registers,
                                  std::size_t shots, std::uint64_t seed) {
    std::vector<Qubit> qubits;
    for (const auto& r : registers) {
        const auto q = register_qubits(r);
        qubits.insert(qubits.end(), q.begin(), q.end());
    }
    return sample(state, qubits, shots, seed);
}

std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) {
    // splitmix64 finalizer over the combined key
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace qgmf
