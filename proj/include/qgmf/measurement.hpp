#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "qgmf/state_vector.hpp"

namespace qgmf {

// Draws i.i.d. outcomes from the |amplitude|^2 marginal over a qubit
// selection. Outcomes pack qubits[k] into bit k.
class Sampler {
public:
    Sampler(const StateVector& state, std::span<const Qubit> qubits, std::uint64_t seed);

    std::uint64_t draw();
    std::size_t outcome_count() const { return cdf_.size(); }

private:
    std::vector<double> cdf_;
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

std::vector<std::uint64_t> sample(const StateVector& state, std::span<const Qubit> qubits,
                                  std::size_t shots, std::uint64_t seed);

// Convenience over named registers, concatenated in the given order.
std::vector<std::uint64_t> sample(const StateVector& state, std::span<const Register> registers,
                                  std::size_t shots, std::uint64_t seed);

// Derive an independent stream seed from a master seed and a stream label.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream);

}  // namespace qgmf
