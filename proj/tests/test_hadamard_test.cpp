#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qgmf/hadamard_test.hpp"
#include "qgmf/oracle.hpp"

using namespace qgmf;

namespace {

Circuit random_block_circuit(const ValueBlock& b, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ang(-3.1, 3.1);
    Circuit c;
    for (std::size_t k = 0; k < b.width(); ++k) {
        c.add(gate::RY{b.offset + k, ang(rng)}).add(gate::RZ{b.offset + k, ang(rng)});
    }
    for (std::size_t k = 0; k + 1 < b.width(); ++k) c.add(gate::CNOT{b.offset + k, b.offset + k + 1});
    return c;
}

// Re<phi| Z_label^b U |phi> by explicit vector arithmetic.
double direct(const StateVector& phi, const Circuit& u, Qubit label, bool with_z) {
    StateVector up = phi;
    up.apply(u);
    oracle::Vec v(up.amplitudes().begin(), up.amplitudes().end());
    if (with_z) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if ((i >> label) & 1) v[i] = -v[i];
    }
    oracle::Vec p(phi.amplitudes().begin(), phi.amplitudes().end());
    return oracle::inner(p, v).real();
}

}  // namespace

TEST(HadamardTest, IdentityExamples) {
    const auto layout = value_only_layout(3);
    const auto block = layout.value_block();
    Circuit id;
    std::mt19937_64 rng(1);
    StateVector phi(layout, oracle::random_state(4, rng));
    EXPECT_NEAR(hadamard_test(phi, id, block, false), 1.0, 1e-12);

    const auto neg = StateVector::basis(layout, 0b1101);  // overflow set
    EXPECT_NEAR(hadamard_test(neg, id, block, true), -1.0, 1e-12);
    EXPECT_NEAR(hadamard_test(neg, id, false), 1.0, 1e-12);
}

TEST(HadamardTest, ExactMatchesDirectInnerProduct) {
    std::mt19937_64 rng(99);
    RegisterLayout l;
    l.add(Role::Input, 2).add(Role::Value, 2).add(Role::Overflow, 1);
    const auto block = l.value_block();
    for (int t = 0; t < 25; ++t) {
        StateVector phi(l, oracle::random_state(5, rng));
        const auto u = random_block_circuit(block, rng);
        for (bool z : {false, true}) {
            EXPECT_NEAR(hadamard_test(phi, u, block, z), direct(phi, u, block.overflow(), z), 1e-10);
        }
    }
}

TEST(HadamardTest, SampledWithinBinomialBound) {
    std::mt19937_64 rng(7);
    const auto layout = value_only_layout(2);
    const auto block = layout.value_block();
    const std::size_t shots = 10000;
    for (int t = 0; t < 20; ++t) {
        StateVector phi(layout, oracle::random_state(3, rng));
        const auto u = random_block_circuit(block, rng);
        for (bool z : {false, true}) {
            const double exact = hadamard_test(phi, u, block, z);
            const double est = hadamard_test(phi, u, block, z, {EstimateMode::Sampled, shots, 1000u + t});
            EXPECT_LE(std::abs(est - exact), 3.0 / std::sqrt(static_cast<double>(shots)));
        }
    }
}

TEST(HadamardTest, RejectsCircuitsOutsideBlock) {
    RegisterLayout l;
    l.add(Role::Input, 1).add(Role::Value, 2).add(Role::Overflow, 1);
    StateVector phi(l);
    Circuit bad;
    bad.add(gate::X{0});
    EXPECT_THROW(hadamard_test(phi, bad, false), std::invalid_argument);
    const auto with = phi.with_ancilla();
    EXPECT_THROW(hadamard_test(with, Circuit{}, l.value_block(), false), std::invalid_argument);
    EXPECT_THROW(hadamard_test(phi, Circuit{}, l.value_block(), false, {EstimateMode::Sampled, 0, 1}),
                 std::invalid_argument);
}
