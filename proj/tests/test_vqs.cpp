#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qgmf/oracle.hpp"
#include "qgmf/twos_complement.hpp"
#include "qgmf/vqs.hpp"

using namespace qgmf;

namespace {

// |phi_2> over the block of an m-qubit value register with the given
// (value, weight) branches; weights are squared amplitudes.
StateVector block_state(std::size_t m, const std::vector<std::pair<std::int64_t, double>>& branches) {
    const auto layout = value_only_layout(m);
    std::vector<Complex> a(std::size_t{1} << (m + 1));
    for (const auto& [v, w] : branches) a[encode(v, m + 1)] = std::sqrt(w);
    return StateVector(layout, std::move(a));
}

std::vector<double> random_theta(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    std::vector<double> t(n);
    for (auto& x : t) x = d(rng);
    return t;
}

}  // namespace

TEST(Ansatz, ZeroAnglesGiveIdentity) {
    std::mt19937_64 rng(5);
    for (auto style : {AnsatzStyle::LinearDepth, AnsatzStyle::FullRankTiny}) {
        const AnsatzConfig cfg{3, 0, style};
        const std::vector<double> zero(cfg.parameter_count(), 0.0);
        const auto layout = value_only_layout(2);
        StateVector s(layout, oracle::random_state(3, rng));
        const StateVector before = s;
        s.apply(ansatz_circuit(cfg, 0, zero));
        EXPECT_NEAR(fidelity(before, s), 1.0, 1e-12);
    }
}

TEST(Ansatz, ParameterCountAndDepth) {
    for (std::size_t q = 2; q <= 8; ++q) {
        const AnsatzConfig cfg{q, 0, AnsatzStyle::LinearDepth};
        EXPECT_EQ(cfg.effective_layers(), q);
        std::size_t expect = 0;
        for (std::size_t l = 0; l < q; ++l) expect += 2 * q + (l % 2 == 0 || q == 2 ? q / 2 : (q - 1) / 2);
        EXPECT_EQ(cfg.parameter_count(), expect);
        const std::vector<double> t(cfg.parameter_count(), 0.1);
        const auto c = ansatz_circuit(cfg, 0, t);
        EXPECT_EQ(c.size(), cfg.parameter_count());
        EXPECT_LE(c.depth(), 3 * q);
        EXPECT_EQ(ansatz_circuit({q, 1, AnsatzStyle::LinearDepth}, 0,
                                 std::vector<double>(AnsatzConfig{q, 1, AnsatzStyle::LinearDepth}.parameter_count(), 0.1))
                      .depth(),
                  3u);
    }
    EXPECT_EQ((AnsatzConfig{2, 1, AnsatzStyle::FullRankTiny}.parameter_count()), 15u);
    EXPECT_EQ((AnsatzConfig{3, 1, AnsatzStyle::FullRankTiny}.parameter_count()), 63u);
}

TEST(Ansatz, RejectsBadInput) {
    EXPECT_THROW(ansatz_circuit({4, 1, AnsatzStyle::FullRankTiny}, 0, std::vector<double>(255)),
                 std::invalid_argument);
    EXPECT_THROW(ansatz_circuit({3, 1, AnsatzStyle::LinearDepth}, 0, std::vector<double>(2)),
                 std::invalid_argument);
    AnsatzConfig cfg{2, 1, AnsatzStyle::LinearDepth};
    std::vector<double> t(cfg.parameter_count(), 0.0);
    t[0] = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(ansatz_circuit(cfg, 0, t), std::invalid_argument);
}

TEST(Objective, IdentityExamples) {
    const Circuit id;
    const auto all_neg = block_state(2, {{-1, 1.0}});
    EXPECT_NEAR(objective(all_neg, all_neg.layout().value_block(), id).value, -1.0, 1e-12);
    const auto none = block_state(2, {{1, 0.5}, {0, 0.5}});
    EXPECT_NEAR(objective(none, none.layout().value_block(), id).value, 0.0, 1e-12);
    const auto half = block_state(2, {{1, 0.5}, {-2, 0.5}});
    EXPECT_NEAR(objective(half, half.layout().value_block(), id).value, -0.5, 1e-12);
}

// f = -Re<phi| P_1 U |phi> with P_1 the projector onto a set label.
TEST(Objective, EqualsProjectedOverlap) {
    std::mt19937_64 rng(11);
    const AnsatzConfig cfg{4, 2, AnsatzStyle::LinearDepth};
    const auto layout = value_only_layout(3);
    const auto block = layout.value_block();
    for (int t = 0; t < 20; ++t) {
        StateVector phi(layout, oracle::random_state(4, rng));
        const auto theta = random_theta(cfg.parameter_count(), rng);
        StateVector up = phi;
        up.apply(ansatz_circuit(cfg, block.offset, theta));
        Complex proj{0.0};
        for (std::uint64_t i = 0; i < phi.dimension(); ++i) {
            if ((i >> block.overflow()) & 1) proj += std::conj(phi[i]) * up[i];
        }
        const auto f = objective(phi, block, cfg, theta);
        EXPECT_NEAR(f.value, -proj.real(), 1e-10);
        EXPECT_NEAR(f.value, -0.5 * (f.z1 - f.z2), 1e-15);
        // The bound -sqrt(p_good) holds everywhere.
        EXPECT_GE(f.value, -std::sqrt(phi.probability(block.overflow(), true)) - 1e-12);
    }
}

TEST(Objective, SampledIsUnbiased) {
    std::mt19937_64 rng(21);
    const AnsatzConfig cfg{3, 1, AnsatzStyle::LinearDepth};
    const auto layout = value_only_layout(2);
    const auto block = layout.value_block();
    StateVector phi(layout, oracle::random_state(3, rng));
    const auto theta = random_theta(cfg.parameter_count(), rng);
    const double exact = objective(phi, block, cfg, theta).value;
    const std::size_t shots = 2000, reps = 200;
    double mean = 0.0;
    for (std::size_t r = 0; r < reps; ++r) {
        mean += objective(phi, block, cfg, theta, {EstimateMode::Sampled, shots, 100 + r}).value;
    }
    mean /= reps;
    // Each Hadamard test has variance <= 1/shots; f halves their difference.
    const double sigma = std::sqrt(0.5 / (shots * reps));
    EXPECT_LE(std::abs(mean - exact), 3 * sigma);
}

TEST(Optimizer, AlreadyOptimalStaysPut) {
    const auto phi = block_state(3, {{-3, 0.5}, {-5, 0.5}});
    const auto block = phi.layout().value_block();
    const auto out = optimize(phi, block, {block.width(), 0, AnsatzStyle::LinearDepth}, {}, 1);
    EXPECT_LE(out.iterations, 100u);
    EXPECT_NEAR(out.trace.back(), -1.0, 1e-9);
    EXPECT_TRUE(out.converged);
}

TEST(Optimizer, NoGoodStateStaysNearZero) {
    const auto phi = block_state(3, {{0, 0.25}, {3, 0.5}, {6, 0.25}});
    const auto block = phi.layout().value_block();
    const AnsatzConfig cfg{block.width(), 0, AnsatzStyle::LinearDepth};
    const auto out = optimize(phi, block, cfg, {}, 2);
    EXPECT_GE(out.trace.back(), -0.05);
    EXPECT_EQ(out.theta_best.size(), cfg.parameter_count());
    // Nothing was gained, so the identity is kept.
    for (double t : out.theta_best) EXPECT_EQ(t, 0.0);
}

// The good branch is three or four bit flips away from every bad branch, so
// theta = 0 is a saddle (f = -0.3) that single-angle moves cannot leave.
TEST(Optimizer, LeavesIdentitySaddle) {
    const auto phi = block_state(3, {{-2, 0.3}, {1, 0.4}, {5, 0.3}});
    const auto block = phi.layout().value_block();
    const auto out = optimize(phi, block, {block.width(), 0, AnsatzStyle::LinearDepth}, {}, 3);
    ASSERT_FALSE(out.trace.empty());
    for (std::size_t i = 1; i < out.trace.size(); ++i) EXPECT_LE(out.trace[i], out.trace[i - 1] + 1e-15);
    EXPECT_LT(out.trace.back(), -0.4);
    EXPECT_GE(out.trace.back(), -std::sqrt(0.3) - 1e-12);
}

TEST(Optimizer, FullRankReachesBound) {
    std::mt19937_64 rng(8);
    const auto layout = value_only_layout(1);
    const auto block = layout.value_block();
    const AnsatzConfig cfg{2, 0, AnsatzStyle::FullRankTiny};
    for (int t = 0; t < 5; ++t) {
        StateVector phi(layout, oracle::random_state(2, rng));
        const double p = phi.probability(block.overflow(), true);
        const auto out = optimize(phi, block, cfg, {}, t);
        EXPECT_NEAR(out.trace.back(), -std::sqrt(p), 1e-3);
    }
    const auto half = block_state(1, {{0, 0.5}, {-1, 0.5}});
    EXPECT_NEAR(optimize(half, half.layout().value_block(), cfg, {}, 0).trace.back(),
                -1 / std::numbers::sqrt2, 1e-3);
}

TEST(Optimizer, Deterministic) {
    const auto phi = block_state(3, {{-2, 0.1}, {1, 0.6}, {5, 0.3}});
    const auto block = phi.layout().value_block();
    const AnsatzConfig cfg{block.width(), 0, AnsatzStyle::LinearDepth};
    const auto a = optimize(phi, block, cfg, {}, 77);
    const auto b = optimize(phi, block, cfg, {}, 77);
    EXPECT_EQ(a.theta_best, b.theta_best);
    EXPECT_EQ(a.trace, b.trace);
}

TEST(Scan, SingleNegative) {
    const auto phi = block_state(3, {{-4, 1.0}});
    const auto scan = scan_negatives(phi, phi.layout().value_block(), 2, {EstimateMode::Sampled, 100, 1});
    EXPECT_EQ(scan.n_neg(), 1u);
    EXPECT_EQ(scan.y_min, -4);
    EXPECT_EQ(scan.classify(2), NegClass::InRange);
    EXPECT_FALSE(scan.truncated);
}

TEST(Scan, TruncatesAboveThreshold) {
    const auto phi = block_state(3, {{-1, 0.2}, {-2, 0.2}, {-3, 0.2}, {-4, 0.2}, {-5, 0.2}});
    const auto block = phi.layout().value_block();
    for (auto mode : {EstimateMode::Exact, EstimateMode::Sampled}) {
        const auto scan = scan_negatives(phi, block, 2, {mode, 8000, 4});
        EXPECT_TRUE(scan.truncated);
        EXPECT_EQ(scan.n_neg(), 3u);
        EXPECT_EQ(scan.classify(2), NegClass::ExceedsThreshold);
        for (auto v : scan.distinct_values) EXPECT_LT(v, 0);
    }
}

TEST(Scan, NoNegatives) {
    const auto phi = block_state(3, {{0, 0.5}, {7, 0.5}});
    const auto scan = scan_negatives(phi, phi.layout().value_block(), 2, {EstimateMode::Sampled, 500, 9});
    EXPECT_EQ(scan.n_neg(), 0u);
    EXPECT_FALSE(scan.y_min.has_value());
    EXPECT_EQ(scan.classify(2), NegClass::Zero);
    EXPECT_EQ(scan.shots_used, 500u);
    EXPECT_THROW(scan_negatives(phi, phi.layout().value_block(), 0, {}), std::invalid_argument);
}

TEST(Scan, ExactFrequenciesAreProbabilities) {
    const auto phi = block_state(3, {{-6, 0.25}, {-1, 0.5}, {2, 0.25}});
    const auto scan = scan_negatives(phi, phi.layout().value_block(), 4, {EstimateMode::Exact, 0, 0});
    EXPECT_EQ(scan.y_min, -6);
    EXPECT_NEAR(scan.frequencies.at(-6), 0.25, 1e-12);
    EXPECT_NEAR(scan.frequencies.at(-1), 0.5, 1e-12);
}
