#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qgmf/adder.hpp"
#include "qgmf/oracle.hpp"
#include "qgmf/twos_complement.hpp"

using namespace qgmf;

namespace {

RegisterLayout plain(std::size_t n) {
    RegisterLayout l;
    l.add(Role::Value, n);
    return l;
}

}  // namespace

TEST(Adder, ExhaustiveTruthTable) {
    for (std::size_t w = 2; w <= 5; ++w) {
        const std::int64_t n = std::int64_t{1} << w;
        for (std::int64_t s = -n; s < n; ++s) {
            const auto c = build_adder({s, w, 0});
            for (std::int64_t y = 0; y < n; ++y) {
                auto st = StateVector::basis(plain(w), static_cast<std::uint64_t>(y), Exec::Serial);
                st.apply(c);
                const auto target = static_cast<std::uint64_t>(((y + s) % n + n) % n);
                ASSERT_NEAR(std::abs(st[target] - Complex(1.0)), 0.0, 1e-10) << w << ' ' << s << ' ' << y;
            }
        }
    }
}

TEST(Adder, ZeroShiftIsIdentity) {
    const auto c = build_adder({0, 4, 0});
    for (std::uint64_t y = 0; y < 16; ++y) {
        auto st = StateVector::basis(plain(4), y);
        st.apply(c);
        EXPECT_NEAR(std::abs(st[y] - Complex(1.0)), 0.0, 1e-10);
    }
}

TEST(Adder, NegativeShiftUsesComplementConstant) {
    EXPECT_EQ((ShiftSpec{-2, 3, 0}.rotation_constant()), 6u);
    EXPECT_EQ((ShiftSpec{5, 3, 0}.rotation_constant()), 5u);
    auto st = StateVector::basis(plain(3), 0b011);
    st.apply(build_adder({-2, 3, 0}));
    EXPECT_NEAR(std::abs(st[0b001]), 1.0, 1e-10);

    auto wrap = StateVector::basis(plain(3), 0b111);
    wrap.apply(build_adder({1, 3, 0}));
    EXPECT_NEAR(std::abs(wrap[0b000]), 1.0, 1e-10);
}

TEST(Adder, SuperpositionLinearity) {
    std::mt19937_64 rng(17);
    for (std::int64_t s : {-7, -1, 3, 12}) {
        const auto psi = oracle::random_state(4, rng);
        StateVector st(plain(4), psi);
        st.apply(build_adder({s, 4, 0}));
        for (std::uint64_t y = 0; y < 16; ++y) {
            const auto dst = static_cast<std::uint64_t>((static_cast<std::int64_t>(y) + s + 32) % 16);
            EXPECT_NEAR(std::abs(st[dst] - psi[y]), 0.0, 1e-10);
        }
    }
}

TEST(Adder, RotationLayerHasDepthOne) {
    const auto layer = adder_rotation_layer({5, 6, 2});
    EXPECT_EQ(layer.depth(), 1u);
    EXPECT_EQ(layer.counts().rz, 6u);
}

TEST(Adder, ApplyShiftOnSignExtendedValue) {
    // -6 in four value qubits plus overflow; +3 gives -3 with overflow set.
    const auto layout = value_only_layout(4);
    const auto block = layout.value_block();
    auto st = StateVector::basis(layout, sign_extend(encode(-6, 4), 4, 5));
    apply_shift(st, block, 3);
    EXPECT_NEAR(std::abs(st[encode(-3, 5)]), 1.0, 1e-10);
    EXPECT_NEAR(st.probability(block.overflow(), true), 1.0, 1e-10);
}

TEST(Adder, ShiftThenUnshift) {
    std::mt19937_64 rng(3);
    const auto layout = value_only_layout(4);
    StateVector st(layout, oracle::random_state(5, rng));
    const StateVector before = st;
    apply_shift(st, 9);
    apply_shift(st, -9);
    EXPECT_NEAR(fidelity(before, st), 1.0, 1e-10);
    EXPECT_THROW(apply_shift(st, 16), std::out_of_range);
    EXPECT_THROW(apply_shift(st, -17), std::out_of_range);
    EXPECT_NO_THROW(apply_shift(st, -16));
}

TEST(Adder, ShiftClearsNegatives) {
    // Uniform over {2, -7} (m = 4); +7 maps to {9, 0}, nothing negative.
    std::vector<double> a(16, 0.0);
    a[encode(2, 4)] = a[encode(-7, 4)] = 1 / std::numbers::sqrt2;
    auto st = prepare_phi1(AmplitudeVector{4, a});
    const auto block = st.layout().value_block();
    apply_shift(st, block, 7);
    EXPECT_NEAR(std::norm(st[encode(9, 5)]), 0.5, 1e-10);
    EXPECT_NEAR(std::norm(st[encode(0, 5)]), 0.5, 1e-10);
    EXPECT_NEAR(st.probability(block.overflow(), true), 0.0, 1e-10);
}

TEST(Adder, ControlledAdderGating) {
    // Counter on qubits 0..2, controls on 3..6 with required pattern 1010.
    RegisterLayout l;
    l.add(Role::Counter, 3).add(Role::Input, 4);
    const std::vector<gate::Control> ctl{{3, false}, {4, true}, {5, false}, {6, true}};
    const auto c = build_controlled_adder({1, 3, 0}, ctl);
    for (std::uint64_t p = 0; p < 16; ++p) {
        for (std::uint64_t y = 0; y < 8; ++y) {
            auto st = StateVector::basis(l, (p << 3) | y, Exec::Serial);
            st.apply(c);
            const std::uint64_t expect_y = p == 0b1010 ? (y + 1) % 8 : y;
            ASSERT_NEAR(std::abs(st[(p << 3) | expect_y] - Complex(1.0)), 0.0, 1e-10) << p << ' ' << y;
        }
    }
    EXPECT_THROW(build_controlled_adder({1, 3, 0}, {{1, true}}), std::invalid_argument);
}
