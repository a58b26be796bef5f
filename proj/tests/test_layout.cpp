#include <gtest/gtest.h>

#include <stdexcept>

#include "qgmf/layout.hpp"

using namespace qgmf;

TEST(Layout, RegistersAllocateBottomUp) {
    RegisterLayout l;
    l.add(Role::Input, 3).add(Role::Value, 4).add(Role::Overflow, 1);
    EXPECT_EQ(l.total_qubits(), 8u);
    EXPECT_EQ(l.get(Role::Input).offset, 0u);
    EXPECT_EQ(l.get(Role::Value).offset, 3u);
    EXPECT_EQ(l.get(Role::Overflow).offset, 7u);
    const auto b = l.value_block();
    EXPECT_EQ(b.offset, 3u);
    EXPECT_EQ(b.width(), 5u);
    EXPECT_EQ(b.overflow(), 7u);
    EXPECT_EQ(b.mask(), 0b11111000u);
}

TEST(Layout, OverflowMustSitDirectlyAboveValue) {
    RegisterLayout l;
    l.add(Role::Value, 2).add(Role::Input, 1);
    EXPECT_THROW(l.add(Role::Overflow, 1), std::invalid_argument);

    RegisterLayout no_value;
    EXPECT_THROW(no_value.add(Role::Overflow, 1), std::invalid_argument);
}

TEST(Layout, RejectsBadWidthsAndDuplicates) {
    RegisterLayout l;
    EXPECT_THROW(l.add(Role::Value, 0), std::invalid_argument);
    l.add(Role::Value, 2);
    EXPECT_THROW(l.add(Role::Value, 2), std::invalid_argument);
    EXPECT_THROW(l.add(Role::Overflow, 2), std::invalid_argument);
    l.add(Role::VertexColor, 2, 0).add(Role::VertexColor, 2, 1);
    EXPECT_TRUE(l.has(Role::VertexColor, 1));
    EXPECT_FALSE(l.has(Role::VertexColor, 2));
    EXPECT_THROW(l.get(Role::Counter), std::invalid_argument);
    EXPECT_FALSE(l.find(Role::Counter).has_value());
}

TEST(Layout, CapacityGuard) {
    RegisterLayout l(5);
    l.add(Role::Value, 4).add(Role::Overflow, 1);
    EXPECT_THROW(l.with_ancilla(), std::length_error);
    EXPECT_THROW(oracle_layout(12, 10), std::length_error);
    EXPECT_NO_THROW(oracle_layout(11, 10));
}

TEST(Layout, AncillaIsNewTopQubit) {
    const auto l = value_only_layout(3).with_ancilla();
    EXPECT_EQ(l.total_qubits(), 5u);
    EXPECT_EQ(l.get(Role::HadamardAncilla).offset, 4u);
    EXPECT_THROW(l.with_ancilla(), std::invalid_argument);
}

TEST(Layout, ValueBlockNeedsOverflow) {
    RegisterLayout l;
    l.add(Role::Value, 3);
    EXPECT_THROW(l.value_block(), std::invalid_argument);
}
