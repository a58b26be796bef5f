#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qgmf/twos_complement.hpp"

using namespace qgmf;

// Four-bit two's complement table, one row per bit pattern.
TEST(TwosComplement, FourBitTable) {
    const std::pair<std::uint64_t, std::int64_t> table[16] = {
        {0b0000, 0},  {0b0001, 1},  {0b0010, 2},  {0b0011, 3},  {0b0100, 4},  {0b0101, 5},
        {0b0110, 6},  {0b0111, 7},  {0b1000, -8}, {0b1001, -7}, {0b1010, -6}, {0b1011, -5},
        {0b1100, -4}, {0b1101, -3}, {0b1110, -2}, {0b1111, -1},
    };
    for (const auto& [bits, value] : table) {
        EXPECT_EQ(decode(bits, 4), value);
        EXPECT_EQ(encode(value, 4), bits);
    }
}

TEST(TwosComplement, EncodeExamples) {
    EXPECT_EQ(encode(5, 4), 0b0101u);
    EXPECT_EQ(encode(-5, 4), 0b1011u);
    EXPECT_EQ(encode(-8, 4), 0b1000u);
    EXPECT_THROW(encode(8, 4), std::out_of_range);
    EXPECT_THROW(encode(-9, 4), std::out_of_range);
    EXPECT_THROW(decode(16, 4), std::out_of_range);
    EXPECT_THROW(encode(0, 0), std::invalid_argument);
}

TEST(TwosComplement, RoundTripAndSignBit) {
    for (std::size_t w = 1; w <= 8; ++w) {
        EXPECT_EQ(min_value(w), -(std::int64_t{1} << (w - 1)));
        EXPECT_EQ(max_value(w), (std::int64_t{1} << (w - 1)) - 1);
        for (std::int64_t v = min_value(w); v <= max_value(w); ++v) {
            const auto i = encode(v, w);
            EXPECT_EQ(i, oracle::encode(v, w));
            EXPECT_EQ(decode(i, w), v);
            EXPECT_EQ(is_negative(i, w), v < 0);
            EXPECT_EQ(((i >> (w - 1)) & 1) == 1, v < 0);
        }
    }
}

TEST(TwosComplement, SignExtension) {
    EXPECT_EQ(sign_extend(0b1010, 4, 5), 0b11010u);
    EXPECT_EQ(sign_extend(0b0101, 4, 5), 0b00101u);
    for (std::int64_t v = -8; v <= 7; ++v) {
        EXPECT_EQ(decode(sign_extend(encode(v, 4), 4, 8), 8), v);
    }
    EXPECT_THROW(sign_extend(0b1, 4, 3), std::invalid_argument);
}

TEST(TwosComplement, AdditionWorkedExample) {
    // -6 + -3 with one extra position: 10111 = -9.
    const auto sum = signed_add({-6, 4}, {-3, 4});
    EXPECT_EQ(sum.width, 5u);
    EXPECT_EQ(sum.bits(), 0b10111u);
    EXPECT_EQ(sum.value, -9);

    // Same sum kept at four positions wraps to 0111 (+7) and is flagged.
    const auto t = signed_add_truncating({-6, 4}, {-3, 4});
    EXPECT_EQ(t.result.bits(), 0b0111u);
    EXPECT_EQ(t.result.value, 7);
    EXPECT_TRUE(t.overflow);
    EXPECT_FALSE(signed_add_truncating({2, 4}, {3, 4}).overflow);
}

TEST(TwosComplement, AdditionExhaustive) {
    for (std::size_t w = 1; w <= 5; ++w) {
        for (std::int64_t a = min_value(w); a <= max_value(w); ++a) {
            for (std::int64_t b = min_value(w); b <= max_value(w); ++b) {
                ASSERT_EQ(signed_add({a, w}, {b, w}).value, a + b);
                const auto t = signed_add_truncating({a, w}, {b, w});
                ASSERT_EQ(t.overflow, !in_range(a + b, w));
                const std::int64_t n = std::int64_t{1} << w;
                ASSERT_EQ(t.result.bits(), static_cast<std::uint64_t>(((a + b) % n + n) % n));
            }
        }
        EXPECT_EQ(signed_add({0, w}, {min_value(w), w}).value, min_value(w));
    }
}

TEST(TwosComplement, MultiplicationWorkedExample) {
    const auto p = signed_mul({-2, 3}, {-3, 4});
    EXPECT_EQ(p.width, 7u);
    EXPECT_EQ(p.bits(), 0b0000110u);
    EXPECT_EQ(p.value, 6);
    EXPECT_EQ(signed_mul({5, 4}, {0, 4}).value, 0);
}

TEST(TwosComplement, MultiplicationExhaustive) {
    for (std::int64_t a = -4; a <= 3; ++a)
        for (std::int64_t b = -4; b <= 3; ++b) EXPECT_EQ(signed_mul({a, 3}, {b, 3}).value, a * b);
}

TEST(TwosComplement, SignedValueValidates) {
    EXPECT_THROW(SignedValue(8, 4), std::out_of_range);
    EXPECT_THROW(signed_add({1, 3}, {1, 4}), std::invalid_argument);
}
