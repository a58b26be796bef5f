#pragma once

#include <cstddef>
#include <cstdint>

namespace qgmf {

// Two's-complement codec for signed integers held in a register of `width`
// qubits. Width p holds the range [-2^(p-1), 2^(p-1) - 1]; the most
// significant qubit is the sign.

inline constexpr std::size_t kMaxWidth = 62;

std::int64_t min_value(std::size_t width);
std::int64_t max_value(std::size_t width);
bool in_range(std::int64_t value, std::size_t width);

std::uint64_t encode(std::int64_t value, std::size_t width);
std::int64_t decode(std::uint64_t index, std::size_t width);
bool is_negative(std::uint64_t index, std::size_t width);

// Copies the MSQ into the appended positions; the decoded value is unchanged.
std::uint64_t sign_extend(std::uint64_t index, std::size_t from_width, std::size_t to_width);

struct SignedValue {
    std::int64_t value;
    std::size_t width;

    SignedValue(std::int64_t v, std::size_t w);
    std::uint64_t bits() const { return encode(value, width); }
};

struct TruncatedSum {
    SignedValue result;
    bool overflow;
};

// Sign-extends both operands by one position and adds modulo 2^(w+1).
SignedValue signed_add(const SignedValue& a, const SignedValue& b);

// Adds at the operand width modulo 2^w; flags when the true sum does not fit.
TruncatedSum signed_add_truncating(const SignedValue& a, const SignedValue& b);

// Sign-extends both operands to w_a + w_b, multiplies as unsigned and keeps
// the low w_a + w_b bits.
SignedValue signed_mul(const SignedValue& a, const SignedValue& b);

}  // namespace qgmf
