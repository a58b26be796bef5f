#include "qgmf/twos_complement.hpp"

#include <stdexcept>
#include <string>

namespace qgmf {
namespace {

void check_width(std::size_t width) {
    if (width == 0 || width > kMaxWidth) {
        throw std::invalid_argument("register width must be in [1, " + std::to_string(kMaxWidth) +
                                    "], got " + std::to_string(width));
    }
}

std::uint64_t low_mask(std::size_t width) { return (std::uint64_t{1} << width) - 1; }

}  // namespace

std::int64_t min_value(std::size_t width) {
    check_width(width);
    return -(std::int64_t{1} << (width - 1));
}

std::int64_t max_value(std::size_t width) {
    check_width(width);
    return (std::int64_t{1} << (width - 1)) - 1;
}

bool in_range(std::int64_t value, std::size_t width) {
    return value >= min_value(width) && value <= max_value(width);
}

std::uint64_t encode(std::int64_t value, std::size_t width) {
    if (!in_range(value, width)) {
        throw std::out_of_range(std::to_string(value) + " does not fit in " +
                                std::to_string(width) + " qubits");
    }
    return static_cast<std::uint64_t>(value) & low_mask(width);
}

std::int64_t decode(std::uint64_t index, std::size_t width) {
    check_width(width);
    if (index > low_mask(width)) {
        throw std::out_of_range("index " + std::to_string(index) + " outside a " +
                                std::to_string(width) + "-qubit register");
    }
    if (is_negative(index, width)) {
        return static_cast<std::int64_t>(index) - (std::int64_t{1} << width);
    }
    return static_cast<std::int64_t>(index);
}

bool is_negative(std::uint64_t index, std::size_t width) {
    return ((index >> (width - 1)) & 1) != 0;
}

std::uint64_t sign_extend(std::uint64_t index, std::size_t from_width, std::size_t to_width) {
    check_width(from_width);
    check_width(to_width);
    if (from_width > to_width) throw std::invalid_argument("sign extension cannot shrink a register");
    if (index > low_mask(from_width)) throw std::out_of_range("index outside source register");
    if (!is_negative(index, from_width)) return index;
    return index | (low_mask(to_width) & ~low_mask(from_width));
}

SignedValue::SignedValue(std::int64_t v, std::size_t w) : value(v), width(w) {
    if (!in_range(v, w)) {
        throw std::out_of_range(std::to_string(v) + " does not fit in " + std::to_string(w) +
                                " qubits");
    }
}

SignedValue signed_add(const SignedValue& a, const SignedValue& b) {
    if (a.width != b.width) throw std::invalid_argument("operands must share a width");
    const std::size_t w = a.width + 1;
    const std::uint64_t sum =
        (sign_extend(a.bits(), a.width, w) + sign_extend(b.bits(), b.width, w)) & low_mask(w);
    return {decode(sum, w), w};
}

TruncatedSum signed_add_truncating(const SignedValue& a, const SignedValue& b) {
    if (a.width != b.width) throw std::invalid_argument("operands must share a width");
    const std::size_t w = a.width;
    const std::uint64_t sum = (a.bits() + b.bits()) & low_mask(w);
    // Overflow iff both operands share a sign the result does not.
    const bool sa = is_negative(a.bits(), w), sb = is_negative(b.bits(), w);
    const bool overflow = sa == sb && is_negative(sum, w) != sa;
    return {SignedValue{decode(sum, w), w}, overflow};
}

SignedValue signed_mul(const SignedValue& a, const SignedValue& b) {
    const std::size_t w = a.width + b.width;
    check_width(w);
    const std::uint64_t product =
        (sign_extend(a.bits(), a.width, w) * sign_extend(b.bits(), b.width, w)) & low_mask(w);
    return {decode(product, w), w};
}

}  // namespace qgmf
