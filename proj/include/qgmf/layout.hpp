#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qgmf {

using Qubit = std::size_t;

inline constexpr std::size_t kDefaultCapacity = 22;

enum class Role {
    HadamardAncilla,
    Overflow,
    Value,
    Input,
    Counter,
    VertexColor,
};

std::string to_string(Role role);

// A contiguous run of qubits. `index` distinguishes registers sharing a role
// (one VertexColor register per vertex); it is 0 for every other role.
struct Register {
    Role role;
    std::size_t index = 0;
    Qubit offset = 0;
    std::size_t width = 0;

    Qubit qubit(std::size_t bit) const { return offset + bit; }
    Qubit msq() const { return offset + width - 1; }
};

// The signed operand the shift/search machinery acts on: `value_width` data
// qubits starting at `offset`, with the overflow (label) qubit directly above.
struct ValueBlock {
    Qubit offset = 0;
    std::size_t value_width = 0;

    std::size_t width() const { return value_width + 1; }
    Qubit overflow() const { return offset + value_width; }
    std::uint64_t mask() const { return ((std::uint64_t{1} << width()) - 1) << offset; }
};

// Qubit 0 is the least significant bit of an amplitude index. Registers are
// allocated bottom-up in the order they are added.
class RegisterLayout {
public:
    explicit RegisterLayout(std::size_t capacity = kDefaultCapacity) : capacity_(capacity) {}

    RegisterLayout& add(Role role, std::size_t width, std::size_t index = 0);

    std::size_t total_qubits() const { return total_; }
    std::size_t capacity() const { return capacity_; }
    const std::vector<Register>& registers() const { return registers_; }

    bool has(Role role, std::size_t index = 0) const;
    const Register& get(Role role, std::size_t index = 0) const;
    std::optional<Register> find(Role role, std::size_t index = 0) const;

    // Value register plus the overflow qubit above it. Throws if either is
    // missing or they are not adjacent.
    ValueBlock value_block() const;

    // Copy of this layout with a one-qubit Hadamard ancilla appended as the
    // new most significant qubit.
    RegisterLayout with_ancilla() const;

private:
    std::size_t capacity_;
    std::size_t total_ = 0;
    std::vector<Register> registers_;
};

// Common shapes.
RegisterLayout oracle_layout(std::size_t input_qubits, std::size_t value_qubits,
                             std::size_t capacity = kDefaultCapacity);
RegisterLayout value_only_layout(std::size_t value_qubits,
                                 std::size_t capacity = kDefaultCapacity);

}  // namespace qgmf
