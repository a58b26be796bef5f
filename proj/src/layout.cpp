#include "qgmf/layout.hpp"

#include <stdexcept>

namespace qgmf {

std::string to_string(Role role) {
    switch (role) {
        case Role::HadamardAncilla: return "hadamard_ancilla";
        case Role::Overflow: return "overflow";
        case Role::Value: return "value";
        case Role::Input: return "input";
        case Role::Counter: return "counter";
        case Role::VertexColor: return "vertex_color";
    }
    return "unknown";
}

RegisterLayout& RegisterLayout::add(Role role, std::size_t width, std::size_t index) {
    if (width == 0) {
        throw std::invalid_argument("register " + to_string(role) + " has zero width");
    }
    if ((role == Role::Overflow || role == Role::HadamardAncilla) && width != 1) {
        throw std::invalid_argument(to_string(role) + " register must be one qubit");
    }
    if (has(role, index)) {
        throw std::invalid_argument("duplicate register " + to_string(role));
    }
    if (role == Role::Overflow) {
        auto value = find(Role::Value);
        if (!value || value->offset + value->width != total_) {
            throw std::invalid_argument("overflow qubit must sit directly above the value register");
        }
    }
    if (total_ + width > capacity_) {
        throw std::length_error("layout needs " + std::to_string(total_ + width) +
                                " qubits, capacity is " + std::to_string(capacity_));
    }
    registers_.push_back(Register{role, index, total_, width});
    total_ += width;
    return *this;
}

bool RegisterLayout::has(Role role, std::size_t index) const { return find(role, index).has_value(); }

std::optional<Register> RegisterLayout::find(Role role, std::size_t index) const {
    for (const auto& r : registers_) {
        if (r.role == role && r.index == index) return r;
    }
    return std::nullopt;
}

const Register& RegisterLayout::get(Role role, std::size_t index) const {
    for (const auto& r : registers_) {
        if (r.role == role && r.index == index) return r;
    }
    throw std::invalid_argument("layout has no " + to_string(role) + " register");
}

ValueBlock RegisterLayout::value_block() const {
    const auto& value = get(Role::Value);
    const auto& overflow = get(Role::Overflow);
    if (overflow.offset != value.offset + value.width) {
        throw std::logic_error("overflow qubit is not adjacent to the value register");
    }
    return ValueBlock{value.offset, value.width};
}

RegisterLayout RegisterLayout::with_ancilla() const {
    RegisterLayout out = *this;
    out.add(Role::HadamardAncilla, 1);
    return out;
}

RegisterLayout oracle_layout(std::size_t input_qubits, std::size_t value_qubits,
                             std::size_t capacity) {
    RegisterLayout layout(capacity);
    layout.add(Role::Input, input_qubits).add(Role::Value, value_qubits).add(Role::Overflow, 1);
    return layout;
}

RegisterLayout value_only_layout(std::size_t value_qubits, std::size_t capacity) {
    RegisterLayout layout(capacity);
    layout.add(Role::Value, value_qubits).add(Role::Overflow, 1);
    return layout;
}

}  // namespace qgmf
