#include "qgmf/adder.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

#include "qgmf/qft.hpp"
#include "qgmf/twos_complement.hpp"

namespace qgmf {

std::uint64_t ShiftSpec::rotation_constant() const {
    // Low `width` bits of the 64-bit two's-complement pattern: encode(shift)
    // for in-range shifts, and the shift reduced mod 2^width otherwise.
    return static_cast<std::uint64_t>(shift) & ((std::uint64_t{1} << width) - 1);
}

Circuit adder_rotation_layer(const ShiftSpec& spec) {
    if (spec.width == 0) throw std::invalid_argument("adder width must be positive");
    const auto constant = static_cast<double>(spec.rotation_constant());
    Circuit c;
    double phase = 0.0;
    // After the QFT, bit `b` of the register carries the Fourier phase
    // weighted by 2^-(width-1-b); index j counts from the most significant bit.
    for (std::size_t j = 0; j < spec.width; ++j) {
        const double angle = constant * std::numbers::pi / static_cast<double>(std::uint64_t{1} << j);
        c.add(gate::RZ{spec.offset + spec.width - 1 - j, angle});
        phase += angle / 2;
    }
    c.add(gate::GlobalPhase{phase});
    return c;
}

Circuit build_adder(const ShiftSpec& spec) {
    Circuit c = qft_circuit(spec.offset, spec.width);
    c.append(adder_rotation_layer(spec));
    c.append(inverse_qft_circuit(spec.offset, spec.width));
    return c;
}

Circuit build_controlled_adder(const ShiftSpec& spec, std::vector<gate::Control> controls) {
    for (const auto& ctl : controls) {
        if (ctl.qubit >= spec.offset && ctl.qubit < spec.offset + spec.width) {
            throw std::invalid_argument("control qubit " + std::to_string(ctl.qubit) +
                                        " overlaps the adder register");
        }
    }
    return controlled(build_adder(spec), std::move(controls));
}

void apply_shift(StateVector& state, const ValueBlock& block, std::int64_t shift) {
    const auto m = block.value_width;
    if (shift < -(std::int64_t{1} << m) || shift > (std::int64_t{1} << m) - 1) {
        throw std::out_of_range("shift " + std::to_string(shift) + " outside [-2^" +
                                std::to_string(m) + ", 2^" + std::to_string(m) + " - 1]");
    }
    state.apply(build_adder(ShiftSpec{shift, block.width(), block.offset}));
}

void apply_shift(StateVector& state, std::int64_t shift) {
    apply_shift(state, state.layout().value_block(), shift);
}

}  // namespace qgmf
