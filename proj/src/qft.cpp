#include "qgmf/qft.hpp"

#include <numbers>
#include <stdexcept>

namespace qgmf {

Circuit qft_circuit(Qubit offset, std::size_t width) {
    if (width == 0) throw std::invalid_argument("QFT width must be positive");
    Circuit c;
    for (std::size_t i = width; i-- > 0;) {
        c.add(gate::H{offset + i});
        for (std::size_t k = i; k-- > 0;) {
            const double angle = std::numbers::pi / static_cast<double>(std::uint64_t{1} << (i - k));
            c.add(gate::ControlledPhase{offset + k, offset + i, angle});
        }
    }
    for (std::size_t i = 0; i < width / 2; ++i) {
        c.add(gate::Swap{offset + i, offset + width - 1 - i});
    }
    return c;
}

Circuit inverse_qft_circuit(Qubit offset, std::size_t width) {
    return qft_circuit(offset, width).inverse();
}

void qft(StateVector& state, Role role, std::size_t index) {
    const auto& r = state.layout().get(role, index);
    state.apply(qft_circuit(r.offset, r.width));
}

void inverse_qft(StateVector& state, Role role, std::size_t index) {
    const auto& r = state.layout().get(role, index);
    state.apply(inverse_qft_circuit(r.offset, r.width));
}

void qft(StateVector& state, const ValueBlock& block) {
    state.apply(qft_circuit(block.offset, block.width()));
}

void inverse_qft(StateVector& state, const ValueBlock& block) {
    state.apply(inverse_qft_circuit(block.offset, block.width()));
}

}  // namespace qgmf
