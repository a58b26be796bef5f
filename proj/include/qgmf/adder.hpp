#pragma once

#include <cstdint>
#include <vector>

#include "qgmf/circuit.hpp"
#include "qgmf/state_vector.hpp"

namespace qgmf {

// Constant shift applied to a `width`-qubit register starting at `offset`.
struct ShiftSpec {
    std::int64_t shift = 0;
    std::size_t width = 1;
    Qubit offset = 0;

    // Unsigned constant fed to the rotation layer: the shift itself when
    // non-negative, otherwise its two's-complement bit pattern read unsigned.
    std::uint64_t rotation_constant() const;
};

// QFT, one layer of RZ rotations, inverse QFT. The RZ on the qubit that holds
// the 2^-j-weighted Fourier phase is RZ(c * pi / 2^j) with c the rotation
// constant; a GlobalPhase cancels the RZ phases so that the circuit maps
// |y> -> |(y + shift) mod 2^width> with no residual phase, including when it
// is nested inside a controlled block.
Circuit build_adder(const ShiftSpec& spec);

// The rotation layer alone (RZ gates plus the compensating global phase).
Circuit adder_rotation_layer(const ShiftSpec& spec);

// Applies A(spec) iff every control holds its required bit.
Circuit build_controlled_adder(const ShiftSpec& spec, std::vector<gate::Control> controls);

// |phi_2(s)> = A(s) |phi_1> on the overflow+value block. The shift must lie
// in [-2^m, 2^m - 1] for an m-qubit value register.
void apply_shift(StateVector& state, const ValueBlock& block, std::int64_t shift);
void apply_shift(StateVector& state, std::int64_t shift);

}  // namespace qgmf
