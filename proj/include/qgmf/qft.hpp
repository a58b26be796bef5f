#pragma once

#include "qgmf/circuit.hpp"
#include "qgmf/state_vector.hpp"

namespace qgmf {

// Textbook QFT on `width` qubits starting at `offset`:
//   |y> -> 2^{-w/2} sum_k exp(2 pi i y k / 2^w) |k>
// built from Hadamards, controlled phases and a final qubit reversal.
// Uses `width` Hadamards and width(width-1)/2 controlled phases.
Circuit qft_circuit(Qubit offset, std::size_t width);
Circuit inverse_qft_circuit(Qubit offset, std::size_t width);

void qft(StateVector& state, Role role, std::size_t index = 0);
void inverse_qft(StateVector& state, Role role, std::size_t index = 0);

// Acts on the overflow+value block.
void qft(StateVector& state, const ValueBlock& block);
void inverse_qft(StateVector& state, const ValueBlock& block);

}  // namespace qgmf
