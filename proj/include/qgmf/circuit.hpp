#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qgmf/layout.hpp"

namespace qgmf {

class Circuit;

namespace gate {

struct H { Qubit target; };
struct X { Qubit target; };
struct Z { Qubit target; };
struct RY { Qubit target; double angle; };
struct RZ { Qubit target; double angle; };
// diag(1, e^{i angle}) on |11> of (control, target).
struct ControlledPhase { Qubit control; Qubit target; double angle; };
struct CNOT { Qubit control; Qubit target; };
struct Swap { Qubit a; Qubit b; };
// exp(-i angle/2 * P), P = tensor product of `paulis[k]` on `qubits[k]`
// with paulis drawn from 'X', 'Y', 'Z'.
struct PauliRotation {
    std::vector<Qubit> qubits;
    std::string paulis;
    double angle;
};
// Scalar e^{i angle}. Touches no qubit; becomes a relative phase when
// placed inside a PatternControlled block.
struct GlobalPhase { double angle; };

struct Control {
    Qubit qubit;
    bool required;  // bit value the control must hold for the inner block to fire
};

// Applies `inner` iff every control qubit holds its required bit.
// Zero-controls are realized by X-conjugation around an all-ones control.
struct PatternControlled {
    std::shared_ptr<const Circuit> inner;
    std::vector<Control> controls;
};

}  // namespace gate

using GateOp = std::variant<gate::H, gate::X, gate::Z, gate::RY, gate::RZ, gate::ControlledPhase,
                            gate::CNOT, gate::Swap, gate::PauliRotation, gate::GlobalPhase,
                            gate::PatternControlled>;

// Qubits a gate acts on (controls included).
std::vector<Qubit> gate_qubits(const GateOp& op);

struct GateCounts {
    std::size_t hadamard = 0;
    std::size_t controlled_phase = 0;
    std::size_t rz = 0;
    std::size_t total = 0;
};

class Circuit {
public:
    Circuit() = default;

    Circuit& add(GateOp op);
    Circuit& append(const Circuit& other);

    const std::vector<GateOp>& ops() const { return ops_; }
    bool empty() const { return ops_.empty(); }
    std::size_t size() const { return ops_.size(); }

    // Reverse order, negated angles.
    Circuit inverse() const;

    // ASAP layering depth; GlobalPhase occupies no layer. A PatternControlled
    // block occupies its controls and inner qubits for the inner depth.
    std::size_t depth() const;

    // Gate census, recursing into controlled blocks.
    GateCounts counts() const;

    // Highest qubit index touched plus one.
    std::size_t span() const;

    // Qubits touched anywhere in the circuit, sorted.
    std::vector<Qubit> touched_qubits() const;

private:
    std::vector<GateOp> ops_;
};

Circuit controlled(const Circuit& inner, std::vector<gate::Control> controls);

}  // namespace qgmf
