#include "qgmf/circuit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qgmf {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::vector<Qubit> gate_qubits(const GateOp& op) {
    return std::visit(
        Overloaded{
            [](const gate::H& g) { return std::vector<Qubit>{g.target}; },
            [](const gate::X& g) { return std::vector<Qubit>{g.target}; },
            [](const gate::Z& g) { return std::vector<Qubit>{g.target}; },
            [](const gate::RY& g) { return std::vector<Qubit>{g.target}; },
            [](const gate::RZ& g) { return std::vector<Qubit>{g.target}; },
            [](const gate::ControlledPhase& g) { return std::vector<Qubit>{g.control, g.target}; },
            [](const gate::CNOT& g) { return std::vector<Qubit>{g.control, g.target}; },
            [](const gate::Swap& g) { return std::vector<Qubit>{g.a, g.b}; },
            [](const gate::PauliRotation& g) { return g.qubits; },
            [](const gate::GlobalPhase&) { return std::vector<Qubit>{}; },
            [](const gate::PatternControlled& g) {
                std::vector<Qubit> q;
                for (const auto& c : g.controls) q.push_back(c.qubit);
                const auto inner = g.inner->touched_qubits();
                q.insert(q.end(), inner.begin(), inner.end());
                return q;
            },
        },
        op);
}

Circuit& Circuit::add(GateOp op) {
    if (auto* pc = std::get_if<gate::PatternControlled>(&op)) {
        if (!pc->inner) throw std::invalid_argument("controlled block without inner circuit");
        const auto inner = pc->inner->touched_qubits();
        std::set<Qubit> seen;
        for (const auto& c : pc->controls) {
            if (!seen.insert(c.qubit).second) {
                throw std::invalid_argument("duplicate control qubit");
            }
            if (std::find(inner.begin(), inner.end(), c.qubit) != inner.end()) {
                throw std::invalid_argument("control qubit overlaps controlled block targets");
            }
        }
    } else if (auto* pr = std::get_if<gate::PauliRotation>(&op)) {
        if (pr->qubits.size() != pr->paulis.size() || pr->qubits.empty()) {
            throw std::invalid_argument("Pauli rotation needs one Pauli letter per qubit");
        }
        for (char p : pr->paulis) {
            if (p != 'X' && p != 'Y' && p != 'Z') {
                throw std::invalid_argument("Pauli letters must be X, Y or Z");
            }
        }
    }
    const auto qs = gate_qubits(op);
    std::set<Qubit> distinct(qs.begin(), qs.end());
    if (distinct.size() != qs.size()) throw std::invalid_argument("gate targets must be distinct");
    ops_.push_back(std::move(op));
    return *this;
}

Circuit& Circuit::append(const Circuit& other) {
    ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
    return *this;
}

Circuit Circuit::inverse() const {
    Circuit inv;
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
        inv.ops_.push_back(std::visit(
            Overloaded{
                [](gate::RY g) -> GateOp { g.angle = -g.angle; return g; },
                [](gate::RZ g) -> GateOp { g.angle = -g.angle; return g; },
                [](gate::ControlledPhase g) -> GateOp { g.angle = -g.angle; return g; },
                [](gate::PauliRotation g) -> GateOp { g.angle = -g.angle; return g; },
                [](gate::GlobalPhase g) -> GateOp { g.angle = -g.angle; return g; },
                [](const gate::PatternControlled& g) -> GateOp {
                    return gate::PatternControlled{
                        std::make_shared<const Circuit>(g.inner->inverse()), g.controls};
                },
                [](const auto& g) -> GateOp { return g; },  // self-inverse
            },
            *it));
    }
    return inv;
}

std::size_t Circuit::depth() const {
    std::vector<std::size_t> level(span(), 0);
    std::size_t best = 0;
    for (const auto& op : ops_) {
        const auto qs = gate_qubits(op);
        if (qs.empty()) continue;
        std::size_t duration = 1;
        if (const auto* pc = std::get_if<gate::PatternControlled>(&op)) {
            duration = pc->inner->depth();
            if (duration == 0) continue;
        }
        std::size_t start = 0;
        for (Qubit q : qs) start = std::max(start, level[q]);
        for (Qubit q : qs) level[q] = start + duration;
        best = std::max(best, start + duration);
    }
    return best;
}

GateCounts Circuit::counts() const {
    GateCounts c;
    for (const auto& op : ops_) {
        if (const auto* pc = std::get_if<gate::PatternControlled>(&op)) {
            const auto inner = pc->inner->counts();
            c.hadamard += inner.hadamard;
            c.controlled_phase += inner.controlled_phase;
            c.rz += inner.rz;
            c.total += inner.total;
            continue;
        }
        ++c.total;
        if (std::holds_alternative<gate::H>(op)) ++c.hadamard;
        if (std::holds_alternative<gate::ControlledPhase>(op)) ++c.controlled_phase;
        if (std::holds_alternative<gate::RZ>(op)) ++c.rz;
    }
    return c;
}

std::size_t Circuit::span() const {
    std::size_t s = 0;
    for (const auto& op : ops_) {
        for (Qubit q : gate_qubits(op)) s = std::max(s, q + 1);
    }
    return s;
}

std::vector<Qubit> Circuit::touched_qubits() const {
    std::set<Qubit> all;
    for (const auto& op : ops_) {
        for (Qubit q : gate_qubits(op)) all.insert(q);
    }
    return {all.begin(), all.end()};
}

Circuit controlled(const Circuit& inner, std::vector<gate::Control> controls) {
    Circuit c;
    c.add(gate::PatternControlled{std::make_shared<const Circuit>(inner), std::move(controls)});
    return c;
}

}  // namespace qgmf
