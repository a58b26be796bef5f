#include "qgmf/state_vector.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

namespace qgmf {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

const Mat2 kHadamard{Complex{kInvSqrt2}, Complex{kInvSqrt2}, Complex{kInvSqrt2},
                     Complex{-kInvSqrt2}};
const Mat2 kPauliX{Complex{0}, Complex{1}, Complex{1}, Complex{0}};

Mat2 ry_matrix(double angle) {
    const double c = std::cos(angle / 2), s = std::sin(angle / 2);
    return {Complex{c}, Complex{-s}, Complex{s}, Complex{c}};
}

Mat2 rz_matrix(double angle) {
    return {std::polar(1.0, -angle / 2), Complex{0}, Complex{0}, std::polar(1.0, angle / 2)};
}

std::uint64_t bit(Qubit q) { return std::uint64_t{1} << q; }

}  // namespace

StateVector::StateVector(RegisterLayout layout, Exec exec)
    : layout_(std::move(layout)), amps_(std::size_t{1} << layout_.total_qubits()), exec_(exec) {
    amps_[0] = 1.0;
}

StateVector::StateVector(RegisterLayout layout, std::vector<Complex> amplitudes, Exec exec)
    : layout_(std::move(layout)), amps_(std::move(amplitudes)), exec_(exec) {
    if (amps_.size() != (std::size_t{1} << layout_.total_qubits())) {
        throw std::invalid_argument("amplitude count does not match layout");
    }
    if (std::abs(norm() - 1.0) > kNormTolerance) {
        throw std::invalid_argument("state is not normalized");
    }
}

StateVector StateVector::basis(RegisterLayout layout, std::uint64_t index, Exec exec) {
    StateVector s(std::move(layout), exec);
    if (index >= s.dimension()) throw std::out_of_range("basis index out of range");
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

void StateVector::check_gate(const GateOp& op) const {
    for (Qubit q : gate_qubits(op)) {
        if (q >= num_qubits()) {
            throw std::out_of_range("gate target " + std::to_string(q) + " outside " +
                                    std::to_string(num_qubits()) + "-qubit state");
        }
    }
}

void StateVector::apply(const GateOp& op) {
    // Duplicate targets are rejected when gates are added to a Circuit; gates
    // applied directly are checked here.
    const auto qs = gate_qubits(op);
    if (std::set<Qubit>(qs.begin(), qs.end()).size() != qs.size()) {
        throw std::invalid_argument("gate targets must be distinct");
    }
    check_gate(op);
    apply_unchecked(op, 0);
}

void StateVector::apply(const Circuit& circuit) {
    if (circuit.span() > num_qubits()) {
        throw std::out_of_range("circuit touches qubit " + std::to_string(circuit.span() - 1) +
                                " outside " + std::to_string(num_qubits()) + "-qubit state");
    }
    for (const auto& op : circuit.ops()) apply_unchecked(op, 0);
}

void StateVector::apply_unchecked(const GateOp& op, std::uint64_t ctrl) {
    using namespace kernels;
    std::span<Complex> a(amps_);
    if (const auto* g = std::get_if<gate::H>(&op)) {
        apply_mat2(exec_, a, g->target, kHadamard, ctrl);
    } else if (const auto* g = std::get_if<gate::X>(&op)) {
        apply_mat2(exec_, a, g->target, kPauliX, ctrl);
    } else if (const auto* g = std::get_if<gate::Z>(&op)) {
        apply_phase(exec_, a, ctrl | bit(g->target), Complex{-1.0});
    } else if (const auto* g = std::get_if<gate::RY>(&op)) {
        apply_mat2(exec_, a, g->target, ry_matrix(g->angle), ctrl);
    } else if (const auto* g = std::get_if<gate::RZ>(&op)) {
        apply_mat2(exec_, a, g->target, rz_matrix(g->angle), ctrl);
    } else if (const auto* g = std::get_if<gate::ControlledPhase>(&op)) {
        apply_phase(exec_, a, ctrl | bit(g->control) | bit(g->target), std::polar(1.0, g->angle));
    } else if (const auto* g = std::get_if<gate::CNOT>(&op)) {
        apply_mat2(exec_, a, g->target, kPauliX, ctrl | bit(g->control));
    } else if (const auto* g = std::get_if<gate::Swap>(&op)) {
        apply_swap(exec_, a, g->a, g->b, ctrl);
    } else if (const auto* g = std::get_if<gate::PauliRotation>(&op)) {
        std::uint64_t x = 0, z = 0;
        unsigned y = 0;
        for (std::size_t k = 0; k < g->qubits.size(); ++k) {
            const std::uint64_t b = bit(g->qubits[k]);
            switch (g->paulis[k]) {
                case 'X': x |= b; break;
                case 'Z': z |= b; break;
                case 'Y': x |= b; z |= b; ++y; break;
            }
        }
        apply_pauli_rotation(exec_, a, x, z, y, g->angle, ctrl);
    } else if (const auto* g = std::get_if<gate::GlobalPhase>(&op)) {
        apply_phase(exec_, a, ctrl, std::polar(1.0, g->angle));
    } else if (const auto* g = std::get_if<gate::PatternControlled>(&op)) {
        std::uint64_t mask = ctrl;
        for (const auto& c : g->controls) {
            mask |= bit(c.qubit);
            if (!c.required) apply_mat2(exec_, a, static_cast<unsigned>(c.qubit), kPauliX, ctrl);
        }
        for (const auto& inner : g->inner->ops()) apply_unchecked(inner, mask);
        for (const auto& c : g->controls) {
            if (!c.required) apply_mat2(exec_, a, static_cast<unsigned>(c.qubit), kPauliX, ctrl);
        }
    }
}

void StateVector::permute(const std::function<std::uint64_t(std::uint64_t)>& perm) {
    std::vector<Complex> out(amps_.size());
    kernels::apply_permutation(exec_, amps_, out, perm);
    amps_ = std::move(out);
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const auto& c : amps_) sum += std::norm(c);
    return std::sqrt(sum);
}

double StateVector::probability(Qubit qubit, bool value) const {
    if (qubit >= num_qubits()) throw std::out_of_range("qubit out of range");
    const std::uint64_t b = bit(qubit);
    double p = 0.0;
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (((i & b) != 0) == value) p += std::norm(amps_[i]);
    }
    return p;
}

std::vector<double> StateVector::marginal(std::span<const Qubit> qubits) const {
    if (qubits.empty()) throw std::invalid_argument("empty register selection");
    for (Qubit q : qubits) {
        if (q >= num_qubits()) throw std::out_of_range("qubit out of range");
    }
    std::vector<double> dist(std::size_t{1} << qubits.size(), 0.0);
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        const double p = std::norm(amps_[i]);
        if (p != 0.0) dist[gather_bits(i, qubits)] += p;
    }
    return dist;
}

StateVector StateVector::with_ancilla() const {
    std::vector<Complex> amps(amps_.size() * 2);
    std::copy(amps_.begin(), amps_.end(), amps.begin());
    StateVector out(layout_.with_ancilla(), exec_);
    out.amps_ = std::move(amps);
    return out;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
    if (a.dimension() != b.dimension()) throw std::invalid_argument("dimension mismatch");
    Complex sum{0.0};
    for (std::uint64_t i = 0; i < a.dimension(); ++i) sum += std::conj(a[i]) * b[i];
    return sum;
}

double fidelity(const StateVector& a, const StateVector& b) { return std::norm(inner_product(a, b)); }

std::vector<Qubit> register_qubits(const Register& r) {
    std::vector<Qubit> q(r.width);
    for (std::size_t k = 0; k < r.width; ++k) q[k] = r.offset + k;
    return q;
}

std::vector<Qubit> block_qubits(const ValueBlock& b) {
    std::vector<Qubit> q(b.width());
    for (std::size_t k = 0; k < b.width(); ++k) q[k] = b.offset + k;
    return q;
}

std::uint64_t gather_bits(std::uint64_t index, std::span<const Qubit> qubits) {
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < qubits.size(); ++k) {
        out |= ((index >> qubits[k]) & 1) << k;
    }
    return out;
}

}  // namespace qgmf
