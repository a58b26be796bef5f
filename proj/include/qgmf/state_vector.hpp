#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qgmf/circuit.hpp"
#include "qgmf/kernels.hpp"
#include "qgmf/layout.hpp"

namespace qgmf {

inline constexpr double kNormTolerance = 1e-9;

class StateVector {
public:
    // |0...0> over the layout.
    explicit StateVector(RegisterLayout layout, Exec exec = Exec::Parallel);
    // Explicit amplitudes; must have length 2^total_qubits and unit norm.
    StateVector(RegisterLayout layout, std::vector<Complex> amplitudes,
                Exec exec = Exec::Parallel);

    static StateVector basis(RegisterLayout layout, std::uint64_t index,
                             Exec exec = Exec::Parallel);

    const RegisterLayout& layout() const { return layout_; }
    std::size_t num_qubits() const { return layout_.total_qubits(); }
    std::size_t dimension() const { return amps_.size(); }
    std::span<const Complex> amplitudes() const { return amps_; }
    const Complex& operator[](std::uint64_t i) const { return amps_[i]; }

    Exec exec() const { return exec_; }
    void set_exec(Exec exec) { exec_ = exec; }

    void apply(const GateOp& op);
    void apply(const Circuit& circuit);
    // Relabel basis states: new[perm(i)] = old[i]. `perm` must be a bijection.
    void permute(const std::function<std::uint64_t(std::uint64_t)>& perm);

    double norm() const;
    // Probability that `qubit` reads `bit`.
    double probability(Qubit qubit, bool bit) const;
    // Marginal distribution over the bits of `qubits` (bit k of the outcome is
    // qubits[k]).
    std::vector<double> marginal(std::span<const Qubit> qubits) const;

    // Adds a |0> Hadamard ancilla as the new most significant qubit.
    StateVector with_ancilla() const;

private:
    void check_gate(const GateOp& op) const;
    void apply_unchecked(const GateOp& op, std::uint64_t ctrl_mask);

    RegisterLayout layout_;
    std::vector<Complex> amps_;
    Exec exec_;
};

Complex inner_product(const StateVector& a, const StateVector& b);  // <a|b>
double fidelity(const StateVector& a, const StateVector& b);        // |<a|b>|^2

// Qubit indices of a register, LSB first.
std::vector<Qubit> register_qubits(const Register& r);
std::vector<Qubit> block_qubits(const ValueBlock& b);

// Extract the bits of `qubits` from a basis index (bit k of result = qubits[k]).
std::uint64_t gather_bits(std::uint64_t index, std::span<const Qubit> qubits);

}  // namespace qgmf
