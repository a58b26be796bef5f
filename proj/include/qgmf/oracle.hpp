#pragma once

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "qgmf/layout.hpp"
#include "qgmf/state_vector.hpp"

namespace qgmf {

// f: [0, 2^n) -> [-2^(m-1), 2^(m-1) - 1], one entry per input.
struct FunctionTable {
    std::size_t input_qubits = 0;
    std::size_t value_qubits = 0;
    std::vector<std::int64_t> values;
};

// Amplitudes over the value register directly (no input register).
struct AmplitudeVector {
    std::size_t value_qubits = 0;
    std::vector<double> amplitudes;
};

using OracleSpec = std::variant<FunctionTable, AmplitudeVector>;

// Throws std::invalid_argument when the spec breaks its invariants.
void validate(const FunctionTable& table);
void validate(const AmplitudeVector& vector);
void validate(const OracleSpec& spec);

std::size_t value_qubits(const OracleSpec& spec);

// Distinct attainable values of the oracle (entries with nonzero amplitude for
// the vector form), ascending.
std::vector<std::int64_t> attainable_values(const OracleSpec& spec);

struct RandomOracleInstance {
    AmplitudeVector vector;
    std::int64_t g_m = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> nonzero_indices;  // sorted
};

// Hadamards on the input register; value and overflow stay |0>.
StateVector prepare_phi0(const RegisterLayout& layout, Exec exec = Exec::Parallel);

// |v, x> -> |v XOR encode(f(x)), x>: a basis permutation that sends |0, x>
// to |f(x), x>.
void apply_oracle(StateVector& state, const FunctionTable& table);

// CNOT from the value register's MSQ onto the overflow qubit.
void attach_overflow(StateVector& state);
void attach_overflow(StateVector& state, const ValueBlock& block);

// Random sparse amplitude vector with known minimum. Nonzero count is drawn
// from [1, floor(2^m / 100) + 1], indices without replacement, magnitudes
// uniform on (0, 1] then normalized.
RandomOracleInstance build_random_oracle(std::size_t value_qubits, std::uint64_t seed);

// Minimum over the sorted nonzero indices, read the way the builder does:
// the first index in the negative half wins, otherwise the smallest index.
std::int64_t ground_truth_minimum(std::span<const std::uint64_t> sorted_indices,
                                  std::size_t value_qubits);

// Loads the vector into the value register and copies the MSQ onto the
// overflow qubit on every branch. Result is |phi_1> with no input register.
StateVector state_from_amplitude_vector(const AmplitudeVector& vector,
                                        const RegisterLayout& layout, Exec exec = Exec::Parallel);

// Full |phi_1> for either oracle kind.
StateVector prepare_phi1(const OracleSpec& spec, std::size_t capacity = kDefaultCapacity,
                         Exec exec = Exec::Parallel);

}  // namespace qgmf
