#include "qgmf/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "qgmf/twos_complement.hpp"

namespace qgmf {

void validate(const FunctionTable& table) {
    if (table.input_qubits == 0) throw std::invalid_argument("function table needs input qubits");
    if (table.value_qubits == 0) throw std::invalid_argument("value register width must be >= 1");
    const std::size_t n = std::size_t{1} << table.input_qubits;
    if (table.values.size() != n) {
        throw std::invalid_argument("function table has " + std::to_string(table.values.size()) +
                                    " entries, expected " + std::to_string(n));
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (!in_range(table.values[x], table.value_qubits)) {
            throw std::invalid_argument("f(" + std::to_string(x) + ") = " +
                                        std::to_string(table.values[x]) + " outside the " +
                                        std::to_string(table.value_qubits) + "-qubit range");
        }
    }
}

void validate(const AmplitudeVector& vector) {
    if (vector.value_qubits == 0) throw std::invalid_argument("value register width must be >= 1");
    if (vector.amplitudes.size() != (std::size_t{1} << vector.value_qubits)) {
        throw std::invalid_argument("amplitude vector length must be 2^m");
    }
    double norm2 = 0.0;
    for (double a : vector.amplitudes) {
        if (!std::isfinite(a)) throw std::invalid_argument("amplitude is not finite");
        norm2 += a * a;
    }
    if (norm2 == 0.0) throw std::invalid_argument("amplitude vector has no nonzero entry");
    if (std::abs(std::sqrt(norm2) - 1.0) > kNormTolerance) {
        throw std::invalid_argument("amplitude vector is not normalized");
    }
}

void validate(const OracleSpec& spec) {
    std::visit([](const auto& s) { validate(s); }, spec);
}

std::size_t value_qubits(const OracleSpec& spec) {
    return std::visit([](const auto& s) { return s.value_qubits; }, spec);
}

std::vector<std::int64_t> attainable_values(const OracleSpec& spec) {
    std::set<std::int64_t> values;
    if (const auto* t = std::get_if<FunctionTable>(&spec)) {
        values.insert(t->values.begin(), t->values.end());
    } else {
        const auto& v = std::get<AmplitudeVector>(spec);
        for (std::size_t i = 0; i < v.amplitudes.size(); ++i) {
            if (v.amplitudes[i] != 0.0) values.insert(decode(i, v.value_qubits));
        }
    }
    return {values.begin(), values.end()};
}

StateVector prepare_phi0(const RegisterLayout& layout, Exec exec) {
    const auto& input = layout.get(Role::Input);
    layout.get(Role::Value);
    StateVector state(layout, exec);
    for (Qubit q : register_qubits(input)) state.apply(gate::H{q});
    return state;
}

void apply_oracle(StateVector& state, const FunctionTable& table) {
    validate(table);
    const auto& input = state.layout().get(Role::Input);
    const auto& value = state.layout().get(Role::Value);
    if (input.width != table.input_qubits || value.width != table.value_qubits) {
        throw std::invalid_argument("function table does not match the register layout");
    }
    std::vector<std::uint64_t> encoded(table.values.size());
    for (std::size_t x = 0; x < encoded.size(); ++x) {
        encoded[x] = encode(table.values[x], table.value_qubits);
    }
    const std::uint64_t in_mask = (std::uint64_t{1} << input.width) - 1;
    const Qubit in_off = input.offset, val_off = value.offset;
    state.permute([&](std::uint64_t i) {
        const std::uint64_t x = (i >> in_off) & in_mask;
        return i ^ (encoded[x] << val_off);
    });
}

void attach_overflow(StateVector& state, const ValueBlock& block) {
    state.apply(gate::CNOT{block.offset + block.value_width - 1, block.overflow()});
}

void attach_overflow(StateVector& state) {
    if (!state.layout().has(Role::Overflow)) throw std::invalid_argument("layout has no overflow qubit");
    attach_overflow(state, state.layout().value_block());
}

std::int64_t ground_truth_minimum(std::span<const std::uint64_t> sorted_indices,
                                  std::size_t value_qubits) {
    const std::uint64_t n = std::uint64_t{1} << value_qubits;
    const std::uint64_t negative_index = n / 2;
    std::uint64_t classical_min_index = n + 1;
    for (std::uint64_t i : sorted_indices) {
        if (i < negative_index && i < classical_min_index) {
            classical_min_index = i;
        } else if (i >= negative_index) {
            classical_min_index = i;
            break;
        }
    }
    if (classical_min_index > n) throw std::invalid_argument("no nonzero index");
    if (classical_min_index < negative_index) return static_cast<std::int64_t>(classical_min_index);
    return decode(classical_min_index, value_qubits);
}

RandomOracleInstance build_random_oracle(std::size_t value_qubits, std::uint64_t seed) {
    if (value_qubits < 2) throw std::invalid_argument("random oracle needs at least 2 value qubits");
    const std::uint64_t n = std::uint64_t{1} << value_qubits;
    std::mt19937_64 rng(seed);

    std::uniform_int_distribution<std::uint64_t> count_dist(1, n / 100 + 1);
    const std::uint64_t count = count_dist(rng);

    std::vector<std::uint64_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::uint64_t> indices;
    indices.reserve(count);
    std::sample(all.begin(), all.end(), std::back_inserter(indices), count, rng);
    std::sort(indices.begin(), indices.end());

    RandomOracleInstance inst;
    inst.seed = seed;
    inst.vector.value_qubits = value_qubits;
    inst.vector.amplitudes.assign(n, 0.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double norm2 = 0.0;
    for (std::uint64_t i : indices) {
        const double a = 1.0 - unit(rng);  // (0, 1]
        inst.vector.amplitudes[i] = a;
        norm2 += a * a;
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (std::uint64_t i : indices) inst.vector.amplitudes[i] *= scale;

    inst.g_m = ground_truth_minimum(indices, value_qubits);
    inst.nonzero_indices = std::move(indices);
    return inst;
}

StateVector state_from_amplitude_vector(const AmplitudeVector& vector,
                                        const RegisterLayout& layout, Exec exec) {
    validate(vector);
    const auto block = layout.value_block();
    if (block.value_width != vector.value_qubits) {
        throw std::invalid_argument("amplitude vector width does not match the value register");
    }
    std::vector<Complex> amps(std::size_t{1} << layout.total_qubits());
    const std::uint64_t msq = std::uint64_t{1} << (vector.value_qubits - 1);
    for (std::uint64_t v = 0; v < vector.amplitudes.size(); ++v) {
        const std::uint64_t overflow = (v & msq) ? 1 : 0;
        const std::uint64_t idx = (v << block.offset) | (overflow << block.overflow());
        amps[idx] = vector.amplitudes[v];
    }
    return StateVector(layout, std::move(amps), exec);
}

StateVector prepare_phi1(const OracleSpec& spec, std::size_t capacity, Exec exec) {
    validate(spec);
    if (const auto* t = std::get_if<FunctionTable>(&spec)) {
        StateVector state = prepare_phi0(oracle_layout(t->input_qubits, t->value_qubits, capacity), exec);
        apply_oracle(state, *t);
        attach_overflow(state);
        return state;
    }
    const auto& v = std::get<AmplitudeVector>(spec);
    return state_from_amplitude_vector(v, value_only_layout(v.value_qubits, capacity), exec);
}

}  // namespace qgmf
