// Serial reference vs OpenMP kernels on the gate mixes the finder spends its
// time in. Range argument is the qubit count.

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "qgmf/adder.hpp"
#include "qgmf/kernels.hpp"
#include "qgmf/qft.hpp"
#include "qgmf/state_vector.hpp"

namespace {

using namespace qgmf;

std::vector<Complex> random_amps(std::size_t qubits) {
    std::vector<Complex> a(std::size_t{1} << qubits);
    double norm = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = {std::sin(0.37 * i + 1.0), std::cos(0.11 * i)};
        norm += std::norm(a[i]);
    }
    for (auto& x : a) x /= std::sqrt(norm);
    return a;
}

void hadamard_sweep(benchmark::State& state, Exec exec) {
    const auto n = static_cast<unsigned>(state.range(0));
    auto amps = random_amps(n);
    const double r = 1.0 / std::numbers::sqrt2;
    const Mat2 h{r, r, r, -r};
    for (auto _ : state) {
        for (unsigned q = 0; q < n; ++q) kernels::apply_mat2(exec, amps, q, h);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * n * static_cast<std::int64_t>(amps.size()));
}

void pauli_rotation(benchmark::State& state, Exec exec) {
    const auto n = static_cast<unsigned>(state.range(0));
    auto amps = random_amps(n);
    for (auto _ : state) {
        for (unsigned q = 0; q + 1 < n; ++q) {
            kernels::apply_pauli_rotation(exec, amps, 0, (std::uint64_t{3} << q), 0, 0.3);
            kernels::apply_pauli_rotation(exec, amps, (std::uint64_t{3} << q), 0, 0, 0.7);
        }
        benchmark::ClobberMemory();
    }
}

void shift_adder(benchmark::State& state, Exec exec) {
    const auto n = static_cast<std::size_t>(state.range(0));
    StateVector sv(value_only_layout(n - 1, n), exec);
    for (auto _ : state) {
        apply_shift(sv, -3);
        benchmark::DoNotOptimize(sv.amplitudes().data());
    }
}

BENCHMARK_CAPTURE(hadamard_sweep, serial, Exec::Serial)->DenseRange(14, 20, 3);
BENCHMARK_CAPTURE(hadamard_sweep, parallel, Exec::Parallel)->DenseRange(14, 20, 3);
BENCHMARK_CAPTURE(pauli_rotation, serial, Exec::Serial)->DenseRange(14, 20, 3);
BENCHMARK_CAPTURE(pauli_rotation, parallel, Exec::Parallel)->DenseRange(14, 20, 3);
BENCHMARK_CAPTURE(shift_adder, serial, Exec::Serial)->DenseRange(14, 20, 3);
BENCHMARK_CAPTURE(shift_adder, parallel, Exec::Parallel)->DenseRange(14, 20, 3);

}  // namespace

BENCHMARK_MAIN();
