#pragma once

// Amplitude-level gate kernels.
//
// Every kernel takes an `Exec` policy. `Exec::Serial` is the reference
// implementation; `Exec::Parallel` runs the same loop body under OpenMP.
// Gate kernels only write disjoint amplitude slots per iteration, so both
// policies produce bit-identical results. Reductions (norms, probabilities)
// live in state_vector.cpp and are always sequential.

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

namespace qgmf {

using Complex = std::complex<double>;
using Mat2 = std::array<Complex, 4>;  // row-major

enum class Exec { Serial, Parallel };

namespace kernels {

// States smaller than this never fork threads.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

// `ctrl_mask`: the kernel only acts on indices whose bits in `ctrl_mask` are
// all set. Pass 0 for an uncontrolled gate.

void apply_mat2(Exec exec, std::span<Complex> amps, unsigned target, const Mat2& m,
                std::uint64_t ctrl_mask = 0);

// Multiply every amplitude whose index has all of `mask` set by `phase`.
// Covers Z, CZ, controlled phase and (controlled) global phase.
void apply_phase(Exec exec, std::span<Complex> amps, std::uint64_t mask, Complex phase);

// exp(-i angle/2 * P) for a Pauli string P given as x/z bit masks.
// `y_count` is the number of Y factors (P = i^y_count * X^x Z^z).
void apply_pauli_rotation(Exec exec, std::span<Complex> amps, std::uint64_t x_mask,
                          std::uint64_t z_mask, unsigned y_count, double angle,
                          std::uint64_t ctrl_mask = 0);

void apply_swap(Exec exec, std::span<Complex> amps, unsigned a, unsigned b,
                std::uint64_t ctrl_mask = 0);

// out[perm(i)] = in[i]. `perm` must be a bijection on [0, in.size()).
void apply_permutation(Exec exec, std::span<const Complex> in, std::span<Complex> out,
                       const std::function<std::uint64_t(std::uint64_t)>& perm);

}  // namespace kernels
}  // namespace qgmf
