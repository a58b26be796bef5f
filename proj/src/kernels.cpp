#include "qgmf/kernels.hpp"

#include <bit>
#include <cmath>

namespace qgmf::kernels {
namespace {

template <class Body>
void for_range(Exec exec, std::size_t n, std::size_t state_size, Body&& body) {
    if (exec == Exec::Parallel && state_size >= kParallelThreshold) {
        const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < count; ++i) body(static_cast<std::uint64_t>(i));
    } else {
        for (std::uint64_t i = 0; i < n; ++i) body(i);
    }
}

// Spread `i` over the index space with a zero inserted at bit `pos`.
inline std::uint64_t insert_zero(std::uint64_t i, unsigned pos) {
    const std::uint64_t low = i & ((std::uint64_t{1} << pos) - 1);
    return ((i >> pos) << (pos + 1)) | low;
}

}  // namespace

void apply_mat2(Exec exec, std::span<Complex> amps, unsigned target, const Mat2& m,
                std::uint64_t ctrl_mask) {
    const std::uint64_t bit = std::uint64_t{1} << target;
    Complex* a = amps.data();
    for_range(exec, amps.size() / 2, amps.size(), [=](std::uint64_t i) {
        const std::uint64_t i0 = insert_zero(i, target);
        if ((i0 & ctrl_mask) != ctrl_mask) return;
        const std::uint64_t i1 = i0 | bit;
        const Complex v0 = a[i0];
        const Complex v1 = a[i1];
        a[i0] = m[0] * v0 + m[1] * v1;
        a[i1] = m[2] * v0 + m[3] * v1;
    });
}

void apply_phase(Exec exec, std::span<Complex> amps, std::uint64_t mask, Complex phase) {
    Complex* a = amps.data();
    for_range(exec, amps.size(), amps.size(), [=](std::uint64_t i) {
        if ((i & mask) == mask) a[i] *= phase;
    });
}

void apply_pauli_rotation(Exec exec, std::span<Complex> amps, std::uint64_t x_mask,
                          std::uint64_t z_mask, unsigned y_count, double angle,
                          std::uint64_t ctrl_mask) {
    const double c = std::cos(angle / 2);
    const double s = std::sin(angle / 2);
    Complex* a = amps.data();
    // i^y_count
    static constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const Complex ipow = kIPow[y_count % 4];
    // P|y> = phase(y) |y ^ x_mask>
    auto phase = [=](std::uint64_t y) {
        return (std::popcount(y & z_mask) & 1) ? -ipow : ipow;
    };
    const Complex minus_i_s{0, -s};

    if (x_mask == 0) {
        // Diagonal: exp(-i angle/2 * (+-1)).
        const Complex plus{c, -s};
        const Complex minus{c, s};
        for_range(exec, amps.size(), amps.size(), [=](std::uint64_t i) {
            if ((i & ctrl_mask) != ctrl_mask) return;
            a[i] *= (phase(i).real() > 0) ? plus : minus;
        });
        return;
    }

    const unsigned pivot = static_cast<unsigned>(std::countr_zero(x_mask));
    for_range(exec, amps.size() / 2, amps.size(), [=](std::uint64_t i) {
        const std::uint64_t i0 = insert_zero(i, pivot);
        if ((i0 & ctrl_mask) != ctrl_mask) return;
        const std::uint64_t i1 = i0 ^ x_mask;
        const Complex v0 = a[i0];
        const Complex v1 = a[i1];
        // (P v)[i0] = phase(i1) v[i1], (P v)[i1] = phase(i0) v[i0]
        a[i0] = c * v0 + minus_i_s * phase(i1) * v1;
        a[i1] = c * v1 + minus_i_s * phase(i0) * v0;
    });
}

void apply_swap(Exec exec, std::span<Complex> amps, unsigned qa, unsigned qb,
                std::uint64_t ctrl_mask) {
    if (qa == qb) return;
    const std::uint64_t ba = std::uint64_t{1} << qa;
    const std::uint64_t bb = std::uint64_t{1} << qb;
    Complex* a = amps.data();
    for_range(exec, amps.size() / 2, amps.size(), [=](std::uint64_t i) {
        const std::uint64_t idx = insert_zero(i, qa);  // bit a = 0
        if (!(idx & bb)) return;                       // want bit b = 1
        if ((idx & ctrl_mask) != ctrl_mask) return;
        std::swap(a[idx], a[(idx | ba) & ~bb]);
    });
}

void apply_permutation(Exec exec, std::span<const Complex> in, std::span<Complex> out,
                       const std::function<std::uint64_t(std::uint64_t)>& perm) {
    const Complex* src = in.data();
    Complex* dst = out.data();
    for_range(exec, in.size(), in.size(), [&](std::uint64_t i) { dst[perm(i)] = src[i]; });
}

}  // namespace qgmf::kernels
