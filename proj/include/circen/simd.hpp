#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Data-parallel inner loops used by the energy sums and the Jacobi solver.
// Each kernel has a scalar reference implementation and, where the CPU
// supports it, an AVX2 variant selected once at runtime.

namespace circen::simd {

enum class Isa { scalar, avx2 };

struct Kernels {
    Isa isa;
    // sum of |x_i|
    double (*abs_sum)(const double* x, std::size_t n);
    // sum of x_i^2
    double (*sum_squares)(const double* x, std::size_t n);
    // (x, y) <- (c*x - s*y, s*x + c*y), elementwise
    void (*rotate_pair)(double* x, double* y, std::size_t n, double c, double s);
};

std::string_view isa_name(Isa isa);

/// True when the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa);

/// Kernel table for a specific ISA. Throws std::runtime_error if the ISA is
/// not available on this machine.
const Kernels& kernels_for(Isa isa);

/// Best available kernel table, detected on first use.
const Kernels& active_kernels();

inline double abs_sum(std::span<const double> x, const Kernels& k = active_kernels()) {
    return k.abs_sum(x.data(), x.size());
}

inline double sum_squares(std::span<const double> x, const Kernels& k = active_kernels()) {
    return k.sum_squares(x.data(), x.size());
}

inline void rotate_pair(std::span<double> x, std::span<double> y, double c, double s,
                        const Kernels& k = active_kernels()) {
    k.rotate_pair(x.data(), y.data(), x.size() < y.size() ? x.size() : y.size(), c, s);
}

namespace detail {
double abs_sum_scalar(const double* x, std::size_t n);
double sum_squares_scalar(const double* x, std::size_t n);
void rotate_pair_scalar(double* x, double* y, std::size_t n, double c, double s);

#if defined(CIRCEN_HAVE_AVX2)
double abs_sum_avx2(const double* x, std::size_t n);
double sum_squares_avx2(const double* x, std::size_t n);
void rotate_pair_avx2(double* x, double* y, std::size_t n, double c, double s);
#endif
}  // namespace detail

}  // namespace circen::simd
