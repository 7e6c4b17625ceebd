#pragma once

#include <cstdint>

// Dirichlet kernel D_N(x) = 1 + 2 sum_{k=1..N} cos(kx) = sin((N+1/2)x) / sin(x/2)
// evaluated only at rational multiples of 2*pi. Every trig argument is reduced
// in integer arithmetic first, so zeros and +-1 values that the closed-form
// energies telescope through come out exact.

namespace circen {

/// Largest magnitude accepted for kernel indices and angle numerators and
/// denominators. Products such as (2N+1)*p are formed in 128 bits, which is
/// exact for operands below this bound.
inline constexpr std::int64_t kMaxKernelOperand = std::int64_t{1} << 60;

/// The angle 2*pi*p/q, p >= 0, q >= 1. Not reduced at rest.
class RationalAngle {
public:
    RationalAngle(std::int64_t p, std::int64_t q);

    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }

    /// Radian value, for display only.
    double radians() const;

private:
    std::int64_t p_;
    std::int64_t q_;
};

class KernelIndex {
public:
    explicit KernelIndex(std::int64_t n);
    std::int64_t value() const { return n_; }

private:
    std::int64_t n_;
};

/// sin(pi*m/q) for any integer m and q >= 1. m is reduced mod 2q and folded
/// into [0, q/2] before the library sine is called; multiples of q give
/// exactly 0 and arguments that are reflections of each other give
/// identical magnitudes.
double sin_pi_ratio(std::int64_t m, std::int64_t q);

/// cos(2*pi*j/n), via sin_pi_ratio(n - 4j, 2n). cos(2*pi*j/n) and
/// cos(2*pi*(n-j)/n) are bit-identical.
double cos_two_pi_ratio(std::int64_t j, std::int64_t n);

/// (a*b) mod m for m >= 1, result in [0, m). Negative a or b allowed.
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);

double dirichlet_eval(KernelIndex n, RationalAngle x);

/// D_hi(x) - D_lo(x) = 2 sum_{k=lo+1..hi} cos(kx). Throws std::invalid_argument if lo > hi.
double dirichlet_partial_sum(KernelIndex lo, KernelIndex hi, RationalAngle x);

/// sum_{k=0..K} D_{(2k+1)a}(x), using the product form
///   sin(((2K+2)a+1)x/2) sin((K+1)ax) / (sin(x/2) sin(ax))
/// unless one of the denominator sines is exactly zero, in which case the
/// kernels are summed one by one.
double sum_odd_indexed_kernels(std::int64_t a, std::int64_t terms_minus_one, RationalAngle x);

}  // namespace circen
