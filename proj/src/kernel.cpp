#include "circen/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace circen {

namespace {

using i128 = __int128;

void check_operand(std::int64_t v, const char* what) {
    if (v < 0 || v > kMaxKernelOperand)
        throw std::out_of_range(std::string(what) + " outside [0, 2^60]: " + std::to_string(v));
}

std::int64_t mod_i128(i128 v, std::int64_t m) {
    i128 r = v % m;
    if (r < 0) r += m;
    return static_cast<std::int64_t>(r);
}

}  // namespace

RationalAngle::RationalAngle(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
    check_operand(p, "angle numerator");
    if (q < 1) throw std::invalid_argument("angle denominator must be >= 1, got " + std::to_string(q));
    check_operand(q, "angle denominator");
}

double RationalAngle::radians() const {
    return 2.0 * std::numbers::pi * static_cast<double>(p_) / static_cast<double>(q_);
}

KernelIndex::KernelIndex(std::int64_t n) : n_(n) { check_operand(n, "kernel index"); }

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("modulus must be >= 1");
    return mod_i128(static_cast<i128>(mod_i128(a, m)) * mod_i128(b, m), m);
}

double sin_pi_ratio(std::int64_t m, std::int64_t q) {
    if (q < 1 || q > kMaxKernelOperand)
        throw std::invalid_argument("sin_pi_ratio: denominator out of range");
    const std::int64_t period = 2 * q;
    std::int64_t r = mod_i128(m, period);
    bool negate = false;
    if (r >= q) {
        negate = true;
        r -= q;
    }
    // sin(pi - t) = sin(t)
    if (2 * r > q) r = q - r;
    if (r == 0) return 0.0;
    const double v = std::sin(std::numbers::pi * static_cast<double>(r) / static_cast<double>(q));
    return negate ? -v : v;
}

double cos_two_pi_ratio(std::int64_t j, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("cos_two_pi_ratio: n must be >= 1");
    return sin_pi_ratio(n - 4 * mod_i128(j, n), 2 * n);
}

double dirichlet_eval(KernelIndex n, RationalAngle x) {
    const std::int64_t N = n.value();
    const std::int64_t q = x.q();
    if (x.p() % q == 0) return static_cast<double>(2 * N + 1);
    // sin((N+1/2)x) = sin(pi*(2N+1)p/q), sin(x/2) = sin(pi*p/q)
    const std::int64_t numer = mul_mod(2 * N + 1, x.p(), 2 * q);
    const std::int64_t denom = x.p() % (2 * q);
    return sin_pi_ratio(numer, q) / sin_pi_ratio(denom, q);
}

double dirichlet_partial_sum(KernelIndex lo, KernelIndex hi, RationalAngle x) {
    if (lo.value() > hi.value())
        throw std::invalid_argument("dirichlet_partial_sum: lower index " + std::to_string(lo.value()) +
                                    " exceeds upper index " + std::to_string(hi.value()));
    if (lo.value() == hi.value()) return 0.0;
    return dirichlet_eval(hi, x) - dirichlet_eval(lo, x);
}

double sum_odd_indexed_kernels(std::int64_t a, std::int64_t terms_minus_one, RationalAngle x) {
    if (a < 1) throw std::invalid_argument("sum_odd_indexed_kernels: a must be >= 1");
    if (terms_minus_one < 0) throw std::invalid_argument("sum_odd_indexed_kernels: K must be >= 0");
    const std::int64_t K = terms_minus_one;
    const i128 top_index = static_cast<i128>(2 * K + 1) * a;
    if (top_index > kMaxKernelOperand)
        throw std::out_of_range("sum_odd_indexed_kernels: (2K+1)a exceeds 2^60");

    const std::int64_t p = x.p();
    const std::int64_t q = x.q();
    const std::int64_t twice_q = 2 * q;

    // sin(x/2) = sin(pi*p/q), sin(ax) = sin(pi*2ap/q)
    const std::int64_t half_angle = p % twice_q;
    const std::int64_t a_angle = mul_mod(2 * a, p, twice_q);
    if (half_angle % q == 0 || a_angle % q == 0) {
        double acc = 0.0;
        for (std::int64_t k = 0; k <= K; ++k) acc += dirichlet_eval(KernelIndex((2 * k + 1) * a), x);
        return acc;
    }

    // sin(((2K+2)a+1)x/2) = sin(pi*((2K+2)a+1)p/q), sin((K+1)ax) = sin(pi*2(K+1)ap/q)
    const std::int64_t outer = mod_i128(static_cast<i128>(2 * K + 2) * a + 1, twice_q);
    const std::int64_t first = mul_mod(outer, p, twice_q);
    const std::int64_t second = mul_mod(mul_mod(2 * (K + 1), a, twice_q), p, twice_q);
    return sin_pi_ratio(first, q) * sin_pi_ratio(second, q) /
           (sin_pi_ratio(half_angle, q) * sin_pi_ratio(a_angle, q));
}

}  // namespace circen
