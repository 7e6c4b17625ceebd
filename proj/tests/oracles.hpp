#pragma once

// Brute-force references used only by the tests. They evaluate the defining
// sums with plain long double cosines and share no code with the library.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace circen::testing {

inline long double two_pi_ratio(std::int64_t num, std::int64_t den) {
    return 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(num % den) /
           static_cast<long double>(den);
}

/// 1 + 2 sum_{k=1..N} cos(2 pi k p / q)
inline double naive_dirichlet(std::int64_t N, std::int64_t p, std::int64_t q) {
    long double acc = 1.0L;
    for (std::int64_t k = 1; k <= N; ++k) acc += 2.0L * std::cos(two_pi_ratio(k * p, q));
    return static_cast<double>(acc);
}

/// sum_k |sum_g 2 cos(2 pi g k / n)|, degenerate g = n/2 counted once.
inline double naive_circulant_energy(std::int64_t n, const std::vector<std::int64_t>& gens) {
    long double energy = 0.0L;
    for (std::int64_t k = 0; k < n; ++k) {
        long double lambda = 0.0L;
        for (auto g : gens) lambda += (2 * g == n ? 1.0L : 2.0L) * std::cos(two_pi_ratio(g * k, n));
        energy += std::fabs(lambda);
    }
    return static_cast<double>(energy);
}

/// n - 3 + sum_{k=1..n-1} |1 + 2 cos(2 pi k / n)|
inline double naive_knh_energy(std::int64_t n) {
    long double energy = static_cast<long double>(n - 3);
    for (std::int64_t k = 1; k < n; ++k) energy += std::fabs(1.0L + 2.0L * std::cos(two_pi_ratio(k, n)));
    return static_cast<double>(energy);
}

}  // namespace circen::testing
