#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Closed-form energies of C^{1,gamma}_n and K_n - H as signed sums of
// Dirichlet kernels at the angles 2*pi*m/n.

namespace circen {

/// Smallest n for which C^{1,gamma}_n is simple and non-degenerate.
constexpr std::int64_t min_vertices_for(std::int64_t gamma) { return 2 * gamma + 1; }

/// 4 (D_{floor(n/6)}(2pi/n) + D_{floor(n/6)}(4pi/n)). Requires n >= 5.
double energy_c1_2(std::int64_t n);

/// Requires gamma >= 3 and n >= 2 gamma + 1.
double energy_c1_gamma(std::int64_t n, std::int64_t gamma);

/// Dispatches gamma == 2 to energy_c1_2, gamma >= 3 to energy_c1_gamma.
double energy_c1(std::int64_t n, std::int64_t gamma);

/// n = 2 alpha (gamma - 1)(gamma + 1).
std::int64_t corollary_vertex_count(std::int64_t gamma, std::int64_t alpha);

/// Energy of C^{1,gamma}_n at n = corollary_vertex_count(gamma, alpha), with
/// both kernel sums collapsed to sine products. gamma >= 3, alpha >= 1.
double energy_corollary(std::int64_t gamma, std::int64_t alpha);

/// Energy of K_n - H for n >= 3.
double energy_knh_closed(std::int64_t n);

/// A root of cos x + cos(gamma x) = 0 in (0, pi], stored as (num/den) * pi.
struct CosSumRoot {
    std::int64_t num;
    std::int64_t den;
    double value;

    /// e.g. "3/5 pi", "1 pi"
    std::string fraction() const;
};

/// The gamma roots in increasing order. Requires gamma >= 2.
std::vector<CosSumRoot> cos_sum_roots(std::int64_t gamma);

/// energy > 2(n - 1), strict.
bool is_hyperenergetic(double energy, std::int64_t n);

}  // namespace circen
