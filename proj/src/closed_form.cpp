#include "circen/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "circen/kernel.hpp"
#include "circen/spectrum.hpp"

namespace circen {

namespace {

std::int64_t ceil_half(std::int64_t v) { return (v + 1) / 2; }

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

}  // namespace

double energy_c1_2(std::int64_t n) {
    require(n >= 5, "energy_c1_2: n must be >= 5, got " + std::to_string(n));
    const KernelIndex idx(n / 6);
    return 4.0 * (dirichlet_eval(idx, RationalAngle(1, n)) + dirichlet_eval(idx, RationalAngle(2, n)));
}

double energy_c1_gamma(std::int64_t n, std::int64_t gamma) {
    require(gamma >= 3, "energy_c1_gamma: gamma must be >= 3 (use energy_c1_2 for gamma=2)");
    require(n >= min_vertices_for(gamma), "n must be >= 2*gamma+1 for method=closed (n=" + std::to_string(n) +
                                              ", gamma=" + std::to_string(gamma) + ")");
    const std::int64_t half = ceil_half(gamma);
    const std::int64_t plus_den = 2 * (gamma + 1);
    const std::int64_t minus_den = 2 * (gamma - 1);

    double total = 0.0;
    for (const std::int64_t m : {std::int64_t{1}, gamma}) {
        const RationalAngle x(m, n);
        double positive = 0.0;
        for (std::int64_t l = 0; l <= half - 1; ++l)
            positive += dirichlet_eval(KernelIndex((2 * l + 1) * n / plus_den), x);
        double negative = 0.0;
        for (std::int64_t l = 0; l <= half - 2; ++l)
            negative += dirichlet_eval(KernelIndex((2 * l + 1) * n / minus_den), x);
        total += positive - negative;
    }
    return 4.0 * total;
}

double energy_c1(std::int64_t n, std::int64_t gamma) {
    require(gamma >= 2, "gamma must be >= 2, got " + std::to_string(gamma));
    require(n >= min_vertices_for(gamma), "n must be >= 2*gamma+1 for method=closed (n=" + std::to_string(n) +
                                              ", gamma=" + std::to_string(gamma) + ")");
    return gamma == 2 ? energy_c1_2(n) : energy_c1_gamma(n, gamma);
}

std::int64_t corollary_vertex_count(std::int64_t gamma, std::int64_t alpha) {
    require(gamma >= 3, "corollary: gamma must be >= 3, got " + std::to_string(gamma));
    require(alpha >= 1, "corollary: alpha must be >= 1, got " + std::to_string(alpha));
    const __int128 n = static_cast<__int128>(2) * alpha * (gamma - 1) * (gamma + 1);
    require(n <= kMaxKernelOperand / 4, "corollary: 2*alpha*(gamma-1)*(gamma+1) too large");
    return static_cast<std::int64_t>(n);
}

double energy_corollary(std::int64_t gamma, std::int64_t alpha) {
    const std::int64_t n = corollary_vertex_count(gamma, alpha);
    const std::int64_t half = ceil_half(gamma);
    double total = 0.0;
    for (const std::int64_t m : {std::int64_t{1}, gamma}) {
        const RationalAngle x(m, n);
        total += sum_odd_indexed_kernels(alpha * (gamma - 1), half - 1, x) -
                 sum_odd_indexed_kernels(alpha * (gamma + 1), half - 2, x);
    }
    return 4.0 * total;
}

double energy_knh_closed(std::int64_t n) {
    require(n >= 3, "K_n - H needs n >= 3, got " + std::to_string(n));
    const std::int64_t third = n / 3;
    const std::int64_t two_thirds = 2 * n / 3;
    // sin((N + 1/2) 2pi/n) / sin(pi/n) = D_N(2pi/n)
    const RationalAngle x(1, n);
    const double ratio = dirichlet_eval(KernelIndex(third), x) - dirichlet_eval(KernelIndex(two_thirds), x);
    return 2.0 * static_cast<double>(n - 3 - (two_thirds - third)) + 2.0 * ratio;
}

std::string CosSumRoot::fraction() const {
    if (den == 1) return std::to_string(num) + " pi";
    return std::to_string(num) + "/" + std::to_string(den) + " pi";
}

std::vector<CosSumRoot> cos_sum_roots(std::int64_t gamma) {
    require(gamma >= 2, "gamma must be >= 2, got " + std::to_string(gamma));
    std::vector<CosSumRoot> roots;
    roots.reserve(static_cast<std::size_t>(gamma));
    auto push = [&](std::int64_t num, std::int64_t den) {
        const std::int64_t g = std::gcd(num, den);
        num /= g;
        den /= g;
        roots.push_back({num, den, std::numbers::pi * static_cast<double>(num) / static_cast<double>(den)});
    };
    // (2j+1) pi/(gamma+1) and (2j+1) pi/(gamma-1), interleaved; for even gamma the list closes with pi.
    const std::int64_t plus_count = ceil_half(gamma);
    const std::int64_t minus_count = gamma % 2 == 1 ? (gamma - 1) / 2 : (gamma - 2) / 2;
    for (std::int64_t j = 0; j < plus_count; ++j) {
        push(2 * j + 1, gamma + 1);
        if (j < minus_count) push(2 * j + 1, gamma - 1);
    }
    if (gamma % 2 == 0) push(1, 1);
    return roots;
}

bool is_hyperenergetic(double energy, std::int64_t n) { return energy > complete_graph_energy(n); }

}  // namespace circen
