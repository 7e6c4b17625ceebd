#include "circen/spectrum.hpp"

#include <algorithm>
#include <string>

#include "circen/kernel.hpp"

namespace circen {

CirculantSpec::CirculantSpec(std::int64_t n, std::vector<std::int64_t> generators)
    : n_(n), generators_(std::move(generators)) {
    if (n_ < 3) throw std::invalid_argument("circulant graph needs n >= 3, got " + std::to_string(n_));
    if (n_ > kMaxKernelOperand / 4) throw std::invalid_argument("circulant graph: n too large");
    if (generators_.empty()) throw std::invalid_argument("circulant graph needs at least one generator");
    for (auto& g : generators_) {
        if (g < 1 || g >= n_)
            throw std::invalid_argument("generator " + std::to_string(g) + " outside [1, n-1] for n=" +
                                        std::to_string(n_));
        g = std::min(g, n_ - g);
    }
    std::sort(generators_.begin(), generators_.end());
    if (std::adjacent_find(generators_.begin(), generators_.end()) != generators_.end())
        throw std::invalid_argument("generators must be pairwise distinct modulo +-n");
}

std::string_view method_name(EnergyMethod m) {
    switch (m) {
        case EnergyMethod::closed: return "closed";
        case EnergyMethod::direct: return "direct";
        case EnergyMethod::matrix: return "matrix";
    }
    return "unknown";
}

double complete_graph_energy(std::int64_t n) { return 2.0 * static_cast<double>(n - 1); }

EnergyReport make_energy_report(double energy, EnergyMethod method, std::int64_t n) {
    const double kn = complete_graph_energy(n);
    return {energy, method, n, kn, energy > kn};
}

Spectrum circulant_eigenvalues(const CirculantSpec& spec) {
    const std::int64_t n = spec.n();
    std::vector<double> values(static_cast<std::size_t>(n), 0.0);
    for (const std::int64_t g : spec.generators()) {
        const double coefficient = (2 * g == n) ? 1.0 : 2.0;
        for (std::int64_t k = 0; k < n; ++k)
            values[static_cast<std::size_t>(k)] += coefficient * cos_two_pi_ratio(mul_mod(g, k, n), n);
    }
    return {std::move(values), SpectrumMethod::cosine_formula};
}

double spectrum_energy(std::span<const double> values, const simd::Kernels& k) {
    return simd::abs_sum(values, k);
}

EnergyReport energy_direct(const CirculantSpec& spec) {
    const Spectrum s = circulant_eigenvalues(spec);
    return make_energy_report(spectrum_energy(s.values), EnergyMethod::direct, spec.n());
}

bool SymmetricMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < side_; ++i)
        for (std::size_t j = i + 1; j < side_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

namespace {

void check_cap(std::int64_t n, std::int64_t cap) {
    if (n > cap)
        throw std::invalid_argument("dense matrix side " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(cap));
}

}  // namespace

SymmetricMatrix build_adjacency(const CirculantSpec& spec, std::int64_t cap) {
    const std::int64_t n = spec.n();
    check_cap(n, cap);
    SymmetricMatrix a(static_cast<std::size_t>(n));
    for (std::int64_t u = 0; u < n; ++u) {
        for (const std::int64_t g : spec.generators()) {
            a(u, (u + g) % n) = 1.0;
            a(u, (u - g + n) % n) = 1.0;
        }
    }
    return a;
}

SymmetricMatrix build_knh_adjacency(std::int64_t n, std::int64_t cap) {
    if (n < 3) throw std::invalid_argument("K_n - H needs n >= 3, got " + std::to_string(n));
    check_cap(n, cap);
    const auto side = static_cast<std::size_t>(n);
    SymmetricMatrix a(side);
    for (std::size_t u = 0; u < side; ++u) {
        for (std::size_t v = 0; v < side; ++v) a(u, v) = (u == v) ? 0.0 : 1.0;
        a(u, (u + 1) % side) = 0.0;
        a(u, (u + side - 1) % side) = 0.0;
    }
    return a;
}

EnergyReport energy_matrix(const CirculantSpec& spec, std::int64_t cap) {
    const std::vector<double> eig = jacobi_eigenvalues(build_adjacency(spec, cap), {.cap = cap});
    return make_energy_report(spectrum_energy(eig), EnergyMethod::matrix, spec.n());
}

Spectrum knh_eigenvalues(std::int64_t n) {
    if (n < 3) throw std::invalid_argument("K_n - H needs n >= 3, got " + std::to_string(n));
    if (n > kMaxKernelOperand / 4) throw std::invalid_argument("K_n - H: n too large");
    std::vector<double> values(static_cast<std::size_t>(n));
    values[0] = static_cast<double>(n - 3);
    for (std::int64_t k = 1; k < n; ++k)
        values[static_cast<std::size_t>(k)] = -1.0 - 2.0 * cos_two_pi_ratio(k, n);
    return {std::move(values), SpectrumMethod::cosine_formula};
}

EnergyReport knh_energy_direct(std::int64_t n) {
    const Spectrum s = knh_eigenvalues(n);
    return make_energy_report(spectrum_energy(s.values), EnergyMethod::direct, n);
}

}  // namespace circen
