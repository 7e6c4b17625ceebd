#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "circen/simd.hpp"

// Brute-force spectra and energies. Nothing in here depends on the
// closed-form energies; these are the oracles those are checked against.

namespace circen {

/// Circulant graph on n vertices where v ~ v +- g (mod n) for every generator g.
class CirculantSpec {
public:
    /// n >= 3, at least one generator, each generator in [1, n-1]. A generator
    /// g > n/2 is stored as n - g (same edge set). Throws std::invalid_argument
    /// on a duplicate after that normalization.
    CirculantSpec(std::int64_t n, std::vector<std::int64_t> generators);

    std::int64_t n() const { return n_; }
    const std::vector<std::int64_t>& generators() const { return generators_; }

    /// True when n is even and n/2 is a generator: that generator adds a
    /// single edge per vertex.
    bool degenerate() const { return 2 * generators_.back() == n_; }

    std::int64_t degree() const {
        const auto d = static_cast<std::int64_t>(generators_.size());
        return degenerate() ? 2 * d - 1 : 2 * d;
    }

private:
    std::int64_t n_;
    std::vector<std::int64_t> generators_;
};

enum class SpectrumMethod { cosine_formula, eigensolver };

struct Spectrum {
    std::vector<double> values;
    SpectrumMethod method;
};

enum class EnergyMethod { closed, direct, matrix };

std::string_view method_name(EnergyMethod m);

struct EnergyReport {
    double energy;
    EnergyMethod method;
    std::int64_t n;
    double kn_energy;
    bool hyperenergetic;
};

/// E(K_n) = 2(n-1).
double complete_graph_energy(std::int64_t n);

/// Fills kn_energy and the strict energy > 2(n-1) flag.
EnergyReport make_energy_report(double energy, EnergyMethod method, std::int64_t n);

/// lambda_k = sum over generators of 2cos(2*pi*g*k/n), k = 0..n-1; a
/// degenerate generator contributes cos(pi*k) once.
Spectrum circulant_eigenvalues(const CirculantSpec& spec);

double spectrum_energy(std::span<const double> values,
                       const simd::Kernels& k = simd::active_kernels());

EnergyReport energy_direct(const CirculantSpec& spec);

/// Dense symmetric matrix, row-major.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(std::size_t side) : side_(side), data_(side * side, 0.0) {}

    std::size_t side() const { return side_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * side_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * side_ + j]; }

    std::span<double> row(std::size_t i) { return {data_.data() + i * side_, side_}; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * side_, side_}; }

    bool is_symmetric() const;

private:
    std::size_t side_;
    std::vector<double> data_;
};

inline constexpr std::int64_t kDefaultDenseCap = 512;

/// Throws std::invalid_argument when n exceeds cap.
SymmetricMatrix build_adjacency(const CirculantSpec& spec, std::int64_t cap = kDefaultDenseCap);

/// All ones minus identity minus the Hamilton cycle 0-1-...-(n-1)-0.
SymmetricMatrix build_knh_adjacency(std::int64_t n, std::int64_t cap = kDefaultDenseCap);

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct JacobiOptions {
    double relative_tolerance = 1e-12;
    int max_sweeps = 100;
    std::int64_t cap = kDefaultDenseCap;
};

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations. Stops when
/// the off-diagonal Frobenius norm drops below tol * (1 + ||A||_F). Values
/// are returned in ascending order. Throws ConvergenceError after
/// max_sweeps, std::invalid_argument for a non-symmetric or oversized input.
std::vector<double> jacobi_eigenvalues(const SymmetricMatrix& a, const JacobiOptions& options = {},
                                       const simd::Kernels& k = simd::active_kernels());

/// Energy from the Jacobi spectrum of the built adjacency matrix.
EnergyReport energy_matrix(const CirculantSpec& spec, std::int64_t cap = kDefaultDenseCap);

/// Spectrum of K_n - H: n-3, then -1 - 2cos(2*pi*k/n) for k = 1..n-1.
Spectrum knh_eigenvalues(std::int64_t n);

EnergyReport knh_energy_direct(std::int64_t n);

}  // namespace circen
