#include <algorithm>
#include <cmath>
#include <string>

#include "circen/spectrum.hpp"

namespace circen {

namespace {

// sqrt of the sum of squares strictly above the diagonal, times sqrt(2).
double off_diagonal_norm(const SymmetricMatrix& a, const simd::Kernels& k) {
    const std::size_t n = a.side();
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) acc += simd::sum_squares(a.row(i).subspan(i + 1), k);
    return std::sqrt(2.0 * acc);
}

double frobenius_norm(const SymmetricMatrix& a, const simd::Kernels& k) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.side(); ++i) acc += simd::sum_squares(a.row(i), k);
    return std::sqrt(acc);
}

// Annihilates a(p, q) with the rotation t = tan(theta) chosen as the smaller root.
void rotate(SymmetricMatrix& a, std::size_t p, std::size_t q, const simd::Kernels& k) {
    const double apq = a(p, q);
    const double app = a(p, p);
    const double aqq = a(q, q);
    const double theta = (aqq - app) / (2.0 * apq);
    double t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    // Rows p and q are contiguous; the columns follow by symmetry.
    simd::rotate_pair(a.row(p), a.row(q), c, s, k);
    const std::size_t n = a.side();
    for (std::size_t r = 0; r < n; ++r) {
        a(r, p) = a(p, r);
        a(r, q) = a(q, r);
    }
    a(p, p) = app - t * apq;
    a(q, q) = aqq + t * apq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;
}

}  // namespace

std::vector<double> jacobi_eigenvalues(const SymmetricMatrix& input, const JacobiOptions& options,
                                       const simd::Kernels& k) {
    const std::size_t n = input.side();
    if (static_cast<std::int64_t>(n) > options.cap)
        throw std::invalid_argument("jacobi_eigenvalues: side " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(options.cap));
    if (!input.is_symmetric()) throw std::invalid_argument("jacobi_eigenvalues: matrix is not symmetric");

    SymmetricMatrix a = input;
    const double threshold = options.relative_tolerance * (1.0 + frobenius_norm(a, k));

    bool converged = false;
    for (int sweep = 0; sweep <= options.max_sweeps; ++sweep) {
        if (off_diagonal_norm(a, k) < threshold) {
            converged = true;
            break;
        }
        if (sweep == options.max_sweeps) break;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (a(p, q) != 0.0) rotate(a, p, q, k);
    }
    if (!converged)
        throw ConvergenceError("Jacobi iteration did not converge in " + std::to_string(options.max_sweeps) +
                               " sweeps");

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace circen
