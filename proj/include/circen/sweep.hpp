#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

// Parameter sweeps that put the closed forms next to the direct oracle.
// Rows are independent and may be computed by several workers; the output
// is always in ascending order of the varied parameter and does not depend
// on the worker count.

namespace circen {

struct SweepRow {
    std::int64_t n;
    std::int64_t gamma;  // 0 for K_n - H rows
    double energy_closed;
    double energy_direct;
    double abs_diff;
    double kn_energy;
    bool hyperenergetic;  // from energy_closed
};

enum class SweepMode { vary_n, vary_gamma, verify_grid, knh };

std::string_view mode_name(SweepMode mode);

struct SweepConfig {
    SweepMode mode = SweepMode::vary_n;
    std::int64_t fixed = 0;  // gamma for vary_n, n for vary_gamma
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::int64_t step = 1;
    double tolerance = 1e-9;
    unsigned workers = 1;

    /// Throws std::invalid_argument naming the violated constraint.
    void validate() const;
};

/// C^{1,gamma}_n for n = n_lo, n_lo + step, ..., <= n_hi.
std::vector<SweepRow> run_n_sweep(std::int64_t gamma, std::int64_t n_lo, std::int64_t n_hi,
                                  std::int64_t step = 1, unsigned workers = 1);

/// C^{1,gamma}_n for gamma in [gamma_lo, gamma_hi].
std::vector<SweepRow> run_gamma_sweep(std::int64_t n, std::int64_t gamma_lo, std::int64_t gamma_hi,
                                      unsigned workers = 1);

/// K_n - H for n in [n_lo, n_hi].
std::vector<SweepRow> run_knh_sweep(std::int64_t n_lo, std::int64_t n_hi, unsigned workers = 1);

/// Runs the sweep a (non verify-grid) config describes.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

double worst_abs_diff(std::span<const SweepRow> rows);

/// (max - min) / mean of energy_closed; 0 for an empty list.
double relative_spread(std::span<const SweepRow> rows);

enum class CaseKind { theorem, corollary, knh };

std::string_view case_kind_name(CaseKind kind);

struct VerifyCase {
    CaseKind kind;
    std::int64_t n;
    std::int64_t gamma;
    std::int64_t alpha;
    double closed;
    double direct;
    double diff;
};

struct VerifySummary {
    std::int64_t checked = 0;            // Theorem grid cases
    std::int64_t corollary_checked = 0;  // (gamma, alpha) pairs with n <= n_max
    std::int64_t knh_checked = 0;        // K_n - H, n in [3, n_max]
    double worst_diff = 0.0;
    std::vector<VerifyCase> failures;  // every case with diff > tolerance

    bool passed() const { return failures.empty(); }
};

/// Closed forms vs direct summation over 2 <= gamma <= gamma_max,
/// 2 gamma + 1 <= n <= n_max, plus the Corollary instances and the K_n - H
/// range that fit under n_max.
VerifySummary run_verify_grid(std::int64_t gamma_max, std::int64_t n_max, double tolerance,
                              unsigned workers = 1);

}  // namespace circen
