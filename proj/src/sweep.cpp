#include "circen/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "circen/closed_form.hpp"
#include "circen/spectrum.hpp"

namespace circen {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

// Fills out[i] = make(i) for every i, worker w taking indices w, w + W, ...
// Each slot is written by exactly one worker.
template <class T>
void parallel_fill(std::vector<T>& out, unsigned workers, const std::function<T(std::size_t)>& make) {
    const std::size_t count = out.size();
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = make(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < count; i += workers) out[i] = make(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

SweepRow circulant_row(std::int64_t n, std::int64_t gamma) {
    const double closed = energy_c1(n, gamma);
    const double direct = energy_direct(CirculantSpec(n, {1, gamma})).energy;
    return {n, gamma, closed, direct, std::fabs(closed - direct), complete_graph_energy(n),
            is_hyperenergetic(closed, n)};
}

SweepRow knh_row(std::int64_t n) {
    const double closed = energy_knh_closed(n);
    const double direct = knh_energy_direct(n).energy;
    return {n, 0, closed, direct, std::fabs(closed - direct), complete_graph_energy(n),
            is_hyperenergetic(closed, n)};
}

}  // namespace

std::string_view mode_name(SweepMode mode) {
    switch (mode) {
        case SweepMode::vary_n: return "n";
        case SweepMode::vary_gamma: return "gamma";
        case SweepMode::verify_grid: return "verify-grid";
        case SweepMode::knh: return "knh";
    }
    return "unknown";
}

void SweepConfig::validate() const {
    require(lo <= hi, "range: from (" + std::to_string(lo) + ") must be <= to (" + std::to_string(hi) + ")");
    require(step >= 1, "step must be >= 1");
    require(tolerance > 0.0, "tolerance must be > 0");
    switch (mode) {
        case SweepMode::vary_n:
            require(fixed >= 2, "gamma must be >= 2");
            require(lo >= 2 * fixed + 1, "n range must start at >= 2*gamma+1 = " + std::to_string(2 * fixed + 1));
            break;
        case SweepMode::vary_gamma:
            require(lo >= 2, "gamma range must start at >= 2");
            require(2 * hi + 1 <= fixed, "gamma range must end at <= (n-1)/2 = " + std::to_string((fixed - 1) / 2));
            break;
        case SweepMode::knh:
            require(lo >= 3, "K_n - H range must start at n >= 3");
            break;
        case SweepMode::verify_grid:
            require(lo >= 2, "gamma_max must be >= 2");
            require(hi >= 2 * lo + 1, "n_max must be >= 2*gamma_max+1");
            break;
    }
}

std::vector<SweepRow> run_n_sweep(std::int64_t gamma, std::int64_t n_lo, std::int64_t n_hi, std::int64_t step,
                                  unsigned workers) {
    SweepConfig{.mode = SweepMode::vary_n, .fixed = gamma, .lo = n_lo, .hi = n_hi, .step = step}.validate();
    std::vector<SweepRow> rows(static_cast<std::size_t>((n_hi - n_lo) / step + 1));
    parallel_fill<SweepRow>(rows, workers, [&](std::size_t i) {
        return circulant_row(n_lo + static_cast<std::int64_t>(i) * step, gamma);
    });
    return rows;
}

std::vector<SweepRow> run_gamma_sweep(std::int64_t n, std::int64_t gamma_lo, std::int64_t gamma_hi,
                                      unsigned workers) {
    SweepConfig{.mode = SweepMode::vary_gamma, .fixed = n, .lo = gamma_lo, .hi = gamma_hi}.validate();
    std::vector<SweepRow> rows(static_cast<std::size_t>(gamma_hi - gamma_lo + 1));
    parallel_fill<SweepRow>(rows, workers, [&](std::size_t i) {
        return circulant_row(n, gamma_lo + static_cast<std::int64_t>(i));
    });
    return rows;
}

std::vector<SweepRow> run_knh_sweep(std::int64_t n_lo, std::int64_t n_hi, unsigned workers) {
    SweepConfig{.mode = SweepMode::knh, .lo = n_lo, .hi = n_hi}.validate();
    std::vector<SweepRow> rows(static_cast<std::size_t>(n_hi - n_lo + 1));
    parallel_fill<SweepRow>(rows, workers,
                            [&](std::size_t i) { return knh_row(n_lo + static_cast<std::int64_t>(i)); });
    return rows;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
    config.validate();
    switch (config.mode) {
        case SweepMode::vary_n:
            return run_n_sweep(config.fixed, config.lo, config.hi, config.step, config.workers);
        case SweepMode::vary_gamma:
            return run_gamma_sweep(config.fixed, config.lo, config.hi, config.workers);
        case SweepMode::knh:
            return run_knh_sweep(config.lo, config.hi, config.workers);
        case SweepMode::verify_grid:
            break;
    }
    throw std::invalid_argument("run_sweep: verify-grid produces a summary, not rows; use run_verify_grid");
}

double worst_abs_diff(std::span<const SweepRow> rows) {
    double worst = 0.0;
    for (const auto& r : rows) worst = std::max(worst, r.abs_diff);
    return worst;
}

double relative_spread(std::span<const SweepRow> rows) {
    if (rows.empty()) return 0.0;
    double lo = rows.front().energy_closed;
    double hi = lo;
    double sum = 0.0;
    for (const auto& r : rows) {
        lo = std::min(lo, r.energy_closed);
        hi = std::max(hi, r.energy_closed);
        sum += r.energy_closed;
    }
    return (hi - lo) / (sum / static_cast<double>(rows.size()));
}

std::string_view case_kind_name(CaseKind kind) {
    switch (kind) {
        case CaseKind::theorem: return "theorem";
        case CaseKind::corollary: return "corollary";
        case CaseKind::knh: return "knh";
    }
    return "unknown";
}

VerifySummary run_verify_grid(std::int64_t gamma_max, std::int64_t n_max, double tolerance, unsigned workers) {
    require(gamma_max >= 2, "gamma-max must be >= 2");
    require(n_max >= 2 * gamma_max + 1, "n-max must be >= 2*gamma-max+1 = " + std::to_string(2 * gamma_max + 1));
    require(tolerance >= 0.0 && !std::isnan(tolerance), "tolerance must be >= 0");

    std::vector<VerifyCase> cases;
    VerifySummary summary;
    for (std::int64_t gamma = 2; gamma <= gamma_max; ++gamma)
        for (std::int64_t n = 2 * gamma + 1; n <= n_max; ++n) {
            cases.push_back({CaseKind::theorem, n, gamma, 0, 0.0, 0.0, 0.0});
            ++summary.checked;
        }
    for (std::int64_t gamma = 3; gamma <= gamma_max; ++gamma)
        for (std::int64_t alpha = 1; corollary_vertex_count(gamma, alpha) <= n_max; ++alpha) {
            cases.push_back({CaseKind::corollary, corollary_vertex_count(gamma, alpha), gamma, alpha, 0.0, 0.0, 0.0});
            ++summary.corollary_checked;
        }
    for (std::int64_t n = 3; n <= n_max; ++n) {
        cases.push_back({CaseKind::knh, n, 0, 0, 0.0, 0.0, 0.0});
        ++summary.knh_checked;
    }

    parallel_fill<VerifyCase>(cases, workers, [&](std::size_t i) {
        VerifyCase c = cases[i];
        switch (c.kind) {
            case CaseKind::theorem:
                c.closed = energy_c1(c.n, c.gamma);
                c.direct = energy_direct(CirculantSpec(c.n, {1, c.gamma})).energy;
                break;
            case CaseKind::corollary:
                c.closed = energy_corollary(c.gamma, c.alpha);
                c.direct = energy_direct(CirculantSpec(c.n, {1, c.gamma})).energy;
                break;
            case CaseKind::knh:
                c.closed = energy_knh_closed(c.n);
                c.direct = knh_energy_direct(c.n).energy;
                break;
        }
        c.diff = std::fabs(c.closed - c.direct);
        return c;
    });

    for (const auto& c : cases) {
        summary.worst_diff = std::max(summary.worst_diff, c.diff);
        if (c.diff > tolerance) summary.failures.push_back(c);
    }
    return summary;
}

}  // namespace circen
