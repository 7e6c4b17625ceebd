#include "circen/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>

#include "circen/closed_form.hpp"
#include "circen/output.hpp"
#include "circen/spectrum.hpp"
#include "circen/sweep.hpp"

namespace circen::cli {

namespace {

struct EnergyArgs {
    std::int64_t n = 0;
    std::int64_t gamma = 0;
    std::string method = "closed";
    std::string format = "json";
};

struct KnhArgs {
    std::int64_t n = 0;
    std::string method = "closed";
    std::string format = "json";
};

struct SweepArgs {
    std::string vary;
    std::optional<std::int64_t> gamma;
    std::optional<std::int64_t> n;
    std::int64_t from = 0;
    std::int64_t to = 0;
    std::int64_t step = 1;
    std::string out_path;
    std::string format = "csv";
    unsigned workers = 0;
};

struct VerifyArgs {
    std::int64_t gamma_max = 0;
    std::int64_t n_max = 0;
    double tol = 1e-9;
    unsigned workers = 0;
};

struct RootsArgs {
    std::int64_t gamma = 0;
};

unsigned resolve_workers(unsigned requested) {
    if (requested > 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

void print_single(std::ostream& out, const EnergyReport& report, std::int64_t gamma, const std::string& format) {
    if (format == "csv") {
        out << "n,gamma,method,energy,kn_energy,hyperenergetic\n"
            << report.n << ',' << gamma << ',' << method_name(report.method) << ','
            << format_number(report.energy) << ',' << format_number(report.kn_energy) << ','
            << (report.hyperenergetic ? "true" : "false") << '\n';
    } else {
        out << energy_json(report, gamma).dump() << '\n';
    }
}

int cmd_energy(const EnergyArgs& a, std::ostream& out) {
    EnergyReport report{};
    if (a.method == "closed") {
        report = make_energy_report(energy_c1(a.n, a.gamma), EnergyMethod::closed, a.n);
    } else {
        if (a.gamma < 1) throw std::invalid_argument("gamma must be >= 1");
        const CirculantSpec spec(a.n, {1, a.gamma});
        if (a.method == "direct") {
            report = energy_direct(spec);
        } else {
            if (a.n > kDefaultDenseCap)
                throw std::invalid_argument("n must be <= " + std::to_string(kDefaultDenseCap) +
                                            " for method=matrix");
            report = energy_matrix(spec);
        }
    }
    print_single(out, report, a.gamma, a.format);
    return kSuccess;
}

int cmd_knh(const KnhArgs& a, std::ostream& out) {
    if (a.n < 3) throw std::invalid_argument("n must be >= 3 for K_n - H");
    const EnergyReport report = a.method == "closed"
                                    ? make_energy_report(energy_knh_closed(a.n), EnergyMethod::closed, a.n)
                                    : knh_energy_direct(a.n);
    print_single(out, report, 0, a.format);
    return kSuccess;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
    SweepConfig config;
    config.lo = a.from;
    config.hi = a.to;
    config.step = a.step;
    config.workers = resolve_workers(a.workers);
    if (a.vary == "n") {
        if (!a.gamma) throw std::invalid_argument("--vary n requires --gamma");
        config.mode = SweepMode::vary_n;
        config.fixed = *a.gamma;
    } else if (a.vary == "gamma") {
        if (!a.n) throw std::invalid_argument("--vary gamma requires --n");
        config.mode = SweepMode::vary_gamma;
        config.fixed = *a.n;
    } else {
        config.mode = SweepMode::knh;
    }
    if (config.mode != SweepMode::vary_n && a.step != 1)
        throw std::invalid_argument("--step is only supported with --vary n");
    config.validate();

    const std::vector<SweepRow> rows = run_sweep(config);

    std::ofstream file;
    if (!a.out_path.empty()) {
        file.open(a.out_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "error: cannot open output file '" << a.out_path << "'\n";
            return kIoError;
        }
    }
    std::ostream& sink = a.out_path.empty() ? out : static_cast<std::ostream&>(file);
    if (a.format == "json")
        sink << sweep_json(rows).dump(2) << '\n';
    else
        write_sweep_csv(sink, rows);
    sink.flush();
    if (!sink) {
        err << "error: failed writing output\n";
        return kIoError;
    }

    std::ostream& summary = a.out_path.empty() ? err : out;
    summary << "sweep vary=" << mode_name(config.mode) << " rows=" << rows.size()
            << " worst_abs_diff=" << format_number(worst_abs_diff(rows));
    if (config.mode == SweepMode::vary_gamma) summary << " relative_spread=" << format_number(relative_spread(rows));
    if (!a.out_path.empty()) summary << " out=" << a.out_path;
    summary << '\n';
    return kSuccess;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const VerifySummary s = run_verify_grid(a.gamma_max, a.n_max, a.tol, resolve_workers(a.workers));
    out << "verify checked=" << s.checked << " corollary_checked=" << s.corollary_checked
        << " knh_checked=" << s.knh_checked << " failures=" << s.failures.size()
        << " worst_diff=" << format_number(s.worst_diff) << " tol=" << format_number(a.tol) << '\n';
    constexpr std::size_t kMaxListed = 20;
    for (std::size_t i = 0; i < std::min(kMaxListed, s.failures.size()); ++i) {
        const auto& f = s.failures[i];
        out << "  fail " << case_kind_name(f.kind) << " n=" << f.n << " gamma=" << f.gamma << " alpha=" << f.alpha
            << " closed=" << format_number(f.closed) << " direct=" << format_number(f.direct)
            << " diff=" << format_number(f.diff) << '\n';
    }
    if (s.failures.size() > kMaxListed) out << "  ... " << s.failures.size() - kMaxListed << " more\n";
    return s.passed() ? kSuccess : kVerificationFailed;
}

int cmd_roots(const RootsArgs& a, std::ostream& out) {
    const auto roots = cos_sum_roots(a.gamma);
    out << roots_json(a.gamma, roots).dump() << '\n';
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graph energy of circulant graphs C^{1,gamma}_n and of K_n - H", "circen"};
    app.set_version_flag("--version", std::string(tool_version()));
    app.require_subcommand(1);

    EnergyArgs energy_args;
    auto* energy = app.add_subcommand("energy", "Energy of C^{1,gamma}_n");
    energy->add_option("--n", energy_args.n, "vertex count")->required();
    energy->add_option("--gamma", energy_args.gamma, "second generator")->required();
    energy->add_option("--method", energy_args.method, "closed | direct | matrix")
        ->check(CLI::IsMember({"closed", "direct", "matrix"}));
    energy->add_option("--format", energy_args.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    KnhArgs knh_args;
    auto* knh = app.add_subcommand("knh", "Energy of K_n minus a Hamilton cycle");
    knh->add_option("--n", knh_args.n, "vertex count")->required();
    knh->add_option("--method", knh_args.method, "closed | direct")->check(CLI::IsMember({"closed", "direct"}));
    knh->add_option("--format", knh_args.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "Closed form vs direct energy over a parameter range");
    sweep->add_option("--vary", sweep_args.vary, "n | gamma | knh")
        ->required()
        ->check(CLI::IsMember({"n", "gamma", "knh"}));
    sweep->add_option("--gamma", sweep_args.gamma, "fixed gamma (--vary n)");
    sweep->add_option("--n", sweep_args.n, "fixed n (--vary gamma)");
    sweep->add_option("--from", sweep_args.from, "first value of the varied parameter")->required();
    sweep->add_option("--to", sweep_args.to, "last value of the varied parameter")->required();
    sweep->add_option("--step", sweep_args.step, "stride (--vary n)");
    sweep->add_option("--out", sweep_args.out_path, "output file (default: standard output)");
    sweep->add_option("--format", sweep_args.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--workers", sweep_args.workers, "worker threads (0: hardware concurrency)");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Check every closed form against direct summation");
    verify->add_option("--gamma-max", verify_args.gamma_max)->required();
    verify->add_option("--n-max", verify_args.n_max)->required();
    verify->add_option("--tol", verify_args.tol, "absolute tolerance");
    verify->add_option("--workers", verify_args.workers, "worker threads (0: hardware concurrency)");

    RootsArgs roots_args;
    auto* roots = app.add_subcommand("roots", "Roots of cos x + cos(gamma x) in (0, pi]");
    roots->add_option("--gamma", roots_args.gamma)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::CallForVersion&) {
        out << tool_version() << '\n';
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    }

    try {
        if (*energy) return cmd_energy(energy_args, out);
        if (*knh) return cmd_knh(knh_args, out);
        if (*sweep) return cmd_sweep(sweep_args, out, err);
        if (*verify) return cmd_verify(verify_args, out);
        if (*roots) return cmd_roots(roots_args, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailed;
    }
    return kBadArguments;
}

}  // namespace circen::cli
