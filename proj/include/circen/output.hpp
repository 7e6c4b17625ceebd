#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "circen/closed_form.hpp"
#include "circen/spectrum.hpp"
#include "circen/sweep.hpp"

namespace circen {

std::string_view tool_version();

inline constexpr std::string_view kSweepCsvHeader =
    "n,gamma,energy_closed,energy_direct,abs_diff,kn_energy,hyperenergetic";

/// Shortest decimal form of v with at most 15 significant digits.
std::string format_number(double v);

/// v rounded to 15 significant digits, so a JSON writer that prints the
/// shortest round-trip form emits no more than 15 digits.
double round_to_15_digits(double v);

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);
nlohmann::ordered_json sweep_json(std::span<const SweepRow> rows);

/// Parses CSV produced by write_sweep_csv. Throws std::runtime_error on a
/// wrong header or malformed line.
std::vector<SweepRow> read_sweep_csv(std::istream& in);

nlohmann::ordered_json energy_json(const EnergyReport& report, std::int64_t gamma);
nlohmann::ordered_json roots_json(std::int64_t gamma, std::span<const CosSumRoot> roots);

}  // namespace circen
