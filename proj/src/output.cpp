#include "circen/output.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#ifndef CIRCEN_VERSION
#define CIRCEN_VERSION "0.0.0"
#endif

namespace circen {

std::string_view tool_version() { return "circen " CIRCEN_VERSION; }

std::string format_number(double v) {
    if (v == 0.0) v = 0.0;  // no "-0"
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 15);
    return std::string(buf, res.ptr);
}

double round_to_15_digits(double v) {
    const std::string s = format_number(v);
    double out = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), out);
    return out;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
    out << kSweepCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.n << ',' << r.gamma << ',' << format_number(r.energy_closed) << ','
            << format_number(r.energy_direct) << ',' << format_number(r.abs_diff) << ','
            << format_number(r.kn_energy) << ',' << (r.hyperenergetic ? "true" : "false") << '\n';
    }
}

nlohmann::ordered_json sweep_json(std::span<const SweepRow> rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        arr.push_back({{"n", r.n},
                       {"gamma", r.gamma},
                       {"energy_closed", round_to_15_digits(r.energy_closed)},
                       {"energy_direct", round_to_15_digits(r.energy_direct)},
                       {"abs_diff", round_to_15_digits(r.abs_diff)},
                       {"kn_energy", round_to_15_digits(r.kn_energy)},
                       {"hyperenergetic", r.hyperenergetic}});
    }
    return arr;
}

namespace {

template <class T>
T parse_field(std::string_view field, std::size_t line) {
    T value{};
    const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size())
        throw std::runtime_error("csv line " + std::to_string(line) + ": bad field '" + std::string(field) + "'");
    return value;
}

}  // namespace

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kSweepCsvHeader)
        throw std::runtime_error("csv: missing or unexpected header");
    std::vector<SweepRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string_view> fields;
        std::string_view rest = line;
        for (;;) {
            const auto comma = rest.find(',');
            fields.push_back(rest.substr(0, comma));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (fields.size() != 7)
            throw std::runtime_error("csv line " + std::to_string(line_no) + ": expected 7 fields");
        SweepRow r{};
        r.n = parse_field<std::int64_t>(fields[0], line_no);
        r.gamma = parse_field<std::int64_t>(fields[1], line_no);
        r.energy_closed = parse_field<double>(fields[2], line_no);
        r.energy_direct = parse_field<double>(fields[3], line_no);
        r.abs_diff = parse_field<double>(fields[4], line_no);
        r.kn_energy = parse_field<double>(fields[5], line_no);
        if (fields[6] == "true")
            r.hyperenergetic = true;
        else if (fields[6] == "false")
            r.hyperenergetic = false;
        else
            throw std::runtime_error("csv line " + std::to_string(line_no) + ": bad boolean");
        rows.push_back(r);
    }
    return rows;
}

nlohmann::ordered_json energy_json(const EnergyReport& report, std::int64_t gamma) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    if (gamma > 0) j["gamma"] = gamma;
    j["method"] = std::string(method_name(report.method));
    j["energy"] = round_to_15_digits(report.energy);
    j["kn_energy"] = round_to_15_digits(report.kn_energy);
    j["hyperenergetic"] = report.hyperenergetic;
    j["version"] = std::string(tool_version());
    return j;
}

nlohmann::ordered_json roots_json(std::int64_t gamma, std::span<const CosSumRoot> roots) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& r : roots) {
        const double residual = std::fabs(std::cos(r.value) + std::cos(static_cast<double>(gamma) * r.value));
        list.push_back({{"fraction", r.fraction()},
                        {"value", round_to_15_digits(r.value)},
                        {"residual", round_to_15_digits(residual)}});
    }
    return {{"gamma", gamma}, {"roots", list}, {"version", std::string(tool_version())}};
}

}  // namespace circen
