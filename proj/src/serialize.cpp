#include "ssrr/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "ssrr/errors.hpp"

namespace ssrr {

namespace {

using nlohmann::json;

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

// Rows of a CSV with the expected header and column count.
std::vector<std::vector<std::string>> read_table(std::istream& in, std::string_view header) {
    std::string line;
    if (!std::getline(in, line) || line != header) {
        throw FormatError("csv: expected header '" + std::string(header) + "'");
    }
    const std::size_t cols = split_csv(std::string(header)).size();
    std::vector<std::vector<std::string>> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto cells = split_csv(line);
        if (cells.size() != cols) throw FormatError("csv: line " + std::to_string(line_no) + " has wrong column count");
        rows.push_back(std::move(cells));
    }
    return rows;
}

int parse_int(const std::string& s) {
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (s.empty() || *end != '\0') throw FormatError("csv: '" + s + "' is not an integer");
    return static_cast<int>(v);
}

json vec(Vec2 v) { return json::array({v.x, v.y}); }

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double parse_double(std::string_view s) {
    const std::string str(s);
    if (str == "nan") return std::numeric_limits<double>::quiet_NaN();
    char* end = nullptr;
    const double v = std::strtod(str.c_str(), &end);
    if (str.empty() || *end != '\0') throw FormatError("'" + str + "' is not a number");
    return v;
}

void write_polar_csv(std::ostream& out, const Polar& polar) {
    out << kPolarCsvHeader << '\n';
    for (const auto& s : polar.samples) {
        const ShockPoint& p = s.shock;
        out << format_double(s.mach_n) << ',' << sign_of(s.side) << ',' << format_double(p.n.x) << ','
            << format_double(p.n.y) << ',' << format_double(p.v_d.x) << ',' << format_double(p.v_d.y) << ','
            << format_double(p.rho_d) << ',' << format_double(p.zt()) << ',' << format_double(p.zn_d()) << ','
            << format_double(s.type.indicator) << ',' << to_string(s.type.label) << '\n';
    }
}

std::vector<PolarRow> read_polar_csv(std::istream& in) {
    std::vector<PolarRow> rows;
    for (const auto& c : read_table(in, kPolarCsvHeader)) {
        rows.push_back({parse_double(c[0]), parse_int(c[1]), {parse_double(c[2]), parse_double(c[3])},
                        {parse_double(c[4]), parse_double(c[5])}, parse_double(c[6]), parse_double(c[7]),
                        parse_double(c[8]), parse_double(c[9]), c[10]});
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep) {
    out << kSweepCsvHeader << '\n';
    for (const auto& p : sweep.points) {
        out << format_double(p.tau_deg) << ',' << format_double(p.mach) << ',' << p.roots << ','
            << format_double(p.weak_L3) << ',' << format_double(p.weak_rho) << ',' << format_double(p.strong_rho) << ','
            << format_double(p.weak_indicator) << ',' << format_double(p.strong_indicator) << '\n';
    }
}

std::vector<SweepPoint> read_sweep_csv(std::istream& in) {
    std::vector<SweepPoint> rows;
    for (const auto& c : read_table(in, kSweepCsvHeader)) {
        rows.push_back({parse_double(c[0]), parse_double(c[1]), parse_int(c[2]), parse_double(c[3]),
                        parse_double(c[4]), parse_double(c[5]), parse_double(c[6]), parse_double(c[7])});
    }
    return rows;
}

void write_loci_csv(std::ostream& out, const SweepResult& sweep) {
    out << kLociCsvHeader << '\n';
    for (const auto& l : sweep.loci) {
        out << format_double(sweep.gamma) << ',' << l.locus << ',' << format_double(l.tau_deg) << ','
            << format_double(l.mach) << '\n';
    }
}

std::vector<LocusRow> read_loci_csv(std::istream& in) {
    std::vector<LocusRow> rows;
    for (const auto& c : read_table(in, kLociCsvHeader)) {
        rows.push_back({parse_double(c[0]), c[1], parse_double(c[2]), parse_double(c[3])});
    }
    return rows;
}

json reflection_json(const ReflectionConfig& config, const std::vector<ReflectionSolution>& solutions) {
    json sols = json::array();
    for (const auto& s : solutions) {
        sols.push_back({
            {"type", to_string(s.type.label)},
            {"indicator", s.type.indicator},
            {"rho_d", s.shock.rho_d},
            {"v_d", vec(s.shock.v_d)},
            {"normal", vec(s.shock.n)},
            {"L3", s.mach_d},
            {"sonic_character", to_string(s.sonic)},
            {"tau_deg", rad_to_deg(s.tau)},
            {"theta", s.theta_deg()},
            {"alpha", s.alpha_deg()},
            {"degenerate_theta", s.degenerate_theta()},
        });
    }
    return {
        {"gamma", config.upstream.gas().gamma()},
        {"scenario", to_string(config.scenario)},
        {"upstream", {{"rho", config.upstream.rho()}, {"v", vec(config.upstream.v())}}},
        {"xi_r", vec(config.xi_r)},
        {"wall_dir", vec(config.wall_dir)},
        {"tau_deg", rad_to_deg(signed_angle(config.upstream.z(config.xi_r), config.wall_dir))},
        {"detached", solutions.empty()},
        {"solutions", sols},
    };
}

json certificate_json(const Certificate& c) {
    json frame = nullptr;
    if (c.frame) {
        frame = {{"theta", c.frame->theta}, {"alpha", c.frame->alpha}, {"a", c.frame->a},
                 {"theta_t", c.frame->theta_t}, {"alpha_t", c.frame->alpha_t}};
    }
    return {
        {"status", to_string(c.status)},
        {"message", c.message},
        {"beta", number_or_null(c.beta)},
        {"epsilon", number_or_null(c.epsilon)},
        {"delta_interior", number_or_null(c.delta_interior)},
        {"delta_shock", number_or_null(c.delta_shock)},
        {"delta_shock_closed_form", number_or_null(c.delta_shock_closed_form)},
        {"wall_residual", number_or_null(c.wall_residual)},
        {"corner_descent", number_or_null(c.corner_descent)},
        {"delta_interior_undilated", number_or_null(c.delta_interior_undilated)},
        {"delta_shock_undilated", number_or_null(c.delta_shock_undilated)},
        {"frame", frame},
    };
}

json diagnostic_json(const MinimumReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations) {
        violations.push_back({{"kind", v.kind}, {"i", v.i}, {"j", v.j}, {"value", number_or_null(v.value)},
                              {"detail", v.detail}});
    }
    std::size_t minima = 0;
    for (const auto& e : r.extrema) minima += e.kind == ExtremumKind::min;
    return {
        {"verdict", to_string(r.verdict)},
        {"scope", r.scope},
        {"angle_vI_nB_deg", number_or_null(r.angle_vI_nB_deg)},
        {"global_min", {{"i", r.global_min_i}, {"j", r.global_min_j}, {"unique", r.unique_global_min}}},
        {"local_minima", minima},
        {"wall_checks", r.walls.size()},
        {"shock_nodes", r.shocks.size()},
        {"violations", violations},
    };
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ssrr
