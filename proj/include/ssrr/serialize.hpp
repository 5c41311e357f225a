#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ssrr/certificate.hpp"
#include "ssrr/diagnostic.hpp"
#include "ssrr/polar.hpp"
#include "ssrr/sweep.hpp"

namespace ssrr {

/// 17 significant digits; NaN as "nan", infinities as "inf" / "-inf".
std::string format_double(double x);
/// Inverse of format_double. Throws FormatError.
double parse_double(std::string_view s);

constexpr std::string_view kPolarCsvHeader = "Mn,side,nx,ny,vx,vy,rho_d,zt,zn_d,indicator,type";
constexpr std::string_view kSweepCsvHeader =
    "tau_deg,mach,roots,weak_L3,weak_rho,strong_rho,weak_indicator,strong_indicator";
constexpr std::string_view kLociCsvHeader = "gamma,locus,tau_deg,mach";

struct PolarRow {
    double mach_n;
    int side;
    Vec2 n;
    Vec2 v;
    double rho_d;
    double zt;
    double zn_d;
    double indicator;
    std::string type;
};

struct LocusRow {
    double gamma;
    std::string locus;
    double tau_deg;
    double mach;
};

void write_polar_csv(std::ostream& out, const Polar& polar);
std::vector<PolarRow> read_polar_csv(std::istream& in);

void write_sweep_csv(std::ostream& out, const SweepResult& sweep);
std::vector<SweepPoint> read_sweep_csv(std::istream& in);

void write_loci_csv(std::ostream& out, const SweepResult& sweep);
std::vector<LocusRow> read_loci_csv(std::istream& in);

nlohmann::json reflection_json(const ReflectionConfig& config, const std::vector<ReflectionSolution>& solutions);
nlohmann::json certificate_json(const Certificate& certificate);
nlohmann::json diagnostic_json(const MinimumReport& report);

/// Two-space indented JSON with a trailing newline.
std::string dump_json(const nlohmann::json& j);

/// Line-art plot of the polar in the velocity plane with the pseudo-normal
/// point, sonic points, maximal-turning points and the given roots marked.
std::string polar_svg(const Polar& polar, const std::vector<ReflectionSolution>& roots = {});

}  // namespace ssrr
