#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ssrr/certificate.hpp"
#include "ssrr/diagnostic.hpp"
#include "ssrr/sweep.hpp"

namespace ssrr::cli {

/// Invalid configuration; the message names the offending field.
class ConfigError : public Error {
public:
    using Error::Error;
};

struct SweepSpec {
    double tau_lo = 0.5, tau_hi = 60.0;
    int n_tau = 60;
    double mach_lo = 1.5, mach_hi = 4.0;
    int n_mach = 6;
};

/// Parsed config file. Physics sections are optional so that each command
/// only demands what it uses; `require_*` report the missing field.
struct RunConfig {
    std::optional<double> gamma;
    Scenario scenario = Scenario::classical_rr;
    std::optional<double> rho;
    std::optional<Vec2> v;
    std::optional<Vec2> xi_r;
    std::optional<Vec2> wall_dir;
    // Classical RR front end: upstream is state 1, the reflected shock sees
    // the state behind this straight incident shock.
    std::optional<Vec2> incident_xi;
    std::optional<Vec2> incident_normal;

    int samples = kDefaultPolarSamples;
    std::optional<Vec2> polar_xi;
    double epsilon = 1e-3;
    std::optional<double> beta;
    int n_r = 256, n_phi = 256;
    bool force_weak = false;
    ShockTypeLabel root = ShockTypeLabel::strong;
    SweepSpec sweep;
    std::optional<std::string> field;
    DiagnosticOptions diagnose;

    double require_gamma() const;
    /// Upstream of the reflected shock (after the incident shock, when given).
    UpstreamData require_upstream() const;
    ReflectionConfig require_reflection() const;
};

/// Throws ConfigError with a field-precise message.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

/// "auto" or a number in (0, 1).
std::optional<double> parse_beta(const std::string& text);
/// "strong" or "weak".
ShockTypeLabel parse_root(const std::string& text);
/// "NxM" with positive integers.
std::pair<int, int> parse_grid(const std::string& text);

}  // namespace ssrr::cli
