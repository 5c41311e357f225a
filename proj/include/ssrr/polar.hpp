#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ssrr/shock.hpp"

namespace ssrr {

enum class ShockTypeLabel { weak, critical, strong };

std::string_view to_string(ShockTypeLabel label);

/// Weak/strong/critical classification by the sign of g_v . z_d.
struct ShockType {
    ShockTypeLabel label;
    double indicator;   ///< g_v . (v_d - xi)
    double tolerance;   ///< relative critical band, 1e-9 |g_v| |z_d|
};

ShockType classify_type(const UpstreamData& upstream, const ShockPoint& shock);

/// Polar branch tag. Side +1 carries z^t > 0 and positive turning angle.
enum class Side : int { minus = -1, plus = 1 };

constexpr int sign_of(Side s) { return static_cast<int>(s); }

/// Shock through xi whose upstream normal pseudo-Mach number is mach_n.
/// mach_n ranges over (1, |z^I| / c^I]; the upper end is the pseudo-normal shock.
ShockPoint polar_shock(const UpstreamData& upstream, Vec2 xi, double mach_n, Side side);

/// Same polar point addressed by the angle phi between the shock normal and z^I,
/// phi in [0, acos(c^I / |z^I|)). Root finding works in phi: the turning angle is
/// smooth in phi at the pseudo-normal point, where it has infinite slope in mach_n.
ShockPoint polar_shock_at_angle(const UpstreamData& upstream, Vec2 xi, double phi, Side side);

/// Signed counterclockwise angle from z^I to z_d, in radians.
double turning_angle(const ShockPoint& shock);

struct PolarSample {
    double mach_n;
    double phi;
    Side side;
    ShockPoint shock;
    ShockType type;
    double tau;   ///< turning angle, radians
};

struct Polar {
    UpstreamData upstream;
    Vec2 xi;
    double mach_max;                   ///< |z^I| / c^I, attained at the pseudo-normal point
    std::vector<PolarSample> samples;  ///< side minus then side plus, each by increasing mach_n

    // Distinguished points; the positive side is stored, the negative side is its mirror.
    double critical_phi;               ///< normal angle where g_v . z_d = 0 (maximal turning)
    double critical_mach;
    double tau_max;                    ///< maximal turning angle tau_*, radians
    std::optional<double> sonic_phi;   ///< normal angle where the downstream pseudo-Mach equals 1
    std::optional<double> sonic_mach;

    double phi_max() const;            ///< zero-strength limit of the normal angle

    std::size_t samples_per_side() const { return samples.size() / 2; }
    const PolarSample& normal_point() const { return samples[samples_per_side() - 1]; }
};

/// Cosine-clustered grid over (1, mach_max], n points, denser near both ends.
std::vector<double> polar_mach_grid(double mach_max, int n);

/// Parallel polar trace (OpenMP over samples). jobs <= 0 uses the runtime default.
Polar polar_trace(const UpstreamData& upstream, Vec2 xi, int n_samples, int jobs = 0);

/// Serial reference for polar_trace; produces bit-identical samples.
Polar polar_trace_serial(const UpstreamData& upstream, Vec2 xi, int n_samples);

struct ConvexityReport {
    std::vector<double> curvature;  ///< three-point signed curvature along the admissible branch
    bool single_signed;
};

ConvexityReport convexity_report(const Polar& polar);

struct PolarRoot {
    double mach_n;
    double phi;
    Side side;
    ShockPoint shock;
    ShockType type;
    double tau;
};

/// All admissible nonzero-strength polar points with turning angle tau (radians).
/// Empty for |tau| > tau_*; a single critical root at |tau| = tau_*.
std::vector<PolarRoot> solve_deflection(const Polar& polar, double tau);

}  // namespace ssrr
