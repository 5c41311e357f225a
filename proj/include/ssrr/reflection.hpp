#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "ssrr/polar.hpp"

namespace ssrr {

enum class Scenario { classical_rr, supersonic_wedge };

std::string_view to_string(Scenario s);

/// Local reflection problem at the reflection point xi_r.
///
/// `upstream` is the constant state on the hyperbolic side of the reflected
/// shock (state 2 for classical RR, state I for the wedge). The wall passes
/// through the similarity origin, so xi_r . n_wall = 0.
struct ReflectionConfig {
    UpstreamData upstream;
    Vec2 xi_r;
    Vec2 wall_dir;  ///< unit, pointing downstream along the wall
    Scenario scenario = Scenario::classical_rr;

    Vec2 wall_normal() const { return perp(wall_dir); }
};

/// Validates and normalizes; throws PreconditionError on slip incompatibility
/// and NoPolarError when the upstream state is pseudo-subsonic at xi_r.
ReflectionConfig make_reflection_config(const UpstreamData& upstream, Vec2 xi_r, Vec2 wall_dir,
                                        Scenario scenario = Scenario::classical_rr);

enum class SonicCharacter { transonic, sonic, supersonic };

std::string_view to_string(SonicCharacter s);

/// Rigid map into the corner frame: observer shift (downstream velocity 0),
/// rotation taking the wall to +x, and an optional mirror y -> -y so that the
/// shock tangent enters the first quadrant. The similarity origin is preserved.
struct CornerTransform {
    Vec2 shift;
    double rotation = 0.0;
    bool mirror = false;

    Vec2 vector(Vec2 v) const {
        const Vec2 r = rotated(v, rotation);
        return mirror ? Vec2{r.x, -r.y} : r;
    }
    Vec2 point(Vec2 xi) const { return vector(xi - shift); }
};

struct CornerGeometry {
    CornerTransform transform;
    double theta_deg;   ///< angle between wall and shock tangent T, (0, 90]
    double alpha_deg;   ///< counterclockwise angle from t_r to -g_v
    Vec2 t_r;           ///< shock tangent into the first quadrant
    Vec2 n_r;           ///< downstream normal, into the corner region
    Vec2 minus_gv;      ///< -g_v at the root, corner frame
    Vec2 xi_r;          ///< reflection point, corner frame (downstream velocity 0)
    Vec2 z_d;           ///< downstream pseudo-velocity, corner frame
    bool degenerate_theta;
};

struct ReflectionSolution {
    ShockPoint shock;
    ShockType type;
    double tau;          ///< turning angle from z^I to the wall, radians
    double mach_d;       ///< downstream pseudo-Mach L3
    SonicCharacter sonic;
    CornerGeometry corner;

    double theta_deg() const { return corner.theta_deg; }
    double alpha_deg() const { return corner.alpha_deg; }
    bool degenerate_theta() const { return corner.degenerate_theta; }
};

/// Constant state behind a straight incident shock through xi with normal n.
UpstreamData state_behind_incident(const UpstreamData& state1, Vec2 xi, Vec2 n_incident);

/// Corner-frame geometry of a wall-parallel root. Throws PreconditionError when
/// the root is not wall-parallel within 1e-10 or the sign facts
/// -g_v . t_r > 0, -g_v . n_r < 0 fail (non-degenerate case only).
CornerGeometry corner_geometry(const ReflectionConfig& config, const ShockPoint& shock);

/// (theta, alpha) in degrees.
std::pair<double, double> reflection_angles(const ReflectionSolution& solution, const ReflectionConfig& config);

/// Angle trichotomy: weak if alpha + theta < 90 deg, strong if > 90 deg, band 1e-7 deg.
ShockTypeLabel classify_by_angles(double theta_deg, double alpha_deg);

constexpr int kDefaultPolarSamples = 256;

/// Admissible nonzero-strength reflected shocks with downstream flow along the
/// wall, weak first. Empty means detachment.
std::vector<ReflectionSolution> solve_reflection(const ReflectionConfig& config,
                                                 int polar_samples = kDefaultPolarSamples, int jobs = 1);

/// Same, on a polar already traced at config.xi_r.
std::vector<ReflectionSolution> solve_reflection(const ReflectionConfig& config, const Polar& polar);

/// Change of inertial frame by observer velocity w (must be along the wall).
ReflectionConfig shift_observer(const ReflectionConfig& config, Vec2 w);

/// Rigid rotation of every vector in the configuration.
ReflectionConfig rotate_frame(const ReflectionConfig& config, double angle_rad);

}  // namespace ssrr
