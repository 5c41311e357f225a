#include "ssrr/reflection.hpp"

#include <algorithm>
#include <cmath>

#include "ssrr/errors.hpp"

namespace ssrr {

std::string_view to_string(Scenario s) {
    return s == Scenario::classical_rr ? "classical_rr" : "supersonic_wedge";
}

std::string_view to_string(SonicCharacter s) {
    switch (s) {
        case SonicCharacter::transonic: return "transonic";
        case SonicCharacter::sonic: return "sonic";
        case SonicCharacter::supersonic: return "supersonic";
    }
    return "unknown";
}

ReflectionConfig make_reflection_config(const UpstreamData& upstream, Vec2 xi_r, Vec2 wall_dir, Scenario scenario) {
    const double len = norm(wall_dir);
    if (!(len > 0.0)) throw PreconditionError("wall direction must be nonzero");
    ReflectionConfig config{upstream, xi_r, wall_dir / len, scenario};
    if (std::abs(dot(xi_r, config.wall_normal())) > 1e-12 * (1.0 + norm(xi_r))) {
        throw PreconditionError("reflection point violates slip compatibility: xi_r . n_wall != 0");
    }
    if (!upstream.pseudo_supersonic_at(xi_r)) throw NoPolarError("upstream pseudo-subsonic at xi");
    return config;
}

UpstreamData state_behind_incident(const UpstreamData& state1, Vec2 xi, Vec2 n_incident) {
    const ShockPoint s = oblique_jump(state1, xi, n_incident);
    return UpstreamData(state1.gas(), s.rho_d, s.v_d);
}

CornerGeometry corner_geometry(const ReflectionConfig& config, const ShockPoint& shock) {
    const Vec2 wall = config.wall_dir;
    const double off_wall = std::abs(dot(shock.v_d, config.wall_normal()));
    if (off_wall > 1e-10 * (1.0 + norm(shock.v_d))) {
        throw PreconditionError("downstream velocity is not parallel to the wall");
    }
    if (!(dot(shock.z_d(), wall) > 0.0)) {
        throw PreconditionError("downstream pseudo-velocity does not point downstream along the wall");
    }

    CornerGeometry g{};
    g.transform.shift = dot(shock.v_d, wall) * wall;
    g.transform.rotation = -std::atan2(wall.y, wall.x);
    g.transform.mirror = rotated(shock.n, g.transform.rotation).y > 0.0;

    const Vec2 n = g.transform.vector(shock.n);
    g.n_r = n;
    g.t_r = perp(n);
    g.theta_deg = rad_to_deg(std::atan2(n.x, -n.y));
    g.minus_gv = -g.transform.vector(g_grad_v(config.upstream, shock.v_d, shock.xi));
    g.alpha_deg = rad_to_deg(signed_angle(g.t_r, g.minus_gv));
    g.xi_r = g.transform.point(shock.xi);
    g.z_d = g.transform.vector(shock.z_d());
    g.degenerate_theta = g.theta_deg > 90.0 - 1e-9;

    if (!g.degenerate_theta && !(dot(g.minus_gv, g.t_r) > 0.0 && dot(g.minus_gv, g.n_r) < 0.0)) {
        throw PreconditionError("sign facts -g_v.t_r > 0 and -g_v.n_r < 0 violated (inadmissible root)");
    }
    return g;
}

std::pair<double, double> reflection_angles(const ReflectionSolution& solution, const ReflectionConfig& config) {
    const CornerGeometry g = corner_geometry(config, solution.shock);
    return {g.theta_deg, g.alpha_deg};
}

ShockTypeLabel classify_by_angles(double theta_deg, double alpha_deg) {
    if (!(theta_deg > 0.0 && theta_deg < 90.0)) {
        throw PreconditionError("classify_by_angles: theta must lie in (0, 90) degrees");
    }
    constexpr double kTol = 1e-7;
    const double sum = alpha_deg + theta_deg;
    if (sum < 90.0 - kTol) return ShockTypeLabel::weak;
    if (sum > 90.0 + kTol) return ShockTypeLabel::strong;
    return ShockTypeLabel::critical;
}

std::vector<ReflectionSolution> solve_reflection(const ReflectionConfig& config, const Polar& polar) {
    const double tau = signed_angle(config.upstream.z(config.xi_r), config.wall_dir);
    std::vector<ReflectionSolution> out;
    for (PolarRoot& root : solve_deflection(polar, tau)) {
        if (!(dot(root.shock.z_d(), config.wall_dir) > 0.0)) continue;
        const double mach_d = root.shock.mach_d();
        SonicCharacter sonic = SonicCharacter::sonic;
        if (mach_d < 1.0 - 1e-12) sonic = SonicCharacter::transonic;
        if (mach_d > 1.0 + 1e-12) sonic = SonicCharacter::supersonic;
        CornerGeometry corner = corner_geometry(config, root.shock);
        out.push_back(ReflectionSolution{std::move(root.shock), root.type, root.tau, mach_d, sonic, corner});
    }
    std::sort(out.begin(), out.end(), [](const ReflectionSolution& a, const ReflectionSolution& b) {
        if (a.type.label != b.type.label) return a.type.label < b.type.label;
        return a.shock.rho_d < b.shock.rho_d;
    });
    return out;
}

std::vector<ReflectionSolution> solve_reflection(const ReflectionConfig& config, int polar_samples, int jobs) {
    return solve_reflection(config, polar_trace(config.upstream, config.xi_r, polar_samples, jobs));
}

ReflectionConfig shift_observer(const ReflectionConfig& config, Vec2 w) {
    if (std::abs(dot(w, config.wall_normal())) > 1e-12 * (1.0 + norm(w))) {
        throw PreconditionError("observer shift must be along the wall to keep slip compatibility");
    }
    const UpstreamData& up = config.upstream;
    return ReflectionConfig{UpstreamData(up.gas(), up.rho(), up.v() - w), config.xi_r - w, config.wall_dir,
                            config.scenario};
}

ReflectionConfig rotate_frame(const ReflectionConfig& config, double angle_rad) {
    const UpstreamData& up = config.upstream;
    return ReflectionConfig{UpstreamData(up.gas(), up.rho(), rotated(up.v(), angle_rad)),
                            rotated(config.xi_r, angle_rad), rotated(config.wall_dir, angle_rad), config.scenario};
}

}  // namespace ssrr
