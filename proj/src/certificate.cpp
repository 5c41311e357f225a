#include "ssrr/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ssrr/parallel.hpp"

namespace ssrr {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kWallTol = 1e-14;

bool in_strong_window(double sum_deg) { return sum_deg > 90.0 && sum_deg < 180.0; }

CornerFrame assemble(Vec2 xi_r, double theta, double alpha, double a, Vec2 gv, double mach_d, double psi_ref) {
    CornerFrame f{xi_r, theta, alpha, a, 0.0, 0.0, gv, {}, mach_d, psi_ref};
    const Vec2 t_r{std::cos(deg_to_rad(theta)), std::sin(deg_to_rad(theta))};
    const Vec2 t_t = f.dilate(t_r);
    f.gv_t = f.dilate(gv);
    f.theta_t = rad_to_deg(std::atan2(t_t.y, t_t.x));
    f.alpha_t = rad_to_deg(signed_angle(t_t, f.gv_t));
    return f;
}

struct RowResult {
    double interior = std::numeric_limits<double>::infinity();
    double shock = 0.0;
    double wall = 0.0;
};

template <class Loop>
Certificate check_with(const CornerFrame& frame, double beta, double epsilon, int n_r, int n_phi, Loop&& loop) {
    if (!(beta > 0.0 && beta < 1.0)) throw DomainError("beta must lie in (0, 1)");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("epsilon must lie in (0, 1)");
    if (n_r < 64 || n_phi < 64) throw DomainError("certificate grid must have at least 64 points per axis");

    const Subsolution sub{frame.psi_ref, epsilon, beta};
    const double theta_t = deg_to_rad(frame.theta_t);
    const Vec2 u = normalized(frame.gv_t);
    const Vec2 e_r{std::cos(theta_t), std::sin(theta_t)};
    const Vec2 e_phi = perp(e_r);

    std::vector<RowResult> rows(static_cast<std::size_t>(n_r));
    loop(rows.size(), [&](std::size_t i) {
        const double r = std::pow(10.0, -6.0 + 6.0 * static_cast<double>(i) / (n_r - 1));
        RowResult& row = rows[i];
        for (int j = 0; j < n_phi; ++j) {
            const double phi = theta_t * j / (n_phi - 1);
            row.interior = std::min(row.interior, sub.eval(r, phi).laplacian * r / epsilon);
        }
        const auto on_ray = sub.eval(r, theta_t);
        const Vec2 grad = on_ray.psi_r * e_r + on_ray.psi_phi_r * e_phi;
        row.shock = dot(u, grad) / -epsilon;
        row.wall = std::abs(sub.eval(r, 0.0).psi_phi_r);
    });

    Certificate c{};
    c.beta = beta;
    c.epsilon = epsilon;
    c.delta_interior = rows[0].interior;
    c.delta_shock = rows[0].shock;
    c.wall_residual = rows[0].wall;
    for (const auto& row : rows) {
        c.delta_interior = std::min(c.delta_interior, row.interior);
        c.delta_shock = std::min(c.delta_shock, row.shock);
        c.wall_residual = std::max(c.wall_residual, row.wall);
    }
    c.delta_shock_closed_form = shock_bracket(frame, beta);
    // psi_r vanishes at the corner because the downstream velocity is zero there.
    c.corner_descent = 0.0 - sub.eval(1.0, 0.0).psi_r;
    c.delta_interior_undilated = c.delta_interior / frame.map_norm();
    c.delta_shock_undilated = c.delta_shock * norm(frame.gv_t) / frame.inverse_map_norm();
    c.frame = frame;

    const bool ok = c.delta_interior > 0.0 && c.delta_shock > 0.0 && c.wall_residual < kWallTol &&
                    c.corner_descent < 0.0;
    c.status = ok ? CertificateStatus::certified : CertificateStatus::failed;
    if (!ok) {
        c.message = c.delta_shock <= 0.0 ? "shock inequality violated on the tangent ray"
                                         : "interior or wall inequality violated";
    }
    return c;
}

Certificate status_only(CertificateStatus status, const std::string& message, double epsilon) {
    return Certificate{status, message, kNaN, epsilon, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, std::nullopt};
}

}  // namespace

std::string_view to_string(CertificateStatus s) {
    switch (s) {
        case CertificateStatus::certified: return "certified";
        case CertificateStatus::not_strong_type: return "not_strong_type";
        case CertificateStatus::degenerate_theta: return "degenerate_theta";
        case CertificateStatus::failed: return "failed";
    }
    return "unknown";
}

CornerFrame build_corner_frame(const ReflectionConfig& config, const ReflectionSolution& solution, bool check_strong) {
    const CornerGeometry& g = solution.corner;
    if (g.degenerate_theta) {
        throw CertificateError(CertificateStatus::degenerate_theta, "shock meets the wall at a right angle");
    }
    if (check_strong && solution.type.label != ShockTypeLabel::strong) {
        throw CertificateError(CertificateStatus::not_strong_type,
                               std::string("reflected shock is ") + std::string(to_string(solution.type.label)) +
                                   "-type");
    }
    if (!(solution.mach_d < 1.0)) {
        throw CertificateError(CertificateStatus::failed, "downstream state is not elliptic at the corner");
    }
    const double a = std::sqrt(1.0 - solution.mach_d * solution.mach_d);
    const CornerFrame f = assemble(g.xi_r, g.theta_deg, g.alpha_deg, a, g.minus_gv, solution.mach_d,
                                   config.upstream.psi(config.xi_r));
    if (check_strong && !(in_strong_window(f.alpha + f.theta) && in_strong_window(f.alpha_t + f.theta_t))) {
        throw CertificateError(CertificateStatus::not_strong_type, "angle window 90 < alpha + theta < 180 fails");
    }
    return f;
}

CornerFrame corner_frame_from_angles(double theta_deg, double alpha_deg, double a) {
    if (!(a > 0.0 && a <= 1.0)) throw DomainError("dilation factor must lie in (0, 1]");
    const Vec2 gv = rotated({std::cos(deg_to_rad(theta_deg)), std::sin(deg_to_rad(theta_deg))}, deg_to_rad(alpha_deg));
    const double mach = std::sqrt(1.0 - a * a);
    return assemble({-mach, 0.0}, theta_deg, alpha_deg, a, gv, mach, 0.0);
}

double shock_bracket(const CornerFrame& frame, double beta) {
    const double at = deg_to_rad(frame.alpha_t), tt = deg_to_rad(frame.theta_t);
    return -((1.0 - beta) * std::cos(at) * std::cos(beta * tt) + beta * std::cos(at + beta * tt));
}

double choose_beta(const CornerFrame& frame) {
    const double excess = frame.alpha_t + frame.theta_t - 90.0;
    if (!(excess > 0.0)) throw CertificateError(CertificateStatus::not_strong_type, "empty beta window");
    const double margin = std::min(1.0, excess / 2.0);
    for (int k = 1; k <= 40; ++k) {
        const double beta = 1.0 - std::ldexp(1.0, -k);
        if (frame.alpha_t + beta * frame.theta_t > 90.0 + margin && shock_bracket(frame, beta) > 0.0) return beta;
    }
    throw CertificateError(CertificateStatus::not_strong_type, "no feasible beta");
}

Subsolution::Value Subsolution::eval(double r, double phi) const {
    if (!(r > 0.0)) throw DomainError("subsolution radius must be positive");
    const double c = std::cos(beta * phi), s = std::sin(beta * phi);
    return {psi_ref + epsilon * r * c, epsilon * c, -epsilon * beta * s, epsilon / r * (1.0 - beta * beta) * c};
}

Certificate check_certificate(const CornerFrame& frame, double beta, double epsilon, int n_r, int n_phi, int jobs) {
    return check_with(frame, beta, epsilon, n_r, n_phi,
                      [jobs](std::size_t n, auto&& body) { parallel_for(n, jobs, body); });
}

Certificate check_certificate_serial(const CornerFrame& frame, double beta, double epsilon, int n_r, int n_phi) {
    return check_with(frame, beta, epsilon, n_r, n_phi, [](std::size_t n, auto&& body) {
        for (std::size_t i = 0; i < n; ++i) body(i);
    });
}

Certificate certify_nonexistence(const ReflectionConfig& config, const CertifyOptions& options) {
    const auto sols = solve_reflection(config, options.polar_samples, options.jobs);
    const ShockTypeLabel wanted = options.force_weak ? ShockTypeLabel::weak : options.root;
    const auto it = std::find_if(sols.begin(), sols.end(), [&](const auto& s) { return s.type.label == wanted; });
    if (it == sols.end()) {
        if (options.force_weak) {
            return status_only(CertificateStatus::failed, "no weak root to force through", options.epsilon);
        }
        return status_only(CertificateStatus::not_strong_type,
                           sols.empty() ? "no reflected shock (detachment)"
                                        : "no " + std::string(to_string(wanted)) + "-type root",
                           options.epsilon);
    }
    try {
        const CornerFrame frame = build_corner_frame(config, *it, !options.force_weak);
        double beta = 0.0;
        if (options.beta) {
            beta = *options.beta;
        } else if (options.force_weak) {
            beta = 1.0 - std::ldexp(1.0, -10);
        } else {
            beta = choose_beta(frame);
        }
        return check_certificate(frame, beta, options.epsilon, options.n_r, options.n_phi, options.jobs);
    } catch (const CertificateError& e) {
        return status_only(e.status(), e.what(), options.epsilon);
    }
}

}  // namespace ssrr
