#include "ssrr/shock.hpp"

#include <cmath>
#include <string>

#include "ssrr/errors.hpp"

namespace ssrr {

UpstreamData::UpstreamData(GasModel gas, double rho, Vec2 v)
    : gas_(gas), rho_(rho), v_(v), psi0_(-gas.pi(rho) - 0.5 * norm2(v)), c_(gas.sound_speed(rho)) {}

NormalJump normal_jump(const GasModel& gas, double rho_u, double zn_u) {
    const double c2_u = gas.sound_speed2(rho_u);
    if (!(zn_u > std::sqrt(c2_u))) {
        throw NoShockError("normal_jump: upstream normal pseudo-velocity " + std::to_string(zn_u) +
                           " is not supersonic (c = " + std::to_string(std::sqrt(c2_u)) + ")");
    }
    // Unknown x = rho_d / rho_u - 1 > 0. The energy residual
    //   pi(rho_d) - pi(rho_u) + m^2/2 (rho_d^-2 - rho_u^-2)
    // divided by x has the trivial root x = 0 removed and stays well conditioned
    // as the shock strength vanishes:
    //   G(x) = c_u^2 E(x) / x - zn_u^2 (2 + x) / (2 (1 + x)^2),
    // with E(x) = ((1 + x)^(gamma-1) - 1) / (gamma - 1), or log(1 + x) when gamma = 1.
    // G(0+) = c_u^2 - zn_u^2 < 0 and G has a single sign change on x > 0.
    const double a = gas.gamma() - 1.0;
    auto reduced = [&](double x) {
        const double lx = std::log1p(x);
        const double e = gas.isothermal() ? lx : std::expm1(a * lx) / a;
        return c2_u * e / x - 0.5 * zn_u * zn_u * (2.0 + x) / ((1.0 + x) * (1.0 + x));
    };
    double lo = 0.0;
    double hi = 1.0;
    for (int k = 0; reduced(hi) <= 0.0; ++k) {
        if (k > 1000) throw NoShockError("normal_jump: failed to bracket downstream density");
        lo = hi;
        hi *= 2.0;
    }
    for (int k = 0; k < 2000; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (reduced(mid) > 0.0 ? hi : lo) = mid;
    }
    const double x = 0.5 * (lo + hi);
    return {rho_u * (1.0 + x), zn_u / (1.0 + x)};
}

double ShockPoint::mach_d() const {
    return norm(z_d()) / upstream.gas().sound_speed(rho_d);
}

ShockPoint oblique_jump(const UpstreamData& upstream, Vec2 xi, Vec2 n) {
    const double len = norm(n);
    if (!(len > 0.0)) throw DomainError("oblique_jump: zero normal");
    n = n / len;
    const Vec2 t = perp(n);
    const Vec2 z = upstream.z(xi);
    const double zn_u = dot(z, n);
    const double zt = dot(z, t);
    const NormalJump jump = normal_jump(upstream.gas(), upstream.rho(), zn_u);
    return ShockPoint{upstream, xi, n, jump.rho_d, xi + jump.zn_d * n + zt * t};
}

Vec2 shock_normal_from_velocities(Vec2 v_u, Vec2 v_d) {
    const Vec2 jump = v_u - v_d;
    const double len = norm(jump);
    if (!(len > 0.0)) throw DegenerateShockError("shock normal undefined: velocity jump vanishes");
    return jump / len;
}

double downstream_density(const UpstreamData& upstream, Vec2 v, Vec2 xi) {
    // -psi^I(xi) + v.xi - |v|^2/2, grouped so that xi enters only through the
    // velocity jump: exact invariance under shifts of xi along the shock.
    return upstream.gas().pi_inv(-upstream.psi0() - 0.5 * norm2(v) + dot(v - upstream.v(), xi));
}

namespace {

// rho (v - xi) - rho^I (v^I - xi) projected on e.
double flux_jump_along(const UpstreamData& upstream, double rho, Vec2 v, Vec2 xi, Vec2 e) {
    return rho * dot(v - xi, e) - upstream.rho() * dot(upstream.v() - xi, e);
}

void require_nonvanishing(const UpstreamData& upstream, Vec2 v) {
    if (norm(upstream.v() - v) < 1e-9 * (1.0 + norm(upstream.v()))) {
        throw DegenerateShockError("g is singular at v = v^I (vanishing shock)");
    }
}

}  // namespace

double g_eval(const UpstreamData& upstream, Vec2 v, Vec2 xi) {
    require_nonvanishing(upstream, v);
    const double rho = downstream_density(upstream, v, xi);
    return flux_jump_along(upstream, rho, v, xi, normalized(upstream.v() - v));
}

Vec2 g_grad_v(const UpstreamData& upstream, Vec2 v, Vec2 xi) {
    require_nonvanishing(upstream, v);
    const double rho = downstream_density(upstream, v, xi);
    const double c2 = upstream.gas().sound_speed2(rho);
    const Vec2 z = v - xi;
    const Vec2 dv = upstream.v() - v;
    const double dist = norm(dv);
    const Vec2 n = dv / dist;
    const Vec2 t = perp(n);
    return rho * (n - (dot(z, n) / c2) * z) - (flux_jump_along(upstream, rho, v, xi, t) / dist) * t;
}

bool admissible(const ShockPoint& s) { return s.zn_u() >= s.zn_d(); }

}  // namespace ssrr
