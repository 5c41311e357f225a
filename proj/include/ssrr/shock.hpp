#pragma once

#include "ssrr/gas.hpp"
#include "ssrr/vec2.hpp"

namespace ssrr {

/// Constant upstream state with affine potential psi(xi) = psi0 + v . xi.
///
/// psi0 is not a free parameter: the Bernoulli constant is fixed to zero,
/// which forces psi0 = -pi(rho) - |v|^2 / 2.
class UpstreamData {
public:
    UpstreamData(GasModel gas, double rho, Vec2 v);

    const GasModel& gas() const { return gas_; }
    double rho() const { return rho_; }
    Vec2 v() const { return v_; }
    double psi0() const { return psi0_; }
    double sound_speed() const { return c_; }

    double psi(Vec2 xi) const { return psi0_ + dot(v_, xi); }
    Vec2 z(Vec2 xi) const { return v_ - xi; }
    bool pseudo_supersonic_at(Vec2 xi) const { return norm(z(xi)) > c_; }

private:
    GasModel gas_;
    double rho_;
    Vec2 v_;
    double psi0_;
    double c_;
};

struct NormalJump {
    double rho_d;
    double zn_d;
};

/// Compressive solution of rho_u zn_u = rho_d zn_d together with
/// pi(rho_d) + zn_d^2/2 = pi(rho_u) + zn_u^2/2.
///
/// Solved for the compression ratio by bisection to machine resolution, on a
/// residual with the trivial root divided out.
NormalJump normal_jump(const GasModel& gas, double rho_u, double zn_u);

/// One shock through xi with downstream normal n (z^I . n > 0).
struct ShockPoint {
    UpstreamData upstream;
    Vec2 xi;
    Vec2 n;
    double rho_d;
    Vec2 v_d;

    Vec2 t() const { return perp(n); }
    double rho_u() const { return upstream.rho(); }
    double zn_u() const { return dot(upstream.z(xi), n); }
    double zn_d() const { return dot(v_d - xi, n); }
    /// Tangential pseudo-velocity, shared by both sides.
    double zt() const { return dot(upstream.z(xi), t()); }
    Vec2 z_d() const { return v_d - xi; }
    /// Downstream pseudo-Mach number.
    double mach_d() const;
    double strength() const { return norm(upstream.v() - v_d); }
};

ShockPoint oblique_jump(const UpstreamData& upstream, Vec2 xi, Vec2 n);

/// n = (v_u - v_d) / |v_u - v_d|.
Vec2 shock_normal_from_velocities(Vec2 v_u, Vec2 v_d);

/// Density implied downstream of a shock through xi with downstream velocity v,
/// from continuity of the potential and the Bernoulli law.
double downstream_density(const UpstreamData& upstream, Vec2 v, Vec2 xi);

/// Shock-condition residual g(v, xi); zero exactly on the shock polar.
double g_eval(const UpstreamData& upstream, Vec2 v, Vec2 xi);

/// Closed-form gradient of g with respect to v.
Vec2 g_grad_v(const UpstreamData& upstream, Vec2 v, Vec2 xi);

/// zn_u >= zn_d (compressive). Equality is the zero-strength boundary case.
bool admissible(const ShockPoint& s);

}  // namespace ssrr
