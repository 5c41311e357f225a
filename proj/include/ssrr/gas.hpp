#pragma once

#include "ssrr/vec2.hpp"

namespace ssrr {

/// Polytropic gas with pressure law p(rho) = rho^gamma, gamma in [1, 4].
///
/// The enthalpy-like map pi satisfies dpi/drho = c^2 / rho. Its additive
/// constant is fixed so that pi(0) = 0 for gamma > 1 and pi(1) = 0 for the
/// isothermal case gamma = 1, where pi(rho) = ln(rho). The two branches do not
/// join continuously as gamma -> 1.
class GasModel {
public:
    explicit GasModel(double gamma);

    double gamma() const { return gamma_; }
    bool isothermal() const { return gamma_ == 1.0; }

    double pressure(double rho) const;
    double sound_speed(double rho) const;
    /// c^2, cheaper than squaring sound_speed.
    double sound_speed2(double rho) const;

    double pi(double rho) const;
    /// Exact inverse of pi. Throws VacuumError for q <= 0 when gamma > 1.
    double pi_inv(double q) const;

    /// rho = pi^{-1}(-chi - |grad chi|^2 / 2).
    double density_from_bernoulli(double chi, Vec2 grad_chi) const;

private:
    double gamma_;
};

/// Local flow state at one similarity point.
struct PointState {
    double rho = 1.0;
    Vec2 v;
    Vec2 xi;

    /// Pseudo-velocity z = v - xi.
    Vec2 z() const { return v - xi; }
};

double pseudo_mach(const GasModel& gas, const PointState& s);

struct PdeCoefficients {
    Sym2 matrix;     ///< c^2 I - z z^T
    bool elliptic;   ///< true iff pseudo-Mach < 1
};

PdeCoefficients pde_matrix(const GasModel& gas, const PointState& s);

}  // namespace ssrr
