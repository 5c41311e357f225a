#pragma once

// Independent reference computations for tests. Nothing here calls the
// library's root finders; values are obtained by brute force or finite
// differences so that they can check the production code paths.

#include <cmath>
#include <functional>

#include "ssrr/gas.hpp"
#include "ssrr/shock.hpp"
#include "ssrr/vec2.hpp"

namespace oracle {

inline const double kGolden = 0.5 * (1.0 + std::sqrt(5.0));

/// Plain bisection on a sign change of f over [lo, hi].
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int k = 0; k < 400; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Nontrivial root of rho^3 - 2 rho^2 + 1 = 0 above 1: the gamma = 2, rho_u = 1,
/// zn_u = 2 normal shock.
inline double golden_cubic_root() {
    return bisect([](double r) { return r * r * r - 2.0 * r * r + 1.0; }, 1.2, 3.0);
}

/// Normal shock solved in the downstream normal velocity instead of density,
/// with a brute-force scan for the bracket.
inline double normal_jump_zn_d(const ssrr::GasModel& gas, double rho_u, double zn_u) {
    const double m = rho_u * zn_u;
    const double energy = gas.pi(rho_u) + 0.5 * zn_u * zn_u;
    auto h = [&](double zn) { return gas.pi(m / zn) + 0.5 * zn * zn - energy; };
    // h < 0 just below zn_u on the compressive side; scan downward (log-spaced,
    // compression ratios up to 1e12) for the sign flip.
    const int n = 200000;
    double prev = zn_u * std::pow(10.0, -12.0 / n);
    for (int k = 2; k < n; ++k) {
        const double zn = zn_u * std::pow(10.0, -12.0 * k / n);
        if (h(zn) > 0.0) return bisect(h, zn, prev);
        prev = zn;
    }
    return NAN;
}

inline ssrr::Vec2 fd_gradient(const std::function<double(ssrr::Vec2)>& f, ssrr::Vec2 at, double step) {
    const double gx = (f(at + ssrr::Vec2{step, 0}) - f(at - ssrr::Vec2{step, 0})) / (2.0 * step);
    const double gy = (f(at + ssrr::Vec2{0, step}) - f(at - ssrr::Vec2{0, step})) / (2.0 * step);
    return {gx, gy};
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(1e-300, std::max(std::abs(a), std::abs(b))); }

}  // namespace oracle
