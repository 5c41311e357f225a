#include "ssrr/gas.hpp"

#include <cmath>
#include <string>

#include "ssrr/errors.hpp"

namespace ssrr {

namespace {

void require_positive_density(double rho) {
    if (!(rho > 0.0)) {
        throw DomainError("density must be positive, got " + std::to_string(rho));
    }
}

}  // namespace

GasModel::GasModel(double gamma) : gamma_(gamma) {
    if (!(gamma >= 1.0 && gamma <= 4.0)) {
        throw DomainError("gamma must lie in [1, 4], got " + std::to_string(gamma));
    }
}

double GasModel::pressure(double rho) const {
    require_positive_density(rho);
    return std::pow(rho, gamma_);
}

double GasModel::sound_speed2(double rho) const {
    require_positive_density(rho);
    return isothermal() ? 1.0 : gamma_ * std::pow(rho, gamma_ - 1.0);
}

double GasModel::sound_speed(double rho) const { return std::sqrt(sound_speed2(rho)); }

double GasModel::pi(double rho) const {
    require_positive_density(rho);
    if (isothermal()) return std::log(rho);
    return gamma_ / (gamma_ - 1.0) * std::pow(rho, gamma_ - 1.0);
}

double GasModel::pi_inv(double q) const {
    if (isothermal()) {
        if (!std::isfinite(q)) throw VacuumError("pi_inv: non-finite argument");
        return std::exp(q);
    }
    if (!(q > 0.0)) {
        throw VacuumError("pi_inv: argument " + std::to_string(q) + " is outside the range of pi (vacuum)");
    }
    return std::pow(q * (gamma_ - 1.0) / gamma_, 1.0 / (gamma_ - 1.0));
}

double GasModel::density_from_bernoulli(double chi, Vec2 grad_chi) const {
    return pi_inv(-chi - 0.5 * norm2(grad_chi));
}

double pseudo_mach(const GasModel& gas, const PointState& s) {
    return norm(s.z()) / gas.sound_speed(s.rho);
}

PdeCoefficients pde_matrix(const GasModel& gas, const PointState& s) {
    const double c2 = gas.sound_speed2(s.rho);
    const Vec2 z = s.z();
    const Sym2 m{c2 - z.x * z.x, -z.x * z.y, c2 - z.y * z.y};
    return {m, norm2(z) < c2};
}

}  // namespace ssrr
