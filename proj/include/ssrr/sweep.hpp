#pragma once

#include <string>
#include <vector>

#include "ssrr/reflection.hpp"

namespace ssrr {

/// Wall deflection (degrees, measured from the upstream pseudo-velocity) by
/// upstream pseudo-Mach number at the reflection point.
struct SweepGrid {
    std::vector<double> tau_deg;
    std::vector<double> mach;
};

/// Evenly spaced grid, endpoints included. Throws DomainError for empty axes
/// or Mach numbers not above 1.
SweepGrid make_sweep_grid(double tau_lo, double tau_hi, int n_tau, double mach_lo, double mach_hi, int n_mach);

/// One grid point. Absent quantities are NaN.
struct SweepPoint {
    double tau_deg;
    double mach;
    int roots;
    double weak_L3;
    double weak_rho;
    double strong_rho;
    double weak_indicator;
    double strong_indicator;
};

struct LocusPoint {
    std::string locus;  ///< "detachment" or "sonic"
    double tau_deg;
    double mach;
};

struct SweepResult {
    Scenario scenario;
    double gamma;
    std::vector<SweepPoint> points;  ///< by mach index, then tau index
    std::vector<LocusPoint> loci;    ///< by mach index; detachment before sonic
};

constexpr double kLocusTolDeg = 1e-9;

/// Local reflection at xi_r = 0 with rho = 1 and v = (M c, 0), wall at angle
/// tau. One polar is traced per Mach column and shared by its tau values.
/// Loci are bisected in tau between adjacent grid points to kLocusTolDeg.
SweepResult sweep_transitions(Scenario scenario, double gamma, const SweepGrid& grid,
                              int polar_samples = 128, int jobs = 0);

/// Single-threaded reference; identical output.
SweepResult sweep_transitions_serial(Scenario scenario, double gamma, const SweepGrid& grid,
                                     int polar_samples = 128);

/// Config used for grid point (tau_deg, mach).
ReflectionConfig sweep_config(Scenario scenario, double gamma, double tau_deg, double mach);

}  // namespace ssrr
