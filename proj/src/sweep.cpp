#include "ssrr/sweep.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "ssrr/errors.hpp"
#include "ssrr/parallel.hpp"

namespace ssrr {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = n == 1 ? lo : lo + (hi - lo) * k / (n - 1);
    return out;
}

struct Column {
    std::vector<SweepPoint> points;
    std::vector<LocusPoint> loci;
};

const ReflectionSolution* find_label(const std::vector<ReflectionSolution>& sols, ShockTypeLabel label) {
    for (const auto& s : sols) {
        if (s.type.label == label) return &s;
    }
    return nullptr;
}

// Bisection on a boolean predicate, true at a and false at b.
double bisect_flag(const std::function<bool(double)>& pred, double a, double b) {
    while (std::abs(b - a) > kLocusTolDeg) {
        const double mid = 0.5 * (a + b);
        if (mid == a || mid == b) break;
        (pred(mid) ? a : b) = mid;
    }
    return 0.5 * (a + b);
}

Column sweep_column(Scenario scenario, double gamma, const std::vector<double>& taus, double mach, int samples) {
    const ReflectionConfig base = sweep_config(scenario, gamma, 0.0, mach);
    const Polar polar = polar_trace(base.upstream, base.xi_r, samples, 1);
    const auto solve = [&](double tau_deg) {
        return solve_reflection(sweep_config(scenario, gamma, tau_deg, mach), polar);
    };

    Column col;
    std::vector<double> weak_l3(taus.size(), kNaN);
    for (std::size_t i = 0; i < taus.size(); ++i) {
        const auto sols = solve(taus[i]);
        SweepPoint p{taus[i], mach, static_cast<int>(sols.size()), kNaN, kNaN, kNaN, kNaN, kNaN};
        if (const auto* w = find_label(sols, ShockTypeLabel::weak)) {
            p.weak_L3 = w->mach_d;
            p.weak_rho = w->shock.rho_d;
            p.weak_indicator = w->type.indicator;
            weak_l3[i] = w->mach_d;
        }
        if (const auto* s = find_label(sols, ShockTypeLabel::strong)) {
            p.strong_rho = s->shock.rho_d;
            p.strong_indicator = s->type.indicator;
        }
        col.points.push_back(p);
    }

    for (std::size_t i = 1; i < taus.size(); ++i) {
        const bool a = col.points[i - 1].roots > 0, b = col.points[i].roots > 0;
        if (a != b) {
            const auto has_roots = [&](double t) { return !solve(t).empty(); };
            const double t = a ? bisect_flag(has_roots, taus[i - 1], taus[i]) : bisect_flag(has_roots, taus[i], taus[i - 1]);
            col.loci.push_back({"detachment", t, mach});
        }
    }
    for (std::size_t i = 1; i < taus.size(); ++i) {
        const double l0 = weak_l3[i - 1], l1 = weak_l3[i];
        if (std::isnan(l0) || std::isnan(l1) || (l0 > 1.0) == (l1 > 1.0)) continue;
        const auto supersonic = [&](double t) {
            const auto sols = solve(t);
            const auto* w = find_label(sols, ShockTypeLabel::weak);
            if (!w) throw Error("sweep: weak root lost inside sonic bracket");
            return w->mach_d > 1.0;
        };
        const double t = l0 > 1.0 ? bisect_flag(supersonic, taus[i - 1], taus[i]) : bisect_flag(supersonic, taus[i], taus[i - 1]);
        col.loci.push_back({"sonic", t, mach});
    }
    return col;
}

template <class Loop>
SweepResult sweep_with(Scenario scenario, double gamma, const SweepGrid& grid, int samples, Loop&& loop) {
    if (grid.tau_deg.empty() || grid.mach.empty()) throw DomainError("sweep grid must be nonempty");
    std::vector<Column> cols(grid.mach.size());
    loop(grid.mach.size(), [&](std::size_t j) {
        cols[j] = sweep_column(scenario, gamma, grid.tau_deg, grid.mach[j], samples);
    });
    SweepResult out{scenario, gamma, {}, {}};
    for (auto& c : cols) {
        out.points.insert(out.points.end(), c.points.begin(), c.points.end());
        out.loci.insert(out.loci.end(), c.loci.begin(), c.loci.end());
    }
    return out;
}

}  // namespace

SweepGrid make_sweep_grid(double tau_lo, double tau_hi, int n_tau, double mach_lo, double mach_hi, int n_mach) {
    if (n_tau < 1 || n_mach < 1) throw DomainError("sweep grid needs at least one point per axis");
    if (!(mach_lo > 1.0 && mach_hi > 1.0)) throw DomainError("sweep Mach numbers must exceed 1");
    return {linspace(tau_lo, tau_hi, n_tau), linspace(mach_lo, mach_hi, n_mach)};
}

ReflectionConfig sweep_config(Scenario scenario, double gamma, double tau_deg, double mach) {
    const GasModel gas(gamma);
    const double t = deg_to_rad(tau_deg);
    return make_reflection_config(UpstreamData(gas, 1.0, {mach * gas.sound_speed(1.0), 0.0}), {0.0, 0.0},
                                  {std::cos(t), std::sin(t)}, scenario);
}

SweepResult sweep_transitions(Scenario scenario, double gamma, const SweepGrid& grid, int polar_samples, int jobs) {
    return sweep_with(scenario, gamma, grid, polar_samples,
                      [jobs](std::size_t n, auto&& body) { parallel_for(n, jobs, body); });
}

SweepResult sweep_transitions_serial(Scenario scenario, double gamma, const SweepGrid& grid, int polar_samples) {
    return sweep_with(scenario, gamma, grid, polar_samples, [](std::size_t n, auto&& body) {
        for (std::size_t j = 0; j < n; ++j) body(j);
    });
}

}  // namespace ssrr
