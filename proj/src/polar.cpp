#include "ssrr/polar.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "ssrr/errors.hpp"
#include "ssrr/parallel.hpp"

namespace ssrr {

std::string_view to_string(ShockTypeLabel label) {
    switch (label) {
        case ShockTypeLabel::weak: return "weak";
        case ShockTypeLabel::critical: return "critical";
        case ShockTypeLabel::strong: return "strong";
    }
    return "unknown";
}

ShockType classify_type(const UpstreamData& upstream, const ShockPoint& shock) {
    if (shock.strength() < 1e-9 * (1.0 + norm(upstream.v()))) {
        throw DegenerateShockError("classify_type: zero-strength shock has no type");
    }
    const Vec2 gv = g_grad_v(upstream, shock.v_d, shock.xi);
    const Vec2 z = shock.z_d();
    const double indicator = dot(gv, z);
    const double tol = 1e-9 * norm(gv) * norm(z);
    ShockTypeLabel label = ShockTypeLabel::critical;
    if (indicator < -tol) label = ShockTypeLabel::weak;
    if (indicator > tol) label = ShockTypeLabel::strong;
    return {label, indicator, tol};
}

namespace {

double mach_max_at(const UpstreamData& upstream, Vec2 xi) {
    const double mach_max = norm(upstream.z(xi)) / upstream.sound_speed();
    if (!(mach_max > 1.0)) throw NoPolarError("upstream pseudo-subsonic at xi");
    return mach_max;
}

double phi_of_mach(double mach_n, double mach_max) { return std::acos(std::min(1.0, mach_n / mach_max)); }

}  // namespace

ShockPoint polar_shock_at_angle(const UpstreamData& upstream, Vec2 xi, double phi, Side side) {
    mach_max_at(upstream, xi);
    const Vec2 n = rotated(normalized(upstream.z(xi)), -sign_of(side) * phi);
    return oblique_jump(upstream, xi, n);
}

ShockPoint polar_shock(const UpstreamData& upstream, Vec2 xi, double mach_n, Side side) {
    const double mach_max = mach_max_at(upstream, xi);
    if (!(mach_n > 1.0)) throw NoShockError("polar_shock: normal pseudo-Mach must exceed 1");
    return polar_shock_at_angle(upstream, xi, phi_of_mach(mach_n, mach_max), side);
}

double Polar::phi_max() const { return std::acos(1.0 / mach_max); }

double turning_angle(const ShockPoint& shock) {
    return signed_angle(shock.upstream.z(shock.xi), shock.z_d());
}

std::vector<double> polar_mach_grid(double mach_max, int n) {
    std::vector<double> grid(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const double s = 0.5 * (1.0 - std::cos(kPi * k / n));
        grid[static_cast<std::size_t>(k - 1)] = (k == n) ? mach_max : 1.0 + (mach_max - 1.0) * s;
    }
    return grid;
}

namespace {

PolarSample make_sample(const UpstreamData& upstream, Vec2 xi, double mach_n, double mach_max, Side side) {
    const double phi = phi_of_mach(mach_n, mach_max);
    ShockPoint shock = polar_shock_at_angle(upstream, xi, phi, side);
    const ShockType type = classify_type(upstream, shock);
    const double tau = turning_angle(shock);
    return PolarSample{mach_n, phi, side, std::move(shock), type, tau};
}

/// Bisection on [lo, hi] to floating-point resolution. f(lo) and f(hi) must
/// have opposite signs; neither endpoint is evaluated.
template <class F>
double bisect(F&& f, double lo, double hi, bool increasing) {
    for (int k = 0; k < 200; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double v = f(mid);
        if (v == 0.0) return mid;
        ((v > 0.0) == increasing ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

void locate_distinguished(Polar& polar) {
    const std::size_t per_side = polar.samples_per_side();
    const auto plus = [&](std::size_t k) -> const PolarSample& { return polar.samples[per_side + k]; };
    const auto shock_at = [&](double phi) {
        return polar_shock_at_angle(polar.upstream, polar.xi, phi, Side::plus);
    };

    // The indicator is negative near zero strength (phi_max) and positive at the
    // pseudo-normal point (phi = 0). Bisect in phi, which decreases along the samples.
    std::size_t k_hi = 0;
    while (k_hi < per_side && !(plus(k_hi).type.indicator > 0.0)) ++k_hi;
    if (k_hi == per_side) throw Error("polar: indicator never becomes positive");
    const double phi_lo = plus(k_hi).phi;
    const double phi_hi = k_hi == 0 ? polar.phi_max() : plus(k_hi - 1).phi;
    const auto indicator = [&](double phi) { return classify_type(polar.upstream, shock_at(phi)).indicator; };
    polar.critical_phi = (plus(k_hi).type.indicator == 0.0) ? phi_lo : bisect(indicator, phi_lo, phi_hi, false);
    polar.critical_mach = polar.mach_max * std::cos(polar.critical_phi);
    polar.tau_max = turning_angle(shock_at(polar.critical_phi));

    const auto sonic_excess = [&](double phi) { return shock_at(phi).mach_d() - 1.0; };
    polar.sonic_phi.reset();
    polar.sonic_mach.reset();
    double prev_phi = polar.phi_max();
    for (std::size_t k = 0; k < per_side; ++k) {
        const double excess = plus(k).shock.mach_d() - 1.0;
        if (excess <= 0.0) {
            polar.sonic_phi = excess == 0.0 ? plus(k).phi : bisect(sonic_excess, plus(k).phi, prev_phi, true);
            polar.sonic_mach = polar.mach_max * std::cos(*polar.sonic_phi);
            break;
        }
        prev_phi = plus(k).phi;
    }
}

Polar empty_polar(const UpstreamData& upstream, Vec2 xi, int n_samples) {
    if (n_samples < 2) throw DomainError("polar_trace: need at least 2 samples per side");
    const double mach_max = mach_max_at(upstream, xi);
    return Polar{upstream, xi, mach_max, {}, 0.0, 0.0, 0.0, std::nullopt, std::nullopt};
}

template <class Loop>
Polar trace_with(const UpstreamData& upstream, Vec2 xi, int n_samples, Loop&& loop) {
    Polar polar = empty_polar(upstream, xi, n_samples);
    const std::vector<double> grid = polar_mach_grid(polar.mach_max, n_samples);
    const std::size_t per_side = grid.size();
    std::vector<std::optional<PolarSample>> slots(2 * per_side);
    loop(slots.size(), [&](std::size_t i) {
        const Side side = i < per_side ? Side::minus : Side::plus;
        slots[i] = make_sample(upstream, xi, grid[i % per_side], polar.mach_max, side);
    });
    polar.samples.reserve(slots.size());
    for (auto& s : slots) polar.samples.push_back(std::move(*s));
    locate_distinguished(polar);
    return polar;
}

}  // namespace

Polar polar_trace(const UpstreamData& upstream, Vec2 xi, int n_samples, int jobs) {
    return trace_with(upstream, xi, n_samples, [jobs](std::size_t n, auto&& body) { parallel_for(n, jobs, body); });
}

Polar polar_trace_serial(const UpstreamData& upstream, Vec2 xi, int n_samples) {
    return trace_with(upstream, xi, n_samples, [](std::size_t n, auto&& body) {
        for (std::size_t i = 0; i < n; ++i) body(i);
    });
}

ConvexityReport convexity_report(const Polar& polar) {
    const std::size_t per_side = polar.samples_per_side();
    if (per_side < 16) throw DomainError("convexity_report: need at least 16 samples per side");

    // Walk the admissible branch from the minus endpoint through N to the plus endpoint.
    std::vector<Vec2> pts;
    pts.reserve(2 * per_side - 1);
    for (std::size_t k = 0; k < per_side; ++k) pts.push_back(polar.samples[k].shock.v_d);
    for (std::size_t k = per_side - 1; k-- > 0;) pts.push_back(polar.samples[per_side + k].shock.v_d);

    ConvexityReport report{{}, true};
    report.curvature.reserve(pts.size() - 2);
    int sign = 0;
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        const Vec2 a = pts[i - 1], b = pts[i], c = pts[i + 1];
        const double kappa = 2.0 * cross(b - a, c - b) / (norm(b - a) * norm(c - b) * norm(c - a));
        report.curvature.push_back(kappa);
        const int s = kappa > 0.0 ? 1 : (kappa < 0.0 ? -1 : 0);
        if (s == 0 || (sign != 0 && s != sign)) report.single_signed = false;
        if (sign == 0) sign = s;
    }
    return report;
}

std::vector<PolarRoot> solve_deflection(const Polar& polar, double tau) {
    constexpr double kTauTol = 1e-12;
    const double target = std::abs(tau);
    const Side side = tau >= 0.0 ? Side::plus : Side::minus;
    const int s = sign_of(side);
    std::vector<PolarRoot> roots;

    auto root_at = [&](double phi, Side sd) {
        ShockPoint shock = polar_shock_at_angle(polar.upstream, polar.xi, phi, sd);
        const ShockType type = classify_type(polar.upstream, shock);
        const double t = turning_angle(shock);
        roots.push_back(PolarRoot{polar.mach_max * std::cos(phi), phi, sd, std::move(shock), type, t});
    };

    if (target > polar.tau_max + kTauTol) return roots;
    if (target >= polar.tau_max - kTauTol) {
        root_at(polar.critical_phi, side);
        return roots;
    }
    if (target == 0.0) {
        root_at(0.0, Side::plus);
        return roots;
    }

    // Bracketing nodes in phi: the zero-strength end, the traced samples of this
    // side (mirror images of the plus side) and the critical point, which
    // separates the monotone weak and strong branches.
    struct Node {
        double phi;
        double f;
    };
    const std::size_t per_side = polar.samples_per_side();
    std::vector<Node> nodes;
    nodes.reserve(per_side + 2);
    nodes.push_back({polar.phi_max(), -target});
    for (std::size_t k = 0; k < per_side; ++k) {
        const PolarSample& sample = polar.samples[per_side + k];
        nodes.push_back({sample.phi, sample.tau - target});
    }
    nodes.push_back({polar.critical_phi, polar.tau_max - target});
    std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) { return a.phi > b.phi; });

    const auto f = [&](double phi) {
        return s * turning_angle(polar_shock_at_angle(polar.upstream, polar.xi, phi, side)) - target;
    };
    std::vector<double> phis;
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        const Node& a = nodes[i - 1];
        const Node& b = nodes[i];
        if (b.f == 0.0) {
            phis.push_back(b.phi);
        } else if ((a.f < 0.0 && b.f > 0.0) || (a.f > 0.0 && b.f < 0.0)) {
            // bisect() wants lo < hi; here a.phi > b.phi.
            phis.push_back(bisect(f, b.phi, a.phi, b.f < 0.0));
        }
    }
    phis.erase(std::unique(phis.begin(), phis.end()), phis.end());

    const double vanishing = 1e-9 * (1.0 + norm(polar.upstream.v()));
    for (const double phi : phis) {
        const ShockPoint shock = polar_shock_at_angle(polar.upstream, polar.xi, phi, side);
        if (shock.strength() < vanishing) continue;
        root_at(phi, side);
    }
    return roots;
}

}  // namespace ssrr
