#include "ssrr/diagnostic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "ssrr/errors.hpp"
#include "ssrr/parallel.hpp"

namespace ssrr {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr int kOffsets[8][2] = {{-1, -1}, {0, -1}, {1, -1}, {-1, 0}, {1, 0}, {-1, 1}, {0, 1}, {1, 1}};

bool is_wall(NodeLabel l) { return l == NodeLabel::wall_A || l == NodeLabel::wall_B || l == NodeLabel::arc_P; }

double psi_scale(const GridField& f) {
    double m = 0.0;
    for (std::size_t k = 0; k < f.values.size(); ++k) {
        if (f.labels[k] != NodeLabel::outside) m = std::max(m, std::abs(f.values[k]));
    }
    return m;
}

// Derivative of psi at (i, j) along grid direction (di, dj), using only
// active nodes: central if possible, else second-order one-sided, else first order.
std::optional<double> directional(const GridField& f, int i, int j, int di, int dj) {
    const double h = std::hypot(di * f.dx, dj * f.dy);
    const double p0 = f.psi(i, j);
    const auto at = [&](int k) -> std::optional<double> {
        if (!f.active(i + k * di, j + k * dj)) return std::nullopt;
        return f.psi(i + k * di, j + k * dj);
    };
    const auto pf = at(1), pb = at(-1);
    if (pf && pb) return (*pf - *pb) / (2.0 * h);
    if (pf) {
        if (const auto pf2 = at(2)) return (-3.0 * p0 + 4.0 * *pf - *pf2) / (2.0 * h);
        return (*pf - p0) / h;
    }
    if (pb) {
        if (const auto pb2 = at(-2)) return (3.0 * p0 - 4.0 * *pb + *pb2) / (2.0 * h);
        return (p0 - *pb) / h;
    }
    return std::nullopt;
}

double vn_normal_shock(const UpstreamData& up, Vec2 xi, Vec2 n, bool& no_shock) {
    const double zn_u = dot(up.z(xi), n);
    if (!(zn_u > up.sound_speed())) {
        no_shock = true;
        return kNaN;
    }
    no_shock = false;
    return normal_jump(up.gas(), up.rho(), zn_u).zn_d + dot(xi, n);
}

}  // namespace

NodeLabel label_from_char(char c) {
    switch (c) {
        case 'I': return NodeLabel::interior;
        case 'O': return NodeLabel::outside;
        case 'A': return NodeLabel::wall_A;
        case 'B': return NodeLabel::wall_B;
        case 'S': return NodeLabel::shock_S;
        case 'P': return NodeLabel::arc_P;
        case 'R': return NodeLabel::corner_r;
        default: throw FormatError(std::string("unknown node label '") + c + "'");
    }
}

std::string_view to_string(NodeLabel l) {
    switch (l) {
        case NodeLabel::interior: return "I";
        case NodeLabel::outside: return "O";
        case NodeLabel::wall_A: return "A";
        case NodeLabel::wall_B: return "B";
        case NodeLabel::shock_S: return "S";
        case NodeLabel::arc_P: return "P";
        case NodeLabel::corner_r: return "R";
    }
    return "?";
}

std::string_view to_string(Verdict v) {
    return v == Verdict::consistent_weak ? "consistent_weak" : "violates_minimum_principle";
}

void validate_field(const GridField& f) {
    if (f.nx < 1 || f.ny < 1) throw PreconditionError("field grid must be nonempty");
    if (!(f.dx > 0.0 && f.dy > 0.0)) throw PreconditionError("field spacing must be positive");
    const auto n = static_cast<std::size_t>(f.nx) * static_cast<std::size_t>(f.ny);
    if (f.values.size() != n || f.labels.size() != n) throw PreconditionError("field arrays do not match nx * ny");
    const auto corners = std::count(f.labels.begin(), f.labels.end(), NodeLabel::corner_r);
    if (corners != 1) throw PreconditionError("field must have exactly one corner node R");

    std::vector<char> seen(n, 0);
    const auto start = static_cast<std::size_t>(std::find(f.labels.begin(), f.labels.end(), NodeLabel::corner_r) - f.labels.begin());
    std::vector<std::size_t> stack{start};
    seen[start] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
        const std::size_t k = stack.back();
        stack.pop_back();
        ++reached;
        const int i = static_cast<int>(k % f.nx), j = static_cast<int>(k / f.nx);
        for (const auto& o : kOffsets) {
            if (f.active(i + o[0], j + o[1]) && !seen[f.index(i + o[0], j + o[1])]) {
                seen[f.index(i + o[0], j + o[1])] = 1;
                stack.push_back(f.index(i + o[0], j + o[1]));
            }
        }
    }
    const auto active = static_cast<std::size_t>(n - std::count(f.labels.begin(), f.labels.end(), NodeLabel::outside));
    if (reached != active) throw PreconditionError("active field nodes are not connected");
}

std::vector<Extremum> find_extrema(const GridField& f) {
    validate_field(f);
    double gmin = std::numeric_limits<double>::infinity(), gmax = -gmin;
    for (std::size_t k = 0; k < f.values.size(); ++k) {
        if (f.labels[k] == NodeLabel::outside) continue;
        gmin = std::min(gmin, f.values[k]);
        gmax = std::max(gmax, f.values[k]);
    }
    std::vector<Extremum> out;
    for (int j = 0; j < f.ny; ++j) {
        for (int i = 0; i < f.nx; ++i) {
            if (!f.active(i, j)) continue;
            const double p = f.psi(i, j);
            int lower = 0, higher = 0, equal = 0, count = 0;
            for (const auto& o : kOffsets) {
                if (!f.active(i + o[0], j + o[1])) continue;
                const double q = f.psi(i + o[0], j + o[1]);
                ++count;
                if (q < p) ++lower;
                else if (q > p) ++higher;
                else ++equal;
            }
            if (count == 0) continue;
            if (lower == 0) out.push_back({i, j, ExtremumKind::min, equal == 0, p == gmin, f.label(i, j), p});
            if (higher == 0) out.push_back({i, j, ExtremumKind::max, equal == 0, p == gmax, f.label(i, j), p});
        }
    }
    return out;
}

std::vector<WallCheck> check_wall_signs(const GridField& f, const DiagnosticOptions& options) {
    validate_field(f);
    std::vector<std::size_t> nodes;
    for (std::size_t k = 0; k < f.labels.size(); ++k) {
        if (is_wall(f.labels[k])) nodes.push_back(k);
    }
    if (nodes.empty()) throw PreconditionError("field has no wall (A, B or P) nodes");
    const double roundoff = 64.0 * std::numeric_limits<double>::epsilon() * (1.0 + psi_scale(f));

    std::vector<WallCheck> out(nodes.size());
    parallel_for(nodes.size(), options.jobs, [&](std::size_t m) {
        const int i = static_cast<int>(nodes[m] % f.nx), j = static_cast<int>(nodes[m] / f.nx);
        WallCheck c{i, j, f.label(i, j), {}, kNaN, kNaN, false, false};
        // Outside directions among the axis neighbours, falling back to diagonals.
        double sx = 0.0, sy = 0.0;
        for (int pass = 0; pass < 2 && sx == 0.0 && sy == 0.0; ++pass) {
            for (const auto& o : kOffsets) {
                if ((o[0] != 0 && o[1] != 0) == (pass == 0)) continue;
                if (!f.active(i + o[0], j + o[1])) {
                    sx += o[0];
                    sy += o[1];
                }
            }
        }
        if (sx == 0.0 && sy == 0.0) {
            out[m] = c;
            return;
        }
        // Snap to the nearest of the eight grid directions.
        const double ang = std::round(std::atan2(sy, sx) / (kPi / 4.0));
        const int di = static_cast<int>(std::lround(std::cos(ang * kPi / 4.0)));
        const int dj = static_cast<int>(std::lround(std::sin(ang * kPi / 4.0)));
        c.normal = normalized(Vec2{static_cast<double>(di), static_cast<double>(dj)});
        const double h = std::hypot(di * f.dx, dj * f.dy);
        if (!f.active(i - di, j - dj) || !f.active(i - 2 * di, j - 2 * dj)) {
            out[m] = c;
            return;
        }
        const double p0 = f.psi(i, j), p1 = f.psi(i - di, j - dj), p2 = f.psi(i - 2 * di, j - 2 * dj);
        c.dn = (3.0 * p0 - 4.0 * p1 + p2) / (2.0 * h);
        const double second = std::abs(p0 - 2.0 * p1 + p2) / (h * h);
        c.stencil_ok = true;
        c.tolerance = options.wall_factor * std::max(f.dx, f.dy) * second + roundoff / h;
        c.ok = c.label == NodeLabel::wall_A ? std::abs(c.dn) <= c.tolerance : c.dn > 0.0;
        out[m] = c;
    });
    return out;
}

std::vector<ShockNodeCheck> check_shock_nodes(const GridField& f, const DiagnosticOptions& options) {
    validate_field(f);
    std::vector<std::size_t> nodes;
    for (std::size_t k = 0; k < f.labels.size(); ++k) {
        if (f.labels[k] == NodeLabel::shock_S) nodes.push_back(k);
    }
    if (nodes.empty()) throw PreconditionError("field has no shock (S) nodes");

    std::vector<char> is_min(f.values.size(), 0);
    for (const auto& e : find_extrema(f)) {
        if (e.kind == ExtremumKind::min) is_min[f.index(e.i, e.j)] = 1;
    }
    const UpstreamData& up = f.upstream;
    const double speed = norm(up.v());
    if (!(speed > 0.0)) throw PreconditionError("upstream velocity must be nonzero for the shock checks");
    const Vec2 n_s = up.v() / speed;
    const Vec2 t_s = perp(n_s);
    bool corner_no_shock = false;
    const double vn_r = vn_normal_shock(up, f.xi_r, n_s, corner_no_shock);

    std::vector<ShockNodeCheck> out(nodes.size());
    parallel_for(nodes.size(), options.jobs, [&](std::size_t m) {
        const int i = static_cast<int>(nodes[m] % f.nx), j = static_cast<int>(nodes[m] / f.nx);
        const Vec2 xi = f.position(i, j);
        const double ref = f.psi_upstream(xi);
        ShockNodeCheck c{i, j, f.psi(i, j) - ref, false, is_min[nodes[m]] != 0, kNaN, kNaN, kNaN, vn_r,
                         false, false, false, false};
        c.residual_ok = std::abs(c.residual) < options.tol_s * (1.0 + std::abs(ref));
        if (c.is_minimum) {
            const auto gx = directional(f, i, j, 1, 0), gy = directional(f, i, j, 0, 1);
            if (gx && gy) {
                const Vec2 g{*gx, *gy};
                c.tangential_derivative = dot(g, t_s);
                c.normal_derivative = dot(g, n_s);
            }
            const Vec2 xi_eff = xi + (c.residual / speed) * n_s;
            c.vn_s = vn_normal_shock(up, xi_eff, n_s, c.no_shock);
            c.upstream_of_corner = dot(xi_eff - f.xi_r, n_s) < 0.0;
            c.monotone = !c.no_shock && !corner_no_shock && c.vn_s < vn_r;
            c.excluded = c.no_shock || c.vn_s < 0.0;
        }
        out[m] = c;
    });
    return out;
}

MinimumReport minimum_report(const GridField& f, const DiagnosticOptions& options) {
    validate_field(f);
    MinimumReport rep{Verdict::consistent_weak, {}, -1, -1, false, "no_wall_B", kNaN, {}, {}, {}};
    rep.extrema = find_extrema(f);

    double gmin = std::numeric_limits<double>::infinity(), gmax = -gmin;
    int count_min = 0;
    int ri = -1, rj = -1;
    for (int j = 0; j < f.ny; ++j) {
        for (int i = 0; i < f.nx; ++i) {
            if (!f.active(i, j)) continue;
            if (f.label(i, j) == NodeLabel::corner_r) ri = i, rj = j;
            const double p = f.psi(i, j);
            gmax = std::max(gmax, p);
            if (p < gmin) {
                gmin = p;
                count_min = 1;
                rep.global_min_i = i;
                rep.global_min_j = j;
            } else if (p == gmin) {
                ++count_min;
            }
        }
    }
    rep.unique_global_min = count_min == 1;
    auto add = [&](std::string kind, int i, int j, double value, std::string detail) {
        rep.violations.push_back({std::move(kind), i, j, value, std::move(detail)});
    };

    if (gmax - gmin <= 1e-14 * (1.0 + std::abs(gmax))) {
        add("constant_field", ri, rj, gmax - gmin, "psi is constant on the closed elliptic region");
    }
    if (!(rep.unique_global_min && rep.global_min_i == ri && rep.global_min_j == rj)) {
        add("corner_not_minimum", ri, rj, f.psi(ri, rj) - gmin,
            "global minimum at (" + std::to_string(rep.global_min_i) + "," + std::to_string(rep.global_min_j) +
                ")" + (rep.unique_global_min ? "" : ", not unique"));
    }
    for (const auto& e : rep.extrema) {
        if (e.kind != ExtremumKind::min) continue;
        if (e.label == NodeLabel::interior) add("interior_minimum", e.i, e.j, e.psi, e.strict ? "strict" : "plateau");
        if (is_wall(e.label)) {
            add("boundary_minimum", e.i, e.j, e.psi, std::string("local minimum on ") + std::string(to_string(e.label)));
        }
    }

    bool any_wall = false;
    for (std::size_t k = 0; k < f.labels.size() && !any_wall; ++k) any_wall = is_wall(f.labels[k]);
    if (any_wall) rep.walls = check_wall_signs(f, options);
    Vec2 nb_sum{0.0, 0.0};
    for (const auto& w : rep.walls) {
        if (w.label == NodeLabel::wall_B && w.stencil_ok) nb_sum += w.normal;
        if (!w.stencil_ok || w.ok) continue;
        if (w.label == NodeLabel::wall_A) {
            add("wall_A_slip", w.i, w.j, w.dn, "normal derivative exceeds slip tolerance");
        } else if (w.label == NodeLabel::wall_B) {
            add("wall_B_sign", w.i, w.j, w.dn, "outward normal derivative not positive");
        } else {
            add("arc_P_sign", w.i, w.j, w.dn, "outward normal derivative not positive");
        }
    }
    if (norm(nb_sum) > 0.0 && norm(f.upstream.v()) > 0.0) {
        rep.angle_vI_nB_deg = rad_to_deg(std::acos(std::clamp(dot(normalized(nb_sum), normalized(f.upstream.v())), -1.0, 1.0)));
        if (std::abs(rep.angle_vI_nB_deg - 90.0) < 1e-9) {
            rep.scope = "right_angle";
        } else {
            rep.scope = rep.angle_vI_nB_deg < 90.0 ? "minimum_case" : "maximum_case";
        }
    }

    bool any_shock = std::find(f.labels.begin(), f.labels.end(), NodeLabel::shock_S) != f.labels.end();
    if (any_shock) rep.shocks = check_shock_nodes(f, options);
    for (const auto& s : rep.shocks) {
        if (!s.residual_ok) add("shock_residual", s.i, s.j, s.residual, "psi differs from psi^I on the shock");
        if (s.is_minimum) {
            add(s.excluded ? "shock_minimum_excluded" : "shock_minimum", s.i, s.j, s.vn_s,
                s.excluded ? "normal-shock relations force a negative inner normal derivative"
                           : "shock-node minimum not excluded by the normal-shock comparison");
        }
    }

    if (!rep.violations.empty()) rep.verdict = Verdict::violates_minimum_principle;
    return rep;
}

GridField synthesize_field(const SynthSpec& spec) {
    if (!(spec.theta_deg > 0.0 && spec.theta_deg < 90.0)) throw DomainError("synthetic theta must lie in (0, 90)");
    if (!(spec.beta > 0.0 && spec.beta < 1.0) || !(spec.epsilon > 0.0) || spec.n < 4) {
        throw DomainError("synthetic field parameters out of range");
    }
    const GasModel gas(spec.gamma);
    const double th = deg_to_rad(spec.theta_deg);
    const Vec2 t_r{std::cos(th), std::sin(th)}, n_r{std::sin(th), -std::cos(th)};
    const Vec2 v = spec.epsilon * std::cos(spec.beta * th) * t_r + spec.mu * n_r;
    const UpstreamData up(gas, 1.0, v);
    const Vec2 n_s = normalized(v);

    // Corner on the wall at (-s, 0) with zero normal velocity behind the normal shock.
    const auto vn = [&](double s) {
        bool none = false;
        const double r = vn_normal_shock(up, {-s, 0.0}, n_s, none);
        if (none) throw DomainError("synthetic upstream is not supersonic at the corner");
        return r;
    };
    double lo = 0.0, hi = 1.0;
    if (!(vn(lo) > 0.0)) throw DomainError("synthetic corner cannot be placed");
    while (vn(hi) > 0.0) {
        hi *= 2.0;
        if (hi > 1e6) throw DomainError("synthetic corner cannot be placed");
    }
    for (int k = 0; k < 200; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (vn(mid) > 0.0 ? lo : hi) = mid;
    }
    const Vec2 xi_r{-0.5 * (lo + hi), 0.0};

    const int n = spec.n;
    const double dx = spec.extent / n, dy = dx * std::tan(th);
    GridField f{xi_r, dx, dy, n + 1, n + 1, {}, {}, up, xi_r, 0.0};
    f.values.resize(static_cast<std::size_t>(f.nx * f.ny));
    f.labels.resize(f.values.size());
    const double psi_r = up.psi(xi_r);
    const NodeLabel edge = spec.arc_edge ? NodeLabel::arc_P : NodeLabel::wall_B;
    for (int j = 0; j < f.ny; ++j) {
        for (int i = 0; i < f.nx; ++i) {
            NodeLabel l = NodeLabel::interior;
            if (j > i) l = NodeLabel::outside;
            else if (i == 0) l = NodeLabel::corner_r;
            else if (i == n) l = edge;
            else if (j == 0) l = NodeLabel::wall_A;
            else if (j == i) l = NodeLabel::shock_S;
            const Vec2 d = f.position(i, j) - xi_r;
            const double r = norm(d), phi = std::atan2(d.y, d.x);
            double p = l == NodeLabel::outside ? up.psi(f.position(i, j)) : psi_r + spec.epsilon * r * std::cos(spec.beta * phi);
            // Exact psi^I on the shock ray.
            if (l == NodeLabel::shock_S) p = up.psi(f.position(i, j));
            if (l != NodeLabel::outside) p -= spec.corner_descent * d.x;
            f.values[f.index(i, j)] = p;
            f.labels[f.index(i, j)] = l;
        }
    }
    const PlantedNode at = planted_node(spec);
    if (spec.plant_wall_dip) f.values[f.index(at.i, at.j)] -= 4.0 * spec.epsilon * dx;
    if (spec.plant_shock_minimum) f.values[f.index(at.i, at.j)] = psi_r - spec.epsilon * dx;
    return f;
}

PlantedNode planted_node(const SynthSpec& spec) {
    if (spec.plant_wall_dip) return {spec.n, spec.n / 2};
    if (spec.plant_shock_minimum) return {spec.n / 2, spec.n / 2};
    return {0, 0};
}

}  // namespace ssrr
