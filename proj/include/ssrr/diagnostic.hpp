#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ssrr/shock.hpp"

namespace ssrr {

enum class NodeLabel : char {
    interior = 'I',
    outside = 'O',
    wall_A = 'A',
    wall_B = 'B',
    shock_S = 'S',
    arc_P = 'P',
    corner_r = 'R',
};

/// Throws FormatError for characters outside {I,O,A,B,S,P,R}.
NodeLabel label_from_char(char c);

/// Sampled psi on a labeled rectangular grid. Node (i, j) sits at
/// origin + (i dx, j dy) and is stored at index j * nx + i.
struct GridField {
    Vec2 origin;
    double dx = 1.0;
    double dy = 1.0;
    int nx = 0;
    int ny = 0;
    std::vector<double> values;
    std::vector<NodeLabel> labels;
    UpstreamData upstream;
    Vec2 xi_r;
    double psi_offset = 0.0;  ///< added to psi^I; not part of the file format

    std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
    bool in_grid(int i, int j) const { return i >= 0 && j >= 0 && i < nx && j < ny; }
    double psi(int i, int j) const { return values[index(i, j)]; }
    NodeLabel label(int i, int j) const { return labels[index(i, j)]; }
    /// In the grid and not outside.
    bool active(int i, int j) const { return in_grid(i, j) && label(i, j) != NodeLabel::outside; }
    Vec2 position(int i, int j) const { return origin + Vec2{i * dx, j * dy}; }
    double psi_upstream(Vec2 xi) const { return upstream.psi(xi) + psi_offset; }
};

/// Throws PreconditionError unless sizes match, spacing is positive, there is
/// exactly one corner node and the active nodes are 8-connected.
void validate_field(const GridField& field);

/// SSRR-FIELD 1 text format; doubles written with 17 significant digits.
void write_field(std::ostream& out, const GridField& field);
GridField read_field(std::istream& in);
void write_field_file(const std::string& path, const GridField& field);
GridField read_field_file(const std::string& path);

enum class ExtremumKind { min, max };

struct Extremum {
    int i;
    int j;
    ExtremumKind kind;
    bool strict;   ///< false for plateaus (ties with a neighbour)
    bool global;
    NodeLabel label;
    double psi;
};

/// Local extrema over 8-neighbourhoods of active nodes, in node-index order.
std::vector<Extremum> find_extrema(const GridField& field);

struct DiagnosticOptions {
    double tol_s = 1e-8;        ///< shock residual, relative to 1 + |psi^I|
    double wall_factor = 10.0;  ///< tol_w = wall_factor * max(dx, dy) * |second difference|
    int jobs = 1;
};

struct WallCheck {
    int i;
    int j;
    NodeLabel label;
    Vec2 normal;        ///< outward, snapped to one of eight grid directions
    double dn;          ///< one-sided normal derivative
    double tolerance;   ///< slip tolerance (wall A only)
    bool stencil_ok;
    bool ok;
};

/// Normal derivatives on A (must vanish within tol_w), B and P (must be
/// positive). Throws PreconditionError when the field has no wall nodes.
std::vector<WallCheck> check_wall_signs(const GridField& field, const DiagnosticOptions& options = {});

struct ShockNodeCheck {
    int i;
    int j;
    double residual;               ///< psi - psi^I
    bool residual_ok;
    bool is_minimum;
    // Filled for discrete minima only.
    double tangential_derivative;  ///< field, along the normal-shock tangent
    double normal_derivative;      ///< field, along n_s = v^I / |v^I| (into E)
    double vn_s;                   ///< v_d . n_s from the normal shock through the node
    double vn_r;                   ///< the same through the reflection point
    bool upstream_of_corner;
    bool monotone;                 ///< vn_s < vn_r
    bool no_shock;                 ///< upstream not supersonic normal to n_s at the node
    bool excluded;                 ///< minimum contradicted by the shock relations
};

/// Residuals on shock nodes and the minimum-exclusion test at shock-node minima.
/// The node is moved along n_s to where psi^I equals its psi value before the
/// normal shock is evaluated, so planted values act as shock displacement.
std::vector<ShockNodeCheck> check_shock_nodes(const GridField& field, const DiagnosticOptions& options = {});

enum class Verdict { consistent_weak, violates_minimum_principle };

std::string_view to_string(Verdict v);
std::string_view to_string(NodeLabel l);

struct Violation {
    std::string kind;
    int i;
    int j;
    double value;
    std::string detail;
};

struct MinimumReport {
    Verdict verdict;
    std::vector<Violation> violations;
    int global_min_i;
    int global_min_j;
    bool unique_global_min;
    std::string scope;  ///< minimum_case, maximum_case, right_angle, or no_wall_B
    double angle_vI_nB_deg;
    std::vector<Extremum> extrema;
    std::vector<WallCheck> walls;
    std::vector<ShockNodeCheck> shocks;
};

/// consistent_weak iff the unique global minimum is at the corner and every
/// other exclusion check passes.
MinimumReport minimum_report(const GridField& field, const DiagnosticOptions& options = {});

/// Closed-form test fields in the corner frame: wall A along y = 0, shock ray
/// at angle theta from the corner, right edge labeled B (or P), and
/// Psi = psi^I(xi_r) + eps r cos(beta phi). v^I = eps cos(beta theta) t + mu n_r makes
/// Psi = psi^I on the shock ray, and xi_r is placed on the wall so that the
/// normal shock along v^I through xi_r leaves zero normal velocity.
struct SynthSpec {
    double gamma = 1.4;
    double theta_deg = 45.0;
    double beta = 0.9;
    double epsilon = 0.05;
    double mu = 3.0;
    int n = 40;           ///< nodes per unit of r along the wall
    double extent = 1.0;
    bool arc_edge = false;           ///< right edge labeled P instead of B
    double corner_descent = 0.0;     ///< subtract kappa (x - x_r), kappa > eps gives a strong-like field
    bool plant_wall_dip = false;     ///< dip at the middle right-edge node
    bool plant_shock_minimum = false;
};

struct PlantedNode {
    int i;
    int j;
};

GridField synthesize_field(const SynthSpec& spec);

/// Node touched by the planted violation of that spec (the corner for descent).
PlantedNode planted_node(const SynthSpec& spec);

}  // namespace ssrr
