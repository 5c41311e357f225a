#pragma once

#include <optional>
#include <string_view>

#include "ssrr/errors.hpp"
#include "ssrr/reflection.hpp"

namespace ssrr {

enum class CertificateStatus { certified, not_strong_type, degenerate_theta, failed };

std::string_view to_string(CertificateStatus s);

/// Raised by the certificate pipeline stages; carries the status it maps to.
class CertificateError : public Error {
public:
    CertificateError(CertificateStatus status, const std::string& what) : Error(what), status_(status) {}
    CertificateStatus status() const { return status_; }

private:
    CertificateStatus status_;
};

/// Corner frame at the reflection point together with its horizontal dilation
/// D = diag(1/a, 1), which turns the corner PDE into the Laplace equation.
/// Angles are in degrees.
struct CornerFrame {
    Vec2 xi_r;        ///< corner frame, downstream velocity 0
    double theta;
    double alpha;
    double a;         ///< sqrt(1 - |xi_r|^2 / c_3^2)
    double theta_t;
    double alpha_t;
    Vec2 gv;          ///< -g_v at the root, corner frame
    Vec2 gv_t;        ///< D gv
    double mach_d;
    double psi_ref;   ///< psi^I(xi_r)

    Vec2 dilate(Vec2 v) const { return {v.x / a, v.y}; }
    double map_norm() const { return 1.0 / a; }
    double inverse_map_norm() const { return 1.0; }
};

/// Frame of a solved reflection. With check_strong, throws CertificateError
/// (degenerate_theta, not_strong_type or failed) unless the root is
/// strong-type with theta < 90 deg, elliptic downstream and both angle windows
/// 90 < alpha + theta < 180 and 90 < alpha_t + theta_t < 180.
CornerFrame build_corner_frame(const ReflectionConfig& config, const ReflectionSolution& solution,
                               bool check_strong = true);

/// Synthetic frame from angles alone (|gv| = 1, xi_r on the wall axis).
CornerFrame corner_frame_from_angles(double theta_deg, double alpha_deg, double a);

/// Closed-form shock bracket -[(1-beta) cos(alpha_t) cos(beta theta_t) + beta cos(alpha_t + beta theta_t)].
double shock_bracket(const CornerFrame& frame, double beta);

/// First beta = 1 - 2^-k, k = 1..40, with alpha_t + beta theta_t > 90 + margin and a
/// positive shock bracket; margin = min(1, (alpha_t + theta_t - 90) / 2).
/// Throws CertificateError(not_strong_type) when none qualifies.
double choose_beta(const CornerFrame& frame);

/// Psi = psi_ref + epsilon r cos(beta phi) in dilated polar coordinates about xi_r.
struct Subsolution {
    double psi_ref;
    double epsilon;
    double beta;

    struct Value {
        double psi;
        double psi_r;        ///< radial derivative
        double psi_phi_r;    ///< r^-1 dPsi/dphi
        double laplacian;    ///< Delta Psi = epsilon r^-1 (1 - beta^2) cos(beta phi)
    };
    /// phi in radians; throws DomainError for r <= 0.
    Value eval(double r, double phi) const;
};

struct Certificate {
    CertificateStatus status;
    std::string message;
    double beta;
    double epsilon;
    double delta_interior;           ///< min of Delta Psi r / epsilon over the grid
    double delta_shock;              ///< min of (-g_t/|g_t|) . grad Psi / (-epsilon) on phi = theta_t
    double delta_shock_closed_form;  ///< shock_bracket(frame, beta)
    double wall_residual;            ///< max |grad Psi . n| on phi = 0
    double corner_descent;           ///< d/dr (psi - Psi) at the corner along the wall
    double delta_interior_undilated;
    double delta_shock_undilated;
    std::optional<CornerFrame> frame;
};

/// Verifies the subsolution inequalities on r log-spaced in [1e-6, 1] and phi
/// uniform in [0, theta_t]. Throws DomainError for beta or epsilon outside (0, 1)
/// or grids below 64 points.
Certificate check_certificate(const CornerFrame& frame, double beta, double epsilon, int n_r, int n_phi,
                              int jobs = 0);

/// Single-threaded reference; identical output.
Certificate check_certificate_serial(const CornerFrame& frame, double beta, double epsilon, int n_r, int n_phi);

struct CertifyOptions {
    double epsilon = 1e-3;
    std::optional<double> beta;  ///< empty = choose_beta
    int n_r = 256;
    int n_phi = 256;
    int polar_samples = kDefaultPolarSamples;
    int jobs = 0;
    bool force_weak = false;     ///< run the checks on the weak root, bypassing the type gate
    /// Root the configuration designates as the physical reflected shock. A
    /// weak designation is rejected by the type gate unless force_weak is set.
    ShockTypeLabel root = ShockTypeLabel::strong;
};

/// solve_reflection, strong root, corner frame, beta, check. Every stage
/// failure is returned as a status rather than thrown.
Certificate certify_nonexistence(const ReflectionConfig& config, const CertifyOptions& options = {});

}  // namespace ssrr
