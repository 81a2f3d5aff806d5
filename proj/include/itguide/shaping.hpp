// Desired lead-angle shaping: approximated signum, desired lead, equal
// heading split, and the analytic derivative chain the guidance laws need.
#pragma once

namespace itguide {

struct ShapingParams {
    double k1 = 0.49;
    double phi = 300.0;                   // sgmf boundary layer [m]
    double sigma_max = 1.0471975511965976; // FOV bound [rad] (60 deg)
    double eps_sin = 1e-3;                // floor on sin() denominators

    /// Largest admissible k1 for a FOV bound (exclusive).
    static double k1_upper_bound(double sigma_max);

    /// Throws ValidationError naming the offending field.
    void validate() const;
};

/// Cubic approximation of sign(x) with boundary layer phi. Odd, C1, range [-1, 1].
double sgmf(double x, double phi);

struct SgmfDerivatives {
    double d1 = 0.0;
    double d2 = 0.0;
};

/// First and second derivatives of sgmf; both zero outside the boundary layer.
SgmfDerivatives sgmf_derivatives(double x, double phi);

struct DesiredLead {
    double sigma_d = 0.0;
    /// Set when z1 < 0: the arccos argument exceeds 1 and sigma_d is clamped to 0.
    bool infeasible = false;
};

/// sigma_d = arccos(1 - k1 sgmf(z1)), evaluated in half-angle form.
DesiredLead desired_lead(double z1, const ShapingParams &params);

struct DesiredHeadings {
    double theta_md = 0.0;
    double psi_md = 0.0;
};

/// Equal split theta_Md = psi_Md = acos(2 cos sigma_d - 1) / 2.
DesiredHeadings desired_headings(double sigma_d);

struct LeadRates {
    double dot = 0.0;
    double ddot = 0.0;
    bool guarded = false; // sin(sigma_d) fell under eps_sin while rates were active
};

/// First and second time derivatives of sigma_d along z1(t).
LeadRates lead_rates(double z1, double z1_dot, double z1_ddot, double sigma_d,
                     const ShapingParams &params);

struct ShapingOutput {
    double sigma_d = 0.0;
    double sigma_d_dot = 0.0;
    double sigma_d_ddot = 0.0;
    double theta_md = 0.0;
    double psi_md = 0.0;
    double theta_md_dot = 0.0;
    double psi_md_dot = 0.0;
    double theta_md_ddot = 0.0;
    double psi_md_ddot = 0.0;
    bool infeasible = false;
    bool guarded = false;
};

/// Rates of sigma_d and of the heading split. Inputs must be consistent
/// (sigma_d = desired_lead(z1), headings = desired_headings(sigma_d)).
/// When z1 < 0 sigma_d is clamped to a constant and every rate is zero.
ShapingOutput shaping_rates(double z1, double z1_dot, double z1_ddot,
                            double sigma_d, double theta_md, double psi_md,
                            const ShapingParams &params);

/// desired_lead + desired_headings + shaping_rates in one call.
ShapingOutput shape(double z1, double z1_dot, double z1_ddot,
                    const ShapingParams &params);

} // namespace itguide
