#include "itguide/shaping.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "itguide/errors.hpp"

namespace itguide {

double ShapingParams::k1_upper_bound(double sigma_max) {
    return 1.0 - std::cos(sigma_max);
}

void ShapingParams::validate() const {
    constexpr double half_pi = 1.5707963267948966;
    if (!(sigma_max > 0.0 && sigma_max < half_pi))
        throw ValidationError("shaping.sigma_max must lie in (0, 90) deg");
    if (!(phi > 0.0))
        throw ValidationError("shaping.phi must be > 0");
    if (!(eps_sin > 0.0))
        throw ValidationError("shaping.eps_sin must be > 0");
    const double bound = k1_upper_bound(sigma_max);
    if (!(k1 > 0.0 && k1 < bound))
        throw ValidationError("gains.k1 = " + std::to_string(k1) +
                              " violates 0 < k1 < 1 - cos(sigma_max) = " +
                              std::to_string(bound));
}

double sgmf(double x, double phi) {
    if (x > phi)
        return 1.0;
    if (x < -phi)
        return -1.0;
    const double u = x / phi;
    return -0.5 * u * u * u + 1.5 * u;
}

SgmfDerivatives sgmf_derivatives(double x, double phi) {
    if (std::abs(x) > phi)
        return {};
    const double phi3 = phi * phi * phi;
    return {-1.5 * x * x / phi3 + 1.5 / phi, -3.0 * x / phi3};
}

DesiredLead desired_lead(double z1, const ShapingParams &params) {
    const double s = sgmf(z1, params.phi);
    if (1.0 - params.k1 * s > 1.0)
        return {0.0, true};
    // arccos(1 - k1 s) = 2 asin(sqrt(k1 s / 2))
    const double h = std::clamp(0.5 * params.k1 * s, 0.0, 1.0);
    return {2.0 * std::asin(std::sqrt(h)), false};
}

DesiredHeadings desired_headings(double sigma_d) {
    // cos(2 psi) = 2 cos(sigma) - 1  <=>  sin(psi) = sqrt(2) sin(sigma / 2)
    const double s = std::clamp(std::sqrt(2.0) * std::sin(0.5 * sigma_d), -1.0, 1.0);
    const double h = std::asin(s);
    return {h, h};
}

LeadRates lead_rates(double z1, double z1_dot, double z1_ddot, double sigma_d,
                     const ShapingParams &params) {
    if (desired_lead(z1, params).infeasible)
        return {};
    const SgmfDerivatives ds = sgmf_derivatives(z1, params.phi);
    const double sin_s = std::sin(sigma_d);
    const double den = std::max(sin_s, params.eps_sin);
    LeadRates out;
    out.dot = params.k1 * ds.d1 * z1_dot / den;
    out.ddot = (params.k1 * ds.d2 * z1_dot * z1_dot + params.k1 * ds.d1 * z1_ddot -
                out.dot * out.dot * std::cos(sigma_d)) /
               den;
    out.guarded = sin_s < params.eps_sin && ds.d1 != 0.0;
    return out;
}

ShapingOutput shaping_rates(double z1, double z1_dot, double z1_ddot,
                            double sigma_d, double theta_md, double psi_md,
                            const ShapingParams &params) {
    ShapingOutput out;
    out.sigma_d = sigma_d;
    out.theta_md = theta_md;
    out.psi_md = psi_md;
    out.infeasible = desired_lead(z1, params).infeasible;
    if (out.infeasible)
        return out;

    const LeadRates lead = lead_rates(z1, z1_dot, z1_ddot, sigma_d, params);
    out.sigma_d_dot = lead.dot;
    out.sigma_d_ddot = lead.ddot;

    const double sin_s = std::sin(sigma_d);
    const double cos_s = std::cos(sigma_d);
    const double num_common =
        lead.ddot * sin_s + lead.dot * lead.dot * cos_s;

    auto split_rates = [&](double angle, double &rate, double &accel) {
        const double sin2 = std::sin(2.0 * angle);
        const double den = std::max(sin2, params.eps_sin);
        rate = lead.dot * sin_s / den;
        accel = (num_common - 2.0 * rate * rate * std::cos(2.0 * angle)) / den;
        return sin2 < params.eps_sin;
    };
    const bool g_theta = split_rates(theta_md, out.theta_md_dot, out.theta_md_ddot);
    const bool g_psi = split_rates(psi_md, out.psi_md_dot, out.psi_md_ddot);

    const bool active = sgmf_derivatives(z1, params.phi).d1 != 0.0;
    out.guarded = lead.guarded || (active && (g_theta || g_psi));
    return out;
}

ShapingOutput shape(double z1, double z1_dot, double z1_ddot,
                    const ShapingParams &params) {
    const DesiredLead lead = desired_lead(z1, params);
    const DesiredHeadings h = desired_headings(lead.sigma_d);
    return shaping_rates(z1, z1_dot, z1_ddot, lead.sigma_d, h.theta_md,
                         h.psi_md, params);
}

} // namespace itguide
