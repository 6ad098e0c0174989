#include "origon/interference.hpp"

#include <cmath>
#include <stdexcept>

#include "origon/improved.hpp"

namespace origon {

double lam_kappa_conv(const GadgetParams& params, Side side) {
    return std::tan(params.gamma() / 2) / (2.0 * std::sin(params.beta(side)));
}

double lam_kappa_out(const GadgetParams& params, Side side, double phi_sigma) {
    double b = params.beta(side);
    return 1.0 / (std::sin(b) / std::tan(phi_sigma / 2) - std::cos(b));
}

double lam_kappa_in(const GadgetParams& params, Side side, double phi_sigma,
                    KappaBranch branch) {
    double r = r_of(params);
    double gs = gamma_sigma(params, side);
    double psi = gs - phi_sigma;
    double rho = rho_of(params, side, phi_sigma);
    double b = params.beta(side);
    double ds = params.delta(side);
    double d_oth = params.delta_other(side);
    double chi = eps_of(params, side, phi_sigma) - ds;
    bool neg = branch == KappaBranch::NonPositiveChi ||
               (branch == KappaBranch::Auto && chi <= 0.0);
    if (neg) {
        double g = params.gamma();
        // Stable: cos(do) - cos(g+do) = 2 sin(g/2+do) sin(g/2)
        return (std::sin(g / 2 + d_oth) * std::sin(g / 2)) /
               (std::sin(b - ds) * std::sin(g + params.delta_l + params.delta_r));
    }
    return 0.5 * std::sqrt(r * r - 2.0 * r * std::cos(psi) + 1.0) /
           std::cos(PI - b - gs - rho);
}

double kappa_conv(const GadgetParams& params, Side side) {
    return lam_kappa_conv(params, side) / lambda_of(params);
}

double kappa_out(const GadgetParams& params, Side side, double phi_sigma) {
    return lam_kappa_out(params, side, phi_sigma) / lambda_of(params);
}

double kappa_in(const GadgetParams& params, Side side, double phi_sigma, KappaBranch branch) {
    return lam_kappa_in(params, side, phi_sigma, branch) / lambda_of(params);
}

InterferenceSummary interference_summary(const GadgetParams& params, double phi_l) {
    InterferenceSummary out;
    out.lambda = lambda_of(params);
    out.phi_l = phi_l;
    for (Side s : kSides) {
        double phi_s = s == Side::Left ? phi_l : params.gamma() - phi_l;
        int i = static_cast<int>(s);
        out.side[i].kappa_in = kappa_in(params, s, phi_s);
        out.side[i].kappa_out = kappa_out(params, s, phi_s);
        out.side[i].kappa_conv = kappa_conv(params, s);
    }
    return out;
}

GadgetParams prism_params(int n) {
    GadgetParams p;
    p.alpha = (1.0 - 2.0 / n) * PI;
    p.beta_l = PI / 2;
    p.beta_r = PI / 2;
    return p;
}

double prism_kin(int n, double t) {
    double c = std::tan(PI / n);
    return 0.5 * ((c * c + 4.0) * t * t - 4.0 * c * t + c * c) / (c * t * t - 2.0 * t + c);
}

double prism_kout(int n, double t) {
    double c = std::tan(PI / n);
    return (c - t) / (1.0 + c * t);
}

double prism_kappa(int n, double t) {
    // total per-side clearance: inward interference of the left ear plus
    // outward interference of the neighbouring gadget's right ear
    return prism_kin(n, t) + prism_kout(n, t);
}

PrismOptimum optimize_prism(int n) {
    if (n < 3) throw std::domain_error("prism needs n >= 3");
    double c = std::tan(PI / n);
    double a = c / (c * c + 2.0), b = c / 2.0;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int i = 0; i < 200; ++i) {
        double x1 = b - gr * (b - a);
        double x2 = a + gr * (b - a);
        if (prism_kappa(n, x1) < prism_kappa(n, x2)) b = x2;
        else a = x1;
    }
    PrismOptimum out;
    out.n = n;
    out.t_l = 0.5 * (a + b);
    out.phi_l = 2.0 * std::atan(out.t_l);
    out.psi_l = PI / n - out.phi_l;
    out.kappa_min = prism_kappa(n, out.t_l);
    out.t_0 = (std::sqrt(c * c + 1.0) - 1.0) / c;
    out.kappa_0 = prism_kappa(n, out.t_0);
    out.kappa_conv = c;
    return out;
}

}  // namespace origon
