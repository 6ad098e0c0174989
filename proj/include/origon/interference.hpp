#pragma once

#include "origon/params.hpp"

namespace origon {

// Interference coefficients: clearance each gadget needs from its neighbours,
// in units of the diagonal stretch lambda (lam_* functions) or absolute
// (kappa_* functions divide lambda out).

// Pyramid-supported gadget: lambda * kappa = tan(gamma/2) / (2 sin beta).
double lam_kappa_conv(const GadgetParams& params, Side side);

// Flat-back gadget, outward coefficient: ||B_sigma G_sigma||.
double lam_kappa_out(const GadgetParams& params, Side side, double phi_sigma);

// Flat-back gadget, inward coefficient. The two analytic branches meet where
// chi = eps - delta changes sign; Auto picks by sign, the explicit branches
// exist for cross-checking their agreement at chi = 0.
enum class KappaBranch { Auto, NonPositiveChi, NonNegativeChi };
double lam_kappa_in(const GadgetParams& params, Side side, double phi_sigma,
                    KappaBranch branch = KappaBranch::Auto);

double kappa_conv(const GadgetParams& params, Side side);
double kappa_out(const GadgetParams& params, Side side, double phi_sigma);
double kappa_in(const GadgetParams& params, Side side, double phi_sigma,
                KappaBranch branch = KappaBranch::Auto);

struct SideInterference {
    double kappa_in = 0.0;
    double kappa_out = 0.0;
    double kappa_conv = 0.0;
};
struct InterferenceSummary {
    double lambda = 0.0;
    double phi_l = 0.0;
    SideInterference side[2];
    const SideInterference& of(Side s) const { return side[static_cast<int>(s)]; }
};
InterferenceSummary interference_summary(const GadgetParams& params, double phi_l);

// ===== Regular n-prism tuning =====
//
// alpha = (1 - 2/n) pi, beta = pi/2, lambda = 1. With c = tan(pi/n) and
// t = tan(phi_L/2), the per-side clearance of a ring of gadgets is
// kappa(t) = kappa_in(t) + kappa_out(t) (the left ear folds inward, the
// neighbouring gadget's right ear protrudes outward), minimized over
// t in [c/(c^2+2), c/2].
GadgetParams prism_params(int n);
double prism_kin(int n, double t);
double prism_kout(int n, double t);
double prism_kappa(int n, double t);

struct PrismOptimum {
    int n = 0;
    double t_l = 0.0;        // tan(phi_L/2) at the optimum
    double phi_l = 0.0;
    double psi_l = 0.0;      // pi/n - 2 atan(t_l)
    double kappa_min = 0.0;  // kappa at the optimum
    double t_0 = 0.0;        // psi_L = 0 choice: (sqrt(c^2+1)-1)/c
    double kappa_0 = 0.0;    // kappa at t_0
    double kappa_conv = 0.0; // pyramid-supported baseline: tan(pi/n)
};

// Golden-section search (200 iterations) over the admissible t range.
PrismOptimum optimize_prism(int n);

}  // namespace origon
