#pragma once

#include <optional>
#include <variant>

#include "origon/cp.hpp"
#include "origon/critical.hpp"
#include "origon/params.hpp"

namespace origon {

// ===== Opening-angle parameterizations =====
//
// The free design parameter of the flat-back gadget is the left opening
// angle phi_L in (gamma - 2 zeta_R, 2 zeta_L); phi_R = gamma - phi_L. It can
// equivalently be given through psi_L = gamma_L - phi_L or through the hinge
// angle eps_sigma of one side, plus a few named selections.
struct ByPhiL { double phi_l; };
struct ByPsiL { double psi_l; };
struct ByEpsilon { Side side; double eps; };
struct Balanced {};        // gamma/2 clamped into the admissible interval
struct LeftCritical {};    // phi_l = 2 zeta_L
struct RightCritical {};   // phi_l = gamma - 2 zeta_R
struct Orthogonal {};      // psi_l = 0, i.e. phi_l = gamma_L

using DParameterization = std::variant<ByPhiL, ByPsiL, ByEpsilon, Balanced,
                                       LeftCritical, RightCritical, Orthogonal>;

// Resolve to phi_l; throws std::domain_error outside the admissible interval.
double resolve_phi_l(const GadgetParams& params, const DParameterization& sel);

// Pleat rotation rho_sigma and hinge angle eps_sigma as functions of the
// side's own opening angle phi_sigma. eps decreases as phi grows and hits 0
// exactly at phi_sigma = 2 zeta_sigma.
double rho_of(const GadgetParams& params, Side side, double phi_sigma);
double eps_of(const GadgetParams& params, Side side, double phi_sigma);
// Inverse of eps_of in phi_sigma.
double phi_from_eps(const GadgetParams& params, Side side, double eps_sigma);
// Range of eps_sigma over the admissible phi interval.
struct EpsInterval {
    double lo = 0.0;
    double hi = 0.0;
};
EpsInterval eps_interval(const GadgetParams& params, Side side);

// ===== Geometry =====
//
// Canonical pose; C is the unfolded pyramid apex image (construction point,
// not a crease endpoint), D the tongue tip, E_sigma the circumcenter of
// {B_sigma, C, D}. G_sigma and H_sigma are the ear vertices on segment
// A E_sigma; H exists only for delta_sigma > 0, and G merges into its inner
// neighbour (E at delta = 0, H at delta > 0) when the side is critical.
struct ImprovedGeometry {
    GadgetParams params;
    double phi_l = 0.0, phi_r = 0.0;
    Point2 a{}, c{}, d{};
    Point2 b[2]{}, ell_dir[2]{}, j_dir[2]{}, g_dir[2]{};
    Point2 e[2]{};
    std::optional<Point2> g[2], h[2];

    double phi(Side s) const { return s == Side::Left ? phi_l : phi_r; }
    double psi(Side s) const { return gamma_sigma(params, s) - phi(s); }
    Point2 b_of(Side s) const { return b[static_cast<int>(s)]; }
    Point2 e_of(Side s) const { return e[static_cast<int>(s)]; }
    const std::optional<Point2>& g_of(Side s) const { return g[static_cast<int>(s)]; }
    const std::optional<Point2>& h_of(Side s) const { return h[static_cast<int>(s)]; }

    // G merged with its inner neighbour (E at delta = 0, H at delta > 0).
    bool side_critical(Side s) const;
    // delta > 0 critical merge specifically.
    bool gh_merged(Side s) const;
};

// Throws std::domain_error on invalid parameters or phi_l out of (0, gamma).
ImprovedGeometry build_improved(const GadgetParams& params, double phi_l);

// Table of mountain/valley assignments. On a side with delta_sigma > 0 away
// from critical the two ear creases admit two conventions; variant selects
// which (1: B-E/B-G mountain, B-H/H-E valley; 2: the complementary choice).
// The crease set is identical. Throws if phi_l is outside the constructible
// range (a G vertex would be missing).
CreasePattern improved_cp(const ImprovedGeometry& g, int variant = 1);

}  // namespace origon
