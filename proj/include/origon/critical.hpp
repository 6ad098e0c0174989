#pragma once

#include "origon/geom.hpp"
#include "origon/params.hpp"

namespace origon {

// Critical angle zeta_sigma: half the largest opening angle phi_sigma for
// which the side-sigma crease assignment stays legal. phi_sigma/2 < zeta_sigma
// gives two legal assignments on that side, equality exactly one.
//
// Closed form: with g = gamma/2, inv_c = cot(g), inv_cp = cot(g + delta_l +
// delta_r), d = tan(delta_sigma), bs = tan(beta_sigma - delta_sigma),
//   zeta_sigma = atan2(1 - d*inv_cp, inv_c + inv_cp + (1 + d*inv_c)/bs)
// except when beta_sigma + g + delta_other > pi, where zeta_sigma = g.
// At delta = 0 this reduces to cot(zeta) = 2*cot(g) + cot(beta).
double zeta_closed(const GadgetParams& params, Side side);

// Ruler-and-compass route for the same quantity, used as a cross-check.
// C is the apex reflected below AB, P the intersection of the two
// perpendicular bisectors of B_sigma C, and Q_sigma the first hit of the
// auxiliary ray from B_sigma against segment AP (then the bisector ray
// beyond P). zeta_sigma is the angle Q_sigma subtends at A against AB_sigma.
struct CriticalAngleConstruction {
    Point2 c{};
    Point2 p{};
    Point2 q_l{}, q_r{};
    double zeta_l = 0.0, zeta_r = 0.0;
    double zeta(Side side) const { return side == Side::Left ? zeta_l : zeta_r; }
    Point2 q(Side side) const { return side == Side::Left ? q_l : q_r; }
};
CriticalAngleConstruction zeta_geometric(const GadgetParams& params);

// Admissible opening angles phi_l on the left arm: the open interval gives
// two legal assignments on both sides, the endpoints are the one-sided
// critical configurations (lo: right side critical, hi: left side critical).
struct PhiLInterval {
    double lo = 0.0;
    double hi = 0.0;
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double phi_l) const { return phi_l >= lo && phi_l <= hi; }
};
PhiLInterval phi_l_interval(const GadgetParams& params);

}  // namespace origon
