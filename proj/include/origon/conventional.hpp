#pragma once

#include "origon/cp.hpp"
#include "origon/params.hpp"

namespace origon {

// Pyramid-supported gadget (delta = 0). The extruded face is carried by a
// pyramid whose apex unfolds to C; D_sigma sits on the perpendicular bisector
// of B_sigma C, at angle pi - beta_sigma off the arm at B_sigma.
struct ConventionalGeometry {
    GadgetParams params;
    Point2 a{};
    Point2 b[2]{};
    Point2 c{};
    Point2 d[2]{};
    Point2 arm_dir[2]{};   // also the hem direction ell_sigma (delta = 0)
    Point2 j_dir[2]{};

    Point2 b_of(Side s) const { return b[static_cast<int>(s)]; }
    Point2 d_of(Side s) const { return d[static_cast<int>(s)]; }
};

// Throws std::domain_error on invalid parameters.
ConventionalGeometry build_conventional(const GadgetParams& params);

// ||B_sigma D_sigma|| in units of ||AB||: tan(gamma/2) / (2 sin beta_sigma).
double conventional_bd(const GadgetParams& params, Side side);

// Pyramid feasibility at the apex: the three face angles meeting at A fit a
// convex cone (triangle inequality of the sectors plus total < tau).
bool pyramid_feasible(const ConventionalGeometry& g);

CreasePattern conventional_cp(const ConventionalGeometry& g);

}  // namespace origon
