#pragma once

#include <optional>
#include <vector>

#include "origon/cp.hpp"
#include "origon/improved.hpp"
#include "origon/params.hpp"

namespace origon {

// Division of one gadget into d stacked gadgets with arm-length ratios
// p_1 : ... : p_d (normalized so their sum is d; the outermost arms then have
// length ||AB|| = d) and per-level opening angles phi_l_levels[n-1].
//
// Levels n >= 2 whose upper tongue-edge creases A^(n-1)E^(n) would violate
// the level-ordering inequality
//     tan(phi^(n)/2) >= 1 / (1/tan(phi^(n-1)/2) + 2/tan(gamma/2))
// can be listed in inverted_levels: their upper creases flip to valley and
// the E-line to mountain, which lifts the inequality for that level. A level
// can be inverted only if its tongue tip D^(n) does not exist.
struct DivisionSpec {
    int d = 0;
    std::vector<double> ratios;        // size d; any positive scale
    std::vector<double> phi_l_levels;  // size d, radians
    std::vector<int> inverted_levels;  // each in [2, d]

    bool level_inverted(int n) const {
        for (int m : inverted_levels)
            if (m == n) return true;
        return false;
    }
};

// All the division geometry lives in the C-frame: the unfolded pyramid apex
// image C at the origin, the apexes A^(n) stacked on the +y axis at height
// r*q_n with q_n = p_1 + ... + p_n. Arrays are 1-indexed by level; index 0
// is unused except a[0] = C.
struct DivisionGeometry {
    GadgetParams params;
    DivisionSpec spec;                 // ratios normalized (sum = d)
    int d = 0;
    double r = 0.0;
    std::vector<double> q;             // [0..d]
    std::vector<Point2> a;             // [0..d], a[0] = C
    Point2 armdir[2]{}, jdir[2]{}, kpdir[2]{};
    std::vector<Point2> b[2];          // [1..d]
    std::vector<double> phi[2];        // [1..d] per-side opening angles
    std::vector<double> psi_l;         // [1..d]
    std::vector<ImprovedGeometry> unit_gadget;  // [1..d] unit-scale per level
    std::vector<Point2> e[2];          // [1..d]
    std::vector<Point2> fp;            // F'^(n), [1..d]
    std::vector<double> dcoef;         // [1..d]
    std::vector<std::optional<Point2>> dd;      // D^(n), [1..d]
    std::vector<std::optional<Point2>> dprime;  // D'^(n) stored at n, [1..d-1]
    std::vector<std::optional<Point2>> g[2], j[2], gprime[2], k[2], m[2];

    Point2 eline(Side s, int n) const { return e[static_cast<int>(s)][n]; }
    // K and M coincide on a side whose level-n opening is critical.
    bool km_merged(Side s, int n) const;
};

// Existence coefficients (Dcoef in ||A^(n)F'^(n)|| = Dcoef * p_n, Gcoef in
// ||A^(n) "G-limit"|| = Gcoef * p_n): D^(n) exists iff q_n < Dcoef * p_n,
// G_sigma^(n) iff q_n < Gcoef_sigma * p_n.
double division_dcoef(const GadgetParams& params, double phi_l_level);
double division_gcoef(const GadgetParams& params, Side side, double phi_sigma_level);

// Throws std::domain_error on invalid parameters, ratios, or level-1 phi
// outside the admissible interval.
DivisionGeometry build_division(const GadgetParams& params, const DivisionSpec& spec);

// Throws std::domain_error when a non-inverted level violates the ordering
// inequality, or an inverted level has a tongue tip D^(n).
CreasePattern division_cp(const DivisionGeometry& dv);

}  // namespace origon
