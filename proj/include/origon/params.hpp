#pragma once
// ===== Gadget parameters, validity conditions, derived quantities =====
//
// A gadget extrudes along two arm creases AB_L, AB_R meeting at apex A.
// Parameters (radians): top-face angle alpha, side-face angles beta_L/beta_R,
// and back-face tilts delta_L/delta_R (zero for the pyramid-supported kind).
// gamma = tau - alpha - beta_L - beta_R is the developed angle between the
// arms on the flat sheet.
//
// Canonical pose used by every builder: A at the origin, the gamma sector
// opening downward and bisected by the -y axis, B_L on the x<0 side,
// ||AB_sigma|| = scale.

#include <string>
#include <vector>

#include "origon/geom.hpp"

namespace origon {

enum class Side { Left, Right };

inline constexpr double side_sign(Side s) { return s == Side::Left ? -1.0 : +1.0; }
inline constexpr Side other(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
inline constexpr const char* side_name(Side s) { return s == Side::Left ? "L" : "R"; }
inline constexpr Side kSides[2] = {Side::Left, Side::Right};

struct GadgetParams {
    double alpha = 0.0;
    double beta_l = 0.0;
    double beta_r = 0.0;
    double delta_l = 0.0;
    double delta_r = 0.0;
    double scale = 1.0;   // ||AB_sigma||

    double gamma() const { return TAU - alpha - beta_l - beta_r; }
    double beta(Side s) const { return s == Side::Left ? beta_l : beta_r; }
    double delta(Side s) const { return s == Side::Left ? delta_l : delta_r; }
    double delta_other(Side s) const { return s == Side::Left ? delta_r : delta_l; }
};

enum class GadgetMode { Conventional, Improved, DivisionPreamble };

struct ValidationIssue {
    std::string condition;   // short machine-ish name, e.g. "alpha < beta_l + beta_r"
    std::string detail;
};

// Check the validity conditions for the requested construction.
//   All modes:  0 < alpha < pi;  alpha < beta_l+beta_r;  beta_l < alpha+beta_r;
//               beta_r < alpha+beta_l;  alpha+beta_l+beta_r < tau.
//   Conventional / DivisionPreamble:  alpha+beta_l+beta_r > pi and delta = 0.
//   Improved:   delta_sigma >= 0;  delta_sigma < beta_sigma and < pi/2;
//               gamma + delta_l + delta_r < pi.
std::vector<ValidationIssue> validate(const GadgetParams& p, GadgetMode mode);
inline bool is_valid(const GadgetParams& p, GadgetMode mode) { return validate(p, mode).empty(); }

// Throws std::domain_error listing the violated conditions.
void require_valid(const GadgetParams& p, GadgetMode mode);

struct DerivedQuantities {
    double gamma = 0.0;
    double gamma_l = 0.0;   // developed angle between AB_L and the fold axis AC
    double gamma_r = 0.0;
    double r = 0.0;         // ||AC|| / ||AB||
    double lambda = 0.0;    // diagonal stretch factor of the extruded top face
};

DerivedQuantities derive(const GadgetParams& p);

// Developed angle between arm AB_sigma and the central fold crease AC.
double gamma_sigma(const GadgetParams& p, Side s);

// ||AC|| in units of ||AB||.
double r_of(const GadgetParams& p);

// Diagonal stretch factor lambda (depends only on alpha, beta_l, beta_r).
double lambda_of(const GadgetParams& p);

// Canonical-pose directions from A (arm) and from B_sigma (hem ell, side-face
// edge j); all as absolute angles.
double theta_arm(const GadgetParams& p, Side s);
double theta_ell(const GadgetParams& p, Side s);
double theta_j(const GadgetParams& p, Side s);

}  // namespace origon
