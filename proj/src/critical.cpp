#include "origon/critical.hpp"

#include <cmath>
#include <stdexcept>

namespace origon {

namespace {

double cot(double x) { return std::cos(x) / std::sin(x); }

}  // namespace

double zeta_closed(const GadgetParams& params, Side side) {
    double g = 0.5 * params.gamma();
    double beta = params.beta(side);
    double delta = params.delta(side);
    double delta_other = params.delta_other(side);
    if (beta + g + delta_other > PI) return g;
    double inv_c = cot(g);
    double inv_cp = cot(g + params.delta_l + params.delta_r);
    double d = std::tan(delta);
    double bs = std::tan(beta - delta);
    return std::atan2(1.0 - d * inv_cp, inv_c + inv_cp + (1.0 + d * inv_c) / bs);
}

CriticalAngleConstruction zeta_geometric(const GadgetParams& params) {
    CriticalAngleConstruction out;

    Point2 a{0.0, 0.0};
    Point2 b[2], ell_dir[2];
    for (Side side : kSides) {
        b[static_cast<int>(side)] =
            a + unit(theta_arm(params, side)) * params.scale;
        ell_dir[static_cast<int>(side)] = unit(theta_ell(params, side));
    }

    // C: common point of the perpendiculars to ell_sigma at B_sigma.
    auto perp_hit = intersect_lines(b[0], perp(ell_dir[0]), b[1], perp(ell_dir[1]));
    if (!perp_hit) throw std::runtime_error("zeta_geometric: perpendiculars parallel");
    out.c = perp_hit->point;

    // P: intersection of the perpendicular bisectors of B_sigma C. Each
    // bisector runs parallel to ell_sigma through the midpoint of B_sigma C.
    Point2 mid_l = (b[0] + out.c) * 0.5;
    Point2 mid_r = (b[1] + out.c) * 0.5;
    auto bis_hit = intersect_lines(mid_l, ell_dir[0], mid_r, ell_dir[1]);
    if (!bis_hit) throw std::runtime_error("zeta_geometric: bisectors parallel");
    out.p = bis_hit->point;

    for (Side side : kSides) {
        int i = static_cast<int>(side);
        double sgn = side_sign(side);
        // Auxiliary ray from B_sigma, rotated pi - beta + delta off BA.
        Point2 n_dir = unit(ang(a - b[i]) + sgn * (PI - params.beta(side) + params.delta(side)));

        Point2 q;
        auto on_ap = intersect_lines(b[i], n_dir, a, out.p - a);
        if (on_ap && on_ap->t >= -1e-9 && on_ap->s >= -1e-9 && on_ap->s <= 1.0 + 1e-7) {
            q = on_ap->point;
        } else {
            auto on_m = intersect_lines(b[i], n_dir, out.p, ell_dir[i]);
            if (!on_m || on_m->t < -1e-9 || on_m->s < -1e-9)
                throw std::runtime_error("zeta_geometric: auxiliary ray misses bisector");
            q = on_m->point;
        }
        double z = std::abs(signed_angle(b[i] - a, q - a));
        if (side == Side::Left) { out.q_l = q; out.zeta_l = z; }
        else                    { out.q_r = q; out.zeta_r = z; }
    }
    return out;
}

PhiLInterval phi_l_interval(const GadgetParams& params) {
    return {params.gamma() - 2.0 * zeta_closed(params, Side::Right),
            2.0 * zeta_closed(params, Side::Left)};
}

}  // namespace origon
