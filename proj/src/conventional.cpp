#include "origon/conventional.hpp"

#include <cmath>
#include <stdexcept>

namespace origon {

ConventionalGeometry build_conventional(const GadgetParams& params) {
    require_valid(params, GadgetMode::Conventional);
    ConventionalGeometry g;
    g.params = params;
    g.a = {0.0, 0.0};
    for (Side side : kSides) {
        int i = static_cast<int>(side);
        g.arm_dir[i] = unit(theta_arm(params, side));
        g.j_dir[i] = unit(theta_j(params, side));
        g.b[i] = g.a + g.arm_dir[i] * params.scale;
    }
    // C: common point of the perpendiculars to the arms at B_sigma.
    auto ch = intersect_lines(g.b[0], perp(g.arm_dir[0]), g.b[1], perp(g.arm_dir[1]));
    if (!ch) throw std::runtime_error("build_conventional: perpendiculars parallel");
    g.c = ch->point;
    // D_sigma: ray from B_sigma at angle pi - beta_sigma off B->A, meeting the
    // perpendicular bisector of B_sigma C.
    for (Side side : kSides) {
        int i = static_cast<int>(side);
        Point2 mid = (g.b[i] + g.c) * 0.5;
        Point2 bis_dir = perp(g.c - g.b[i]);
        double a_ba = ang(g.a - g.b[i]);
        Point2 dray = unit(a_ba + side_sign(side) * (PI - params.beta(side)));
        auto hit = intersect_lines(g.b[i], dray, mid, bis_dir);
        if (!hit) throw std::runtime_error("build_conventional: D ray misses bisector");
        g.d[i] = hit->point;
    }
    return g;
}

double conventional_bd(const GadgetParams& params, Side side) {
    return params.scale * std::tan(params.gamma() / 2) / (2.0 * std::sin(params.beta(side)));
}

bool pyramid_feasible(const ConventionalGeometry& g) {
    const GadgetParams& p = g.params;
    double a_l = std::abs(signed_angle(g.d[0] - g.a, g.b[0] - g.a));
    double a_r = std::abs(signed_angle(g.d[1] - g.a, g.b[1] - g.a));
    double a_lr = std::abs(signed_angle(g.d[1] - g.a, g.d[0] - g.a));
    bool sector_ok = a_l + a_r > a_lr;
    bool apex_ok = (PI - p.beta_l) + (PI - p.beta_r) + p.alpha < TAU;
    return sector_ok && apex_ok;
}

CreasePattern conventional_cp(const ConventionalGeometry& g) {
    const GadgetParams& p = g.params;
    CpBuilder cb;
    for (Side side : kSides) {
        int i = static_cast<int>(side);
        std::string s = side_name(side);
        cb.segment(g.a, g.b[i], EdgeKind::Mountain, "AB_" + s);
        cb.ray(g.a, g.j_dir[i], EdgeKind::Mountain, "j_" + s);
        cb.ray(g.b[i], g.arm_dir[i], EdgeKind::Mountain, "ell_" + s);
        cb.ray(g.b[i], g.j_dir[i], EdgeKind::Valley, "k_" + s);
        cb.ray(g.d[i], g.arm_dir[i], EdgeKind::Valley, "m_" + s);
        cb.segment(g.b[i], g.d[i], EdgeKind::Mountain, "BD_" + s);
        cb.segment(g.a, g.d[i], EdgeKind::Valley, "AD_" + s);
        cb.label_point(g.b[i], "B_" + s);
        cb.label_point(g.d[i], "D_" + s);
    }
    cb.segment(g.d[0], g.d[1], EdgeKind::Valley, "D_LD_R");
    cb.label_point(g.a, "A");
    // A is the apex; D_sigma sits on the folded-region boundary chain
    // B_L D_L D_R B_R, where no local vanishing condition applies.
    cb.rule_at(g.a, VertexRule::none());
    cb.rule_at(g.d[0], VertexRule::none());
    cb.rule_at(g.d[1], VertexRule::none());
    return cb.build("conventional",
                    {{"alpha", p.alpha}, {"beta_l", p.beta_l}, {"beta_r", p.beta_r},
                     {"delta_l", 0.0}, {"delta_r", 0.0}, {"scale", p.scale}});
}

}  // namespace origon
