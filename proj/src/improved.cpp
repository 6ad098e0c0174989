#include "origon/improved.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace origon {

namespace {

double sq(double x) { return x * x; }

}  // namespace

double rho_of(const GadgetParams& params, Side side, double phi_sigma) {
    // Stable form of atan(sin psi / (r - cos psi)):
    // r - cos(psi) = r*[sin^2((gl-psi)/2) + sin^2((gl+psi)/2) + cos(psi)*sin(gl)*tan(dl)]
    // since 1/r = cos(gl) - sin(gl)*tan(dl) and 1 - cosA*cosB = sin^2((A-B)/2)+sin^2((A+B)/2).
    double r = r_of(params);
    double gl = gamma_sigma(params, Side::Left);
    double dl = params.delta_l;
    double psi = gamma_sigma(params, side) - phi_sigma;
    double bracket = sq(std::sin((gl - psi) / 2)) + sq(std::sin((gl + psi) / 2))
                     + std::cos(psi) * std::sin(gl) * std::tan(dl);
    return std::atan2(std::sin(psi), r * bracket);
}

double eps_of(const GadgetParams& params, Side side, double phi_sigma) {
    double gs = gamma_sigma(params, side);
    double psi = gs - phi_sigma;
    return params.beta(side) + gs / 2 + psi / 2 + rho_of(params, side, phi_sigma) - PI / 2;
}

double phi_from_eps(const GadgetParams& params, Side side, double eps_sigma) {
    double r = r_of(params);
    double gs = gamma_sigma(params, side);
    double w = eps_sigma - params.beta(side) - gs / 2 + PI / 2;
    double psi = 2.0 * std::atan2((r - 1.0) * std::tan(w), r + 1.0);
    return gs - psi;
}

EpsInterval eps_interval(const GadgetParams& params, Side side) {
    double g2 = params.gamma() / 2;
    double z_own = zeta_closed(params, side);
    double z_oth = zeta_closed(params, other(side));
    EpsInterval iv;
    // eps decreases in phi_sigma; phi_sigma spans (gamma - 2 zeta_other, 2 zeta_own].
    iv.hi = (z_oth < g2 - 1e-15) ? params.beta_l + params.beta_r + g2 - PI
                                 : params.beta(side) - params.delta(side);
    iv.lo = (z_own < g2 - 1e-15) ? 0.0
                                 : params.beta(side) + g2 + params.delta_other(side) - PI;
    return iv;
}

double resolve_phi_l(const GadgetParams& params, const DParameterization& sel) {
    double gamma = params.gamma();
    PhiLInterval iv = phi_l_interval(params);
    double phi_l = std::visit(
        [&](auto&& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ByPhiL>) {
                return v.phi_l;
            } else if constexpr (std::is_same_v<T, ByPsiL>) {
                return gamma_sigma(params, Side::Left) - v.psi_l;
            } else if constexpr (std::is_same_v<T, ByEpsilon>) {
                EpsInterval ei = eps_interval(params, v.side);
                if (v.eps < ei.lo - 1e-9 || v.eps > ei.hi + 1e-9) {
                    std::ostringstream os;
                    os << "eps_" << side_name(v.side) << " = " << v.eps / DEG
                       << " deg outside [" << ei.lo / DEG << ", " << ei.hi / DEG << "] deg";
                    throw std::domain_error(os.str());
                }
                double phi_s = phi_from_eps(params, v.side, v.eps);
                return v.side == Side::Left ? phi_s : gamma - phi_s;
            } else if constexpr (std::is_same_v<T, Balanced>) {
                return std::min(std::max(gamma / 2, iv.lo), iv.hi);
            } else if constexpr (std::is_same_v<T, LeftCritical>) {
                return iv.hi;
            } else if constexpr (std::is_same_v<T, RightCritical>) {
                return iv.lo;
            } else {
                static_assert(std::is_same_v<T, Orthogonal>);
                return gamma_sigma(params, Side::Left);
            }
        },
        sel);
    if (phi_l < iv.lo - 1e-9 || phi_l > iv.hi + 1e-9 || phi_l <= 0.0 || phi_l >= gamma) {
        std::ostringstream os;
        os << "phi_l = " << phi_l / DEG << " deg outside admissible ["
           << iv.lo / DEG << ", " << iv.hi / DEG << "] deg";
        throw std::domain_error(os.str());
    }
    return phi_l;
}

bool ImprovedGeometry::side_critical(Side s) const {
    int i = static_cast<int>(s);
    if (!g[i]) return false;
    if (params.delta(s) > 1e-12)
        return h[i] && dist(*g[i], *h[i]) < 1e-9;
    return dist(*g[i], e[i]) < 1e-9;
}

bool ImprovedGeometry::gh_merged(Side s) const {
    int i = static_cast<int>(s);
    return params.delta(s) > 1e-12 && g[i] && h[i] && dist(*g[i], *h[i]) < 1e-9;
}

ImprovedGeometry build_improved(const GadgetParams& params, double phi_l) {
    require_valid(params, GadgetMode::Improved);
    if (!(phi_l > 0.0 && phi_l < params.gamma()))
        throw std::domain_error("phi_l must lie in (0, gamma)");
    ImprovedGeometry g;
    g.params = params;
    g.phi_l = phi_l;
    g.phi_r = params.gamma() - phi_l;
    g.a = {0.0, 0.0};
    double scale = params.scale;
    for (Side side : kSides) {
        int i = static_cast<int>(side);
        Point2 arm = unit(theta_arm(params, side));
        g.b[i] = g.a + arm * scale;
        g.ell_dir[i] = unit(theta_ell(params, side));
        g.j_dir[i] = unit(theta_j(params, side));
        // Ray from B_sigma that meets segment AE_sigma at G_sigma: it makes
        // angle pi - beta_sigma with ray B_sigma->A, i.e. the j direction
        // mirrored across the arm line AB_sigma (NOT across ell_sigma).
        g.g_dir[i] = reflect_dir(g.j_dir[i], arm);
    }
    double r = r_of(params);
    g.c = unit(theta_arm(params, Side::Left) + gamma_sigma(params, Side::Left)) * (r * scale);
    g.d = unit(theta_arm(params, Side::Left) + phi_l) * scale;
    for (Side side : kSides) {
        int i = static_cast<int>(side);
        g.e[i] = circumcenter(g.b[i], g.c, g.d);
        Point2 seg = g.e[i] - g.a;
        std::optional<double> t_h;
        if (params.delta(side) > 1e-12) {
            double a_ba = ang(g.a - g.b[i]);
            double a_be = ang(g.e[i] - g.b[i]);
            double d_ang = wrap_pi(a_be - a_ba);
            double tgt = a_ba + d_ang - std::copysign(params.delta(side), d_ang);
            auto hit = intersect_lines(g.b[i], unit(tgt), g.a, seg);
            if (hit) {
                g.h[i] = hit->point;
                t_h = hit->s;
            }
        }
        auto hit = intersect_lines(g.b[i], g.g_dir[i], g.a, seg);
        if (hit && hit->t >= -1e-9 && hit->s >= -1e-9 && hit->s <= 1.0 + 1e-7) {
            // Constructible only while A, G, H, E stay in order along AE.
            if (!t_h) {
                if (hit->s < 1.0 - 1e-7) g.g[i] = hit->point;
                else                     g.g[i] = g.e[i];
            } else if (hit->s <= *t_h + 1e-7) {
                if (hit->s < *t_h - 1e-7) g.g[i] = hit->point;
                else                      g.g[i] = *g.h[i];
            }
        }
    }
    return g;
}

CreasePattern improved_cp(const ImprovedGeometry& g, int variant) {
    const GadgetParams& p = g.params;
    if (variant != 1 && variant != 2)
        throw std::invalid_argument("variant must be 1 or 2");
    CpBuilder cb;
    for (Side side : kSides) {
        int i = static_cast<int>(side);
        std::string s = side_name(side);
        cb.segment(g.a, g.b[i], EdgeKind::Mountain, "AB_" + s);
        cb.ray(g.b[i], g.ell_dir[i], EdgeKind::Mountain, "ell_" + s);
        cb.ray(g.a, g.j_dir[i], EdgeKind::Mountain, "j_" + s);
        cb.ray(g.b[i], g.j_dir[i], EdgeKind::Valley, "k_" + s);
        cb.ray(g.e[i], g.ell_dir[i], EdgeKind::Valley, "m_" + s);
        cb.label_point(g.b[i], "B_" + s);
        cb.label_point(g.e[i], "E_" + s);
    }
    cb.segment(g.e[0], g.e[1], EdgeKind::Valley, "E_LE_R");
    cb.segment(g.a, g.d, EdgeKind::Mountain, "AD");
    cb.label_point(g.a, "A");
    cb.label_point(g.d, "D");
    cb.rule_at(g.a, VertexRule::none());

    // D: the top-face angle alpha reappears between the inner ear creases,
    // with each non-merged flank sector folding away.
    Point2 d_inner[2], d_flank[2];
    bool d_has_flank[2];

    for (Side side : kSides) {
        int i = static_cast<int>(side);
        std::string s = side_name(side);
        double ds = p.delta(side);
        if (!g.g[i]) {
            throw std::domain_error("phi_" + s + " outside constructible range: ear vertex G_" +
                                    s + " missing");
        }
        Point2 gp = *g.g[i];
        if (ds <= 1e-12) {
            if (!g.side_critical(side)) {
                cb.segment(g.a, gp, EdgeKind::Valley, "AG_" + s);
                cb.segment(gp, g.e[i], EdgeKind::Valley, "GE_" + s);
                cb.segment(g.b[i], gp, EdgeKind::Mountain, "BG_" + s);
                cb.segment(g.d, gp, EdgeKind::Valley, "DG_" + s);
                cb.segment(g.d, g.e[i], EdgeKind::Mountain, "DE_" + s);
                cb.label_point(gp, "G_" + s);
                d_inner[i] = g.e[i];
                d_flank[i] = gp;
                d_has_flank[i] = true;
            } else {
                // critical side: G = E
                cb.segment(g.a, g.e[i], EdgeKind::Valley, "AE_" + s);
                cb.segment(g.b[i], g.e[i], EdgeKind::Mountain, "BE_" + s);
                cb.segment(g.d, g.e[i], EdgeKind::Valley, "DE_" + s);
                cb.label_point(g.e[i], "G_" + s);
                d_inner[i] = g.e[i];
                d_has_flank[i] = false;
                // Boundary vertex: the folded-region edge enters along EB and
                // leaves along ED; the sector sum from B over m and the far E
                // vanishes.
                Point2 to_b = normalize(g.b[i] - g.e[i]);
                Point2 to_d = normalize(g.d - g.e[i]);
                Point2 anchor = normalize(to_b + g.ell_dir[i]);
                cb.rule_at(g.e[i], VertexRule::boundary(to_b, to_d, anchor, 0.0));
            }
        } else if (g.gh_merged(side)) {
            // critical with delta > 0: G = H strictly inside AE
            cb.segment(g.a, gp, EdgeKind::Valley, "AG_" + s);
            cb.segment(gp, g.e[i], EdgeKind::Valley, "GE_" + s);
            cb.segment(g.b[i], g.e[i], EdgeKind::Mountain, "BE_" + s);
            cb.segment(g.b[i], gp, EdgeKind::Valley, "BG_" + s);
            cb.segment(g.d, gp, EdgeKind::Mountain, "DG_" + s);
            cb.label_point(gp, "G_" + s);
            cb.label_point(gp, "H_" + s);
            d_inner[i] = gp;
            d_has_flank[i] = false;
            Point2 anchor = normalize(g.j_dir[i] + g.ell_dir[i]);
            cb.rule_at(g.b[i], VertexRule::boundary(g.j_dir[i], normalize(gp - g.b[i]),
                                                    anchor, 0.0));
        } else {
            Point2 hp = *g.h[i];
            cb.segment(g.a, gp, EdgeKind::Valley, "AG_" + s);
            cb.segment(gp, hp, EdgeKind::Valley, "GH_" + s);
            cb.segment(g.d, gp, EdgeKind::Valley, "DG_" + s);
            cb.segment(g.d, hp, EdgeKind::Mountain, "DH_" + s);
            if (variant == 1) {
                cb.segment(hp, g.e[i], EdgeKind::Valley, "HE_" + s);
                cb.segment(g.b[i], g.e[i], EdgeKind::Mountain, "BE_" + s);
                cb.segment(g.b[i], gp, EdgeKind::Mountain, "BG_" + s);
                cb.segment(g.b[i], hp, EdgeKind::Valley, "BH_" + s);
            } else {
                cb.segment(hp, g.e[i], EdgeKind::Mountain, "HE_" + s);
                cb.segment(g.b[i], g.e[i], EdgeKind::Valley, "BE_" + s);
                cb.segment(g.b[i], gp, EdgeKind::Valley, "BG_" + s);
                cb.segment(g.b[i], hp, EdgeKind::Mountain, "BH_" + s);
            }
            cb.label_point(gp, "G_" + s);
            cb.label_point(hp, "H_" + s);
            d_inner[i] = hp;
            d_flank[i] = gp;
            d_has_flank[i] = true;
            Point2 anchor = normalize(g.j_dir[i] + g.ell_dir[i]);
            cb.rule_at(g.b[i], VertexRule::boundary(g.j_dir[i], normalize(gp - g.b[i]),
                                                    anchor, 0.0));
        }
    }
    Point2 end_l = d_has_flank[0] ? d_flank[0] : d_inner[0];
    Point2 end_r = d_has_flank[1] ? d_flank[1] : d_inner[1];
    cb.rule_at(g.d, VertexRule::boundary(normalize(end_l - g.d), normalize(end_r - g.d),
                                         normalize(g.d - g.a), p.alpha));

    std::string name = "improved-v" + std::to_string(variant);
    return cb.build(name, {{"alpha", p.alpha}, {"beta_l", p.beta_l}, {"beta_r", p.beta_r},
                           {"delta_l", p.delta_l}, {"delta_r", p.delta_r},
                           {"phi_l", g.phi_l}, {"scale", p.scale},
                           {"variant", static_cast<double>(variant)}});
}

}  // namespace origon
