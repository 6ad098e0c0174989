#include "origon/division.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "origon/critical.hpp"

namespace origon {

namespace {

constexpr double kExistEps = 1e-12;

std::string lvl(const std::string& base, Side s, int n) {
    return base + "_" + side_name(s) + "(" + std::to_string(n) + ")";
}

std::string lvl(const std::string& base, int n) {
    return base + "(" + std::to_string(n) + ")";
}

}  // namespace

bool DivisionGeometry::km_merged(Side s, int n) const {
    int i = static_cast<int>(s);
    return k[i][n] && m[i][n] && dist(*k[i][n], *m[i][n]) < 1e-9;
}

double division_dcoef(const GadgetParams& params, double phi_l_level) {
    double r = r_of(params);
    double psi = params.gamma() / 2 - phi_l_level;
    return (r * r - 1.0) / (2.0 * (r * std::cos(psi) - 1.0));
}

double division_gcoef(const GadgetParams& params, Side side, double phi_sigma_level) {
    return (std::tan(params.gamma() / 2) / 2.0) *
           (1.0 / std::tan(phi_sigma_level / 2) - 1.0 / std::tan(params.beta(side)));
}

DivisionGeometry build_division(const GadgetParams& params, const DivisionSpec& spec) {
    require_valid(params, GadgetMode::DivisionPreamble);
    int d = spec.d;
    if (d < 1) throw std::domain_error("division needs d >= 1");
    if (static_cast<int>(spec.ratios.size()) != d ||
        static_cast<int>(spec.phi_l_levels.size()) != d)
        throw std::domain_error("division: ratios and phi_l_levels must have d entries");
    double psum = 0.0;
    for (double p : spec.ratios) {
        if (!(p > 0.0) || !std::isfinite(p))
            throw std::domain_error("division: ratios must be positive");
        psum += p;
    }
    double gamma = params.gamma();
    PhiLInterval iv = phi_l_interval(params);
    for (int n = 1; n <= d; ++n) {
        double ph = spec.phi_l_levels[n - 1];
        if (!(ph > 0.0 && ph < gamma))
            throw std::domain_error("division: phi_l level " + std::to_string(n) +
                                    " outside (0, gamma)");
    }
    if (spec.phi_l_levels[0] < iv.lo - 1e-9 || spec.phi_l_levels[0] > iv.hi + 1e-9) {
        std::ostringstream os;
        os << "division: level-1 phi_l = " << spec.phi_l_levels[0] / DEG
           << " deg outside admissible [" << iv.lo / DEG << ", " << iv.hi / DEG << "] deg";
        throw std::domain_error(os.str());
    }
    for (int n : spec.inverted_levels)
        if (n < 2 || n > d)
            throw std::domain_error("division: inverted level " + std::to_string(n) +
                                    " outside [2, d]");

    DivisionGeometry dv;
    dv.params = params;
    dv.spec = spec;
    for (double& p : dv.spec.ratios) p *= static_cast<double>(d) / psum;
    dv.d = d;
    dv.r = r_of(params);
    const auto& p = dv.spec.ratios;

    dv.q.assign(d + 1, 0.0);
    for (int n = 1; n <= d; ++n) dv.q[n] = dv.q[n - 1] + p[n - 1];
    dv.a.resize(d + 1);
    for (int n = 0; n <= d; ++n) dv.a[n] = {0.0, dv.r * dv.q[n]};
    for (Side s : kSides) {
        int i = static_cast<int>(s);
        dv.armdir[i] = unit(theta_arm(params, s));
        dv.jdir[i] = unit(theta_j(params, s));
        dv.kpdir[i] = reflect_dir(dv.jdir[i], dv.armdir[i]);
        dv.b[i].resize(d + 1);
        for (int n = 1; n <= d; ++n) dv.b[i][n] = dv.a[n] + dv.armdir[i] * dv.q[n];
        dv.phi[i].assign(d + 1, 0.0);
    }
    dv.psi_l.assign(d + 1, 0.0);
    for (int n = 1; n <= d; ++n) {
        dv.phi[0][n] = spec.phi_l_levels[n - 1];
        dv.phi[1][n] = gamma - spec.phi_l_levels[n - 1];
        dv.psi_l[n] = gamma / 2 - spec.phi_l_levels[n - 1];
    }
    GadgetParams unit_params = params;
    unit_params.scale = 1.0;
    dv.unit_gadget.resize(d + 1);
    for (int n = 1; n <= d; ++n)
        dv.unit_gadget[n] = build_improved(unit_params, dv.phi[0][n]);

    // E^(n): the phi/2 ray from A^(n) meets the perpendicular bisector of
    // (B^(n-1), B^(n)) with B^(0) = C; that bisector runs parallel to the arm.
    for (Side s : kSides) {
        int i = static_cast<int>(s);
        dv.e[i].resize(d + 1);
        for (int n = 1; n <= d; ++n) {
            Point2 bprev = (n == 1) ? dv.a[0] : dv.b[i][n - 1];
            Point2 mid = (bprev + dv.b[i][n]) * 0.5;
            Point2 raydir = unit(theta_arm(params, s) - side_sign(s) * dv.phi[i][n] / 2);
            auto hit = intersect_lines(dv.a[n], raydir, mid, dv.armdir[i]);
            if (!hit) throw std::runtime_error("build_division: E ray parallel to bisector");
            dv.e[i][n] = hit->point;
        }
    }
    // F'^(n): tongue ray from A^(n) meets E-line n.
    dv.fp.resize(d + 1);
    dv.dcoef.assign(d + 1, 0.0);
    dv.dd.assign(d + 1, std::nullopt);
    dv.dprime.assign(d + 1, std::nullopt);
    for (int n = 1; n <= d; ++n) {
        Point2 tdir = unit(theta_arm(params, Side::Left) + dv.phi[0][n]);
        Point2 el = dv.e[0][n], er = dv.e[1][n];
        auto hit = intersect_lines(dv.a[n], tdir, el, er - el);
        if (!hit) throw std::runtime_error("build_division: tongue ray parallel to E-line");
        dv.fp[n] = hit->point;
        dv.dcoef[n] = division_dcoef(params, dv.phi[0][n]);
        double pn = p[n - 1];
        if (dv.q[n] < dv.dcoef[n] * pn - kExistEps)
            dv.dd[n] = dv.a[n] + normalize(dv.fp[n] - dv.a[n]) * dv.q[n];
        if (n >= 2 && dv.q[n - 1] < (dv.dcoef[n] - 1.0) * pn - kExistEps)
            dv.dprime[n - 1] = dv.a[n - 1] + normalize(dv.fp[n] - dv.a[n - 1]) * dv.q[n - 1];
    }
    if (!dv.dd[1])
        throw std::domain_error("division: level-1 tongue tip D(1) did not materialize");
    // G (strictly inside segment AE), J (on m^(n) when G is absent), G'.
    for (Side s : kSides) {
        int i = static_cast<int>(s);
        dv.g[i].assign(d + 1, std::nullopt);
        dv.j[i].assign(d + 1, std::nullopt);
        dv.gprime[i].assign(d + 1, std::nullopt);
        for (int n = 1; n <= d; ++n) {
            Point2 seg = dv.e[i][n] - dv.a[n];
            auto hit = intersect_lines(dv.b[i][n], dv.kpdir[i], dv.a[n], seg);
            if (hit && hit->t >= -1e-9 && hit->s >= -1e-9 && hit->s < 1.0 - 1e-7)
                dv.g[i][n] = hit->point;
            else if (hit && std::abs(hit->s - 1.0) <= 1e-7)
                dv.g[i][n] = dv.e[i][n];   // critical merge
            else if (n >= 2) {
                auto mh = intersect_lines(dv.b[i][n], dv.kpdir[i], dv.e[i][n], dv.armdir[i]);
                if (mh) dv.j[i][n] = mh->point;
            }
        }
        for (int n = 1; n < d; ++n) {
            Point2 seg = dv.e[i][n + 1] - dv.a[n];
            auto hit = intersect_lines(dv.b[i][n], dv.jdir[i], dv.a[n], seg);
            if (hit && hit->t >= -1e-9 && hit->s >= -1e-9 && hit->s < 1.0 - 1e-7)
                dv.gprime[i][n] = hit->point;
            else if (hit && std::abs(hit->s - 1.0) <= 1e-7)
                dv.gprime[i][n] = dv.e[i][n + 1];
        }
    }
    // K^(n): through D^(n), parallel to the level's tongue-edge crease
    // direction (D -> E_sigma of the level's unit gadget); meets E-line n.
    // M^(n): landing of the reflected pleat line on E-line n (needs exactly
    // one of G, D).
    for (Side s : kSides) {
        int i = static_cast<int>(s);
        dv.k[i].assign(d + 1, std::nullopt);
        dv.m[i].assign(d + 1, std::nullopt);
        for (int n = 2; n <= d; ++n) {
            Point2 el = dv.e[0][n], er = dv.e[1][n];
            Point2 edir = er - el;
            if (dv.dd[n]) {
                const ImprovedGeometry& ug = dv.unit_gadget[n];
                Point2 d_de = ug.e[i] - ug.d;
                auto hit = intersect_lines(*dv.dd[n], d_de, el, edir);
                if (!hit)
                    throw std::runtime_error("build_division: K crease parallel to E-line");
                dv.k[i][n] = hit->point;
            }
            Point2 src;
            if (dv.g[i][n] && !dv.dd[n]) src = *dv.g[i][n];
            else if (!dv.g[i][n] && dv.dd[n]) src = *dv.dd[n];
            else continue;
            Point2 dray = reflect_dir(dv.kpdir[i], dv.e[i][n] - dv.a[n]);
            auto hit = intersect_lines(src, dray, el, edir);
            if (hit && hit->t < 0) hit = intersect_lines(src, dray * -1.0, el, edir);
            if (hit) dv.m[i][n] = hit->point;
        }
    }
    return dv;
}

CreasePattern division_cp(const DivisionGeometry& dv) {
    const GadgetParams& params = dv.params;
    int d = dv.d;
    double gamma = params.gamma();

    // Level-ordering inequality on each side, lifted on inverted levels.
    for (int n = 2; n <= d; ++n) {
        if (dv.spec.level_inverted(n)) {
            if (dv.dd[n]) {
                std::ostringstream os;
                os << "division: level " << n
                   << " cannot be inverted: tongue tip D(" << n << ") exists";
                throw std::domain_error(os.str());
            }
            continue;
        }
        for (Side s : kSides) {
            int i = static_cast<int>(s);
            double bound = 1.0 / (1.0 / std::tan(dv.phi[i][n - 1] / 2) +
                                  2.0 / std::tan(gamma / 2));
            if (std::tan(dv.phi[i][n] / 2) < bound - 1e-12) {
                std::ostringstream os;
                os << "division: level " << n << " side " << side_name(s)
                   << " violates the ordering inequality (phi = " << dv.phi[i][n] / DEG
                   << " deg, bound = " << 2.0 * std::atan(bound) / DEG
                   << " deg); raise phi or invert the level";
                throw std::domain_error(os.str());
            }
        }
    }

    CpBuilder cb;
    auto ekind = [&](int n) {
        return dv.spec.level_inverted(n) ? EdgeKind::Mountain : EdgeKind::Valley;
    };
    auto upper_kind = [&](int n) {
        return dv.spec.level_inverted(n) ? EdgeKind::Valley : EdgeKind::Mountain;
    };

    for (Side s : kSides) {
        int i = static_cast<int>(s);
        for (int n = 1; n <= d; ++n) {
            cb.segment(dv.a[n], dv.b[i][n], EdgeKind::Mountain, lvl("AB", s, n));
            cb.ray(dv.b[i][n], dv.armdir[i], EdgeKind::Mountain, lvl("ell", s, n));
            if (dv.j[i][n] && dist(*dv.j[i][n], dv.e[i][n]) > 1e-9) {
                cb.segment(dv.e[i][n], *dv.j[i][n], EdgeKind::Valley, lvl("m", s, n));
                cb.ray(*dv.j[i][n], dv.armdir[i], EdgeKind::Valley, lvl("m", s, n));
            } else {
                cb.ray(dv.e[i][n], dv.armdir[i], EdgeKind::Valley, lvl("m", s, n));
            }
        }
        cb.ray(dv.a[d], dv.jdir[i], EdgeKind::Mountain, "j_" + std::string(side_name(s)));
        cb.ray(dv.b[i][d], dv.jdir[i], EdgeKind::Valley, "k_" + std::string(side_name(s)));
    }
    // E-lines, split at the interior chain points.
    for (int n = 1; n <= d; ++n) {
        Point2 el = dv.e[0][n], er = dv.e[1][n];
        std::vector<Point2> pts;
        if (n >= 2 && !dv.dd[n]) pts.push_back(dv.fp[n]);
        for (Side s : kSides) {
            int i = static_cast<int>(s);
            if (dv.k[i][n]) pts.push_back(*dv.k[i][n]);
            if (dv.m[i][n] && !dv.km_merged(s, n)) pts.push_back(*dv.m[i][n]);
        }
        std::vector<Point2> ded;
        for (Point2 q : pts) {
            if (dist(q, el) < 1e-9 || dist(q, er) < 1e-9) continue;
            bool dup = false;
            for (Point2 w : ded)
                if (dist(q, w) < 1e-9) dup = true;
            if (!dup) ded.push_back(q);
        }
        std::sort(ded.begin(), ded.end(), [&](Point2 u, Point2 v) {
            return dot(u - el, er - el) < dot(v - el, er - el);
        });
        Point2 prev = el;
        for (Point2 q : ded) {
            cb.segment(prev, q, ekind(n), lvl("E_LE_R", n));
            prev = q;
        }
        cb.segment(prev, er, ekind(n), lvl("E_LE_R", n));
    }
    // Per-level AE creases (valley), split at G; upper-band AE creases
    // (mountain unless inverted), split at G'.
    for (Side s : kSides) {
        int i = static_cast<int>(s);
        for (int n = 1; n <= d; ++n) {
            if (dv.g[i][n] && dist(*dv.g[i][n], dv.e[i][n]) > 1e-9) {
                cb.segment(dv.a[n], *dv.g[i][n], EdgeKind::Valley, lvl("AG", s, n));
                cb.segment(*dv.g[i][n], dv.e[i][n], EdgeKind::Valley, lvl("GE", s, n));
            } else {
                cb.segment(dv.a[n], dv.e[i][n], EdgeKind::Valley, lvl("AE", s, n));
            }
        }
        for (int n = 2; n <= d; ++n) {
            if (dv.gprime[i][n - 1] && dist(*dv.gprime[i][n - 1], dv.e[i][n]) > 1e-9) {
                cb.segment(dv.a[n - 1], *dv.gprime[i][n - 1], upper_kind(n), lvl("AG'", s, n));
                cb.segment(*dv.gprime[i][n - 1], dv.e[i][n], upper_kind(n), lvl("G'E", s, n));
            } else {
                cb.segment(dv.a[n - 1], dv.e[i][n], upper_kind(n), lvl("AE'", s, n));
            }
        }
    }
    // Level-1 tongue and ears.
    cb.segment(dv.a[1], *dv.dd[1], EdgeKind::Mountain, lvl("AD", 1));
    bool flank1[2];
    for (Side s : kSides) {
        int i = static_cast<int>(s);
        const auto& g1 = dv.g[i][1];
        flank1[i] = g1 && dist(*g1, dv.e[i][1]) > 1e-9;
        if (flank1[i]) {
            cb.segment(dv.b[i][1], *g1, EdgeKind::Mountain, lvl("BG", s, 1));
            cb.segment(*dv.dd[1], *g1, EdgeKind::Valley, lvl("DG", s, 1));
            cb.segment(*dv.dd[1], dv.e[i][1], EdgeKind::Mountain, lvl("DE", s, 1));
        } else {  // critical side at level 1
            cb.segment(dv.b[i][1], dv.e[i][1], EdgeKind::Mountain, lvl("BE", s, 1));
            cb.segment(*dv.dd[1], dv.e[i][1], EdgeKind::Mountain, lvl("DE", s, 1));
        }
    }
    // Per-level chain creases for n >= 2.
    for (int n = 2; n <= d; ++n) {
        for (Side s : kSides) {
            int i = static_cast<int>(s);
            if (dv.gprime[i][n - 1] && dist(*dv.gprime[i][n - 1], dv.e[i][n]) > 1e-9) {
                cb.segment(dv.b[i][n - 1], *dv.gprime[i][n - 1], EdgeKind::Mountain,
                           lvl("BG'", s, n));
            } else if (dv.j[i][n]) {
                Point2 tgt = dist(*dv.j[i][n], dv.e[i][n]) > 1e-9 ? *dv.j[i][n] : dv.e[i][n];
                cb.segment(dv.b[i][n - 1], tgt, EdgeKind::Valley, lvl("BJ'", s, n));
            }
            if (dv.g[i][n] && dist(*dv.g[i][n], dv.e[i][n]) > 1e-9) {
                cb.segment(dv.b[i][n], *dv.g[i][n], EdgeKind::Valley, lvl("BG", s, n));
            } else if (dv.j[i][n]) {
                Point2 tgt = dist(*dv.j[i][n], dv.e[i][n]) > 1e-9 ? *dv.j[i][n] : dv.e[i][n];
                cb.segment(dv.b[i][n], tgt, EdgeKind::Mountain, lvl("BJ", s, n));
            }
        }
        if (dv.dd[n]) {
            cb.segment(dv.a[n], *dv.dd[n], EdgeKind::Mountain, lvl("AD", n));
            cb.segment(dv.a[n - 1], *dv.dprime[n - 1], EdgeKind::Valley, lvl("AD'", n - 1));
            for (Side s : kSides) {
                int i = static_cast<int>(s);
                cb.segment(*dv.dd[n], *dv.k[i][n], EdgeKind::Mountain, lvl("DK", s, n));
                cb.segment(*dv.dprime[n - 1], *dv.k[i][n], EdgeKind::Valley, lvl("D'K", s, n));
                if (dv.km_merged(s, n))
                    continue;   // critical side: flank creases merge into the K crease
                if (dv.g[i][n]) {
                    if (!dv.gprime[i][n - 1])
                        throw std::runtime_error("division: G exists without matching G'");
                    cb.segment(*dv.dd[n], *dv.g[i][n], EdgeKind::Valley, lvl("DG", s, n));
                    cb.segment(*dv.dprime[n - 1], *dv.gprime[i][n - 1], EdgeKind::Mountain,
                               lvl("D'G'", s, n));
                } else if (dv.m[i][n]) {
                    cb.segment(*dv.dd[n], *dv.m[i][n], EdgeKind::Valley, lvl("DM", s, n));
                    cb.segment(*dv.dprime[n - 1], *dv.m[i][n], EdgeKind::Mountain,
                               lvl("D'M", s, n));
                }
            }
        } else {
            cb.segment(dv.a[n], dv.fp[n], EdgeKind::Mountain, lvl("AF'", n));
            cb.segment(dv.a[n - 1], dv.fp[n], EdgeKind::Valley, lvl("A'F'", n));
            for (Side s : kSides) {
                int i = static_cast<int>(s);
                if (dv.g[i][n] && dv.m[i][n] && dist(*dv.g[i][n], dv.e[i][n]) > 1e-9) {
                    if (!dv.gprime[i][n - 1])
                        throw std::runtime_error("division: G exists without matching G'");
                    cb.segment(*dv.g[i][n], *dv.m[i][n], EdgeKind::Valley, lvl("GM", s, n));
                    cb.segment(*dv.gprime[i][n - 1], *dv.m[i][n], EdgeKind::Mountain,
                               lvl("G'M", s, n));
                }
            }
        }
    }

    // Labels.
    for (int n = 1; n <= d; ++n) {
        cb.label_point(dv.a[n], lvl("A", n));
        cb.label_point(dv.fp[n], lvl("F'", n));
        if (dv.dd[n]) cb.label_point(*dv.dd[n], lvl("D", n));
        if (n < d && dv.dprime[n]) cb.label_point(*dv.dprime[n], lvl("D'", n));
        for (Side s : kSides) {
            int i = static_cast<int>(s);
            cb.label_point(dv.b[i][n], lvl("B", s, n));
            cb.label_point(dv.e[i][n], lvl("E", s, n));
            if (dv.g[i][n]) cb.label_point(*dv.g[i][n], lvl("G", s, n));
            if (dv.j[i][n]) cb.label_point(*dv.j[i][n], lvl("J", s, n));
            if (n < d && dv.gprime[i][n]) cb.label_point(*dv.gprime[i][n], lvl("G'", s, n));
            if (dv.k[i][n]) cb.label_point(*dv.k[i][n], lvl("K", s, n));
            if (dv.m[i][n] && !dv.km_merged(s, n)) cb.label_point(*dv.m[i][n], lvl("M", s, n));
        }
    }

    // Rules.
    cb.rule_at(dv.a[d], VertexRule::none());
    {
        Point2 d1 = *dv.dd[1];
        Point2 end_l = flank1[0] ? *dv.g[0][1] : dv.e[0][1];
        Point2 end_r = flank1[1] ? *dv.g[1][1] : dv.e[1][1];
        cb.rule_at(d1, VertexRule::boundary(normalize(end_l - d1), normalize(end_r - d1),
                                            normalize(d1 - dv.a[1]), params.alpha));
        for (Side s : kSides) {
            int i = static_cast<int>(s);
            if (flank1[i]) continue;
            // Critical side at level 1: E is a boundary vertex; the walk from
            // B over m and the far E ends on the tongue edge toward D.
            Point2 ev = dv.e[i][1];
            Point2 to_b = normalize(dv.b[i][1] - ev);
            cb.rule_at(ev, VertexRule::boundary(to_b, normalize(d1 - ev),
                                                normalize(to_b + dv.armdir[i]), 0.0));
        }
    }
    for (int n = 2; n <= d; ++n) {
        if (!dv.dd[n]) continue;
        Point2 dn = *dv.dd[n];
        Point2 dpn = *dv.dprime[n - 1];
        Point2 ends[2], endsp[2];
        for (Side s : kSides) {
            int i = static_cast<int>(s);
            if (dv.km_merged(s, n)) {
                ends[i] = normalize(*dv.k[i][n] - dn);
                endsp[i] = normalize(*dv.k[i][n] - dpn);
            } else if (dv.g[i][n]) {
                ends[i] = normalize(*dv.g[i][n] - dn);
                endsp[i] = normalize(*dv.gprime[i][n - 1] - dpn);
            } else {
                ends[i] = normalize(*dv.m[i][n] - dn);
                endsp[i] = normalize(*dv.m[i][n] - dpn);
            }
        }
        cb.rule_at(dn, VertexRule::boundary(ends[0], ends[1],
                                            normalize(dn - dv.a[n]), params.alpha));
        cb.rule_at(dpn, VertexRule::boundary(endsp[0], endsp[1],
                                             normalize(dpn - dv.a[n - 1]), params.alpha));
    }

    std::map<std::string, double> meta = {
        {"alpha", params.alpha}, {"beta_l", params.beta_l}, {"beta_r", params.beta_r},
        {"delta_l", 0.0}, {"delta_r", 0.0}, {"d", static_cast<double>(d)}};
    for (int n = 1; n <= d; ++n) {
        meta["p_" + std::to_string(n)] = dv.spec.ratios[n - 1];
        meta["phi_l_" + std::to_string(n)] = dv.phi[0][n];
        meta["inverted_" + std::to_string(n)] = dv.spec.level_inverted(n) ? 1.0 : 0.0;
    }
    return cb.build("division", meta);
}

}  // namespace origon
