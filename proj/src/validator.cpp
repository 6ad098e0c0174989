#include "origon/validator.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace origon {

namespace {

// Matching tolerance for chain directions against incident crease directions.
// Vertex merging can displace endpoints by up to the merge radius, so chain
// directions are matched more loosely than the angle tolerance.
constexpr double kDirMatchEps = 1e-6;

double interior_alternating_sum(std::vector<double> th) {
    std::sort(th.begin(), th.end());
    double s = 0.0;
    for (size_t i = 0; i < th.size(); ++i) {
        double sec = sector(th[i], th[(i + 1) % th.size()]);
        s += (i % 2 == 0) ? sec : -sec;
    }
    return std::abs(s);
}

}  // namespace

int planarity_crossings(const CreasePattern& cp) {
    int bad = 0;
    const auto& es = cp.edges;
    for (size_t i = 0; i < es.size(); ++i) {
        Point2 p1 = cp.vertices[es[i].u].pos;
        Point2 d1 = cp.vertices[es[i].v].pos - p1;
        for (size_t j = i + 1; j < es.size(); ++j) {
            if (es[j].u == es[i].u || es[j].u == es[i].v ||
                es[j].v == es[i].u || es[j].v == es[i].v)
                continue;
            Point2 p2 = cp.vertices[es[j].u].pos;
            Point2 d2 = cp.vertices[es[j].v].pos - p2;
            auto hit = intersect_lines(p1, d1, p2, d2);
            if (hit && hit->t > 1e-7 && hit->t < 1.0 - 1e-7 &&
                hit->s > 1e-7 && hit->s < 1.0 - 1e-7)
                ++bad;
        }
    }
    return bad;
}

FoldabilityReport kawasaki_check(const CreasePattern& cp, const Tolerance& tol) {
    FoldabilityReport rep;
    rep.crossings = planarity_crossings(cp);

    std::vector<std::vector<double>> incident(cp.vertices.size());
    for (const auto& e : cp.edges) {
        Point2 pu = cp.vertices[e.u].pos, pv = cp.vertices[e.v].pos;
        incident[e.u].push_back(ang(pv - pu));
        incident[e.v].push_back(ang(pu - pv));
    }

    for (size_t vi = 0; vi < cp.vertices.size(); ++vi) {
        const CpVertex& vx = cp.vertices[vi];
        if (vx.rule.kind == VertexRule::Kind::None) continue;
        std::vector<double> th;
        for (double a : incident[vi]) {
            double m = std::fmod(a, TAU);
            if (m < 0) m += TAU;
            th.push_back(m);
        }
        std::sort(th.begin(), th.end());
        th.erase(std::unique(th.begin(), th.end(),
                             [&](double a, double b) { return std::abs(a - b) < tol.angle_eps; }),
                 th.end());
        if (th.size() >= 2 && th.back() - th.front() > TAU - tol.angle_eps) th.pop_back();
        if (th.size() <= 2) continue;

        VertexCheck c;
        c.vertex = static_cast<int>(vi);
        c.label = vx.label;
        c.degree = static_cast<int>(th.size());

        if (vx.rule.kind == VertexRule::Kind::Interior) {
            if (th.size() % 2 != 0) {
                c.kind = "odd-degree";
                c.value = static_cast<double>(th.size());
                c.expected = 0.0;
                c.pass = false;
            } else {
                c.kind = "interior";
                c.value = interior_alternating_sum(th);
                c.expected = 0.0;
                c.pass = c.value <= tol.angle_eps;
                rep.worst_err = std::max(rep.worst_err, c.value);
            }
            rep.checks.push_back(c);
            continue;
        }

        // Boundary: walk the arc between the two chain directions that
        // contains the anchor; creases outside the arc belong to the
        // unconstrained region and are ignored.
        double a_th = ang(vx.rule.chain_a);
        double b_th = ang(vx.rule.chain_b);
        double an_th = ang(vx.rule.anchor);
        double lo, size;
        if (sector(a_th, an_th) <= sector(a_th, b_th)) {
            lo = a_th;
            size = sector(a_th, b_th);
        } else {
            lo = b_th;
            size = sector(b_th, a_th);
        }
        std::vector<double> offs;
        for (double t : th) {
            double off = sector(lo, t);
            if (off >= TAU - kDirMatchEps) off = 0.0;
            if (off <= size + kDirMatchEps) offs.push_back(off);
        }
        std::sort(offs.begin(), offs.end());
        c.kind = "boundary";
        c.expected = vx.rule.expected;
        if (offs.size() < 2 || offs.front() > kDirMatchEps ||
            std::abs(offs.back() - size) > kDirMatchEps) {
            c.kind = "bad-chain";
            c.value = offs.empty() ? -1.0 : offs.size();
            c.pass = false;
            rep.checks.push_back(c);
            continue;
        }
        double an_off = sector(lo, an_th);
        size_t k = 0;
        while (k + 2 < offs.size() && offs[k + 1] <= an_off) ++k;
        double sum = 0.0;
        for (size_t i = 0; i + 1 < offs.size(); ++i) {
            double sec = offs[i + 1] - offs[i];
            sum += ((i >= k ? i - k : k - i) % 2 == 0) ? sec : -sec;
        }
        c.value = std::abs(sum);
        c.pass = std::abs(c.value - c.expected) <= tol.angle_eps;
        rep.worst_err = std::max(rep.worst_err, std::abs(c.value - c.expected));
        rep.checks.push_back(c);
    }

    rep.pass = rep.crossings == 0 &&
               std::all_of(rep.checks.begin(), rep.checks.end(),
                           [](const VertexCheck& c) { return c.pass; });
    return rep;
}

}  // namespace origon
