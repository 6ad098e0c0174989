#include "origon/cp.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace origon {

namespace {

struct VertexPool {
    std::vector<Point2> pts;
    int intern(Point2 p) {
        for (size_t i = 0; i < pts.size(); ++i)
            if (dist(pts[i], p) < CpBuilder::kMergeEps) return static_cast<int>(i);
        pts.push_back(p);
        return static_cast<int>(pts.size()) - 1;
    }
    int find(Point2 p) const {
        for (size_t i = 0; i < pts.size(); ++i)
            if (dist(pts[i], p) < CpBuilder::kMergeEps) return static_cast<int>(i);
        return -1;
    }
};

}  // namespace

void CpBuilder::segment(Point2 p, Point2 q, EdgeKind kind, const std::string& label) {
    segs_.push_back({p, q, kind, label, false});
}

void CpBuilder::ray(Point2 origin, Point2 dir, EdgeKind kind, const std::string& label) {
    rays_.push_back({origin, normalize(dir), kind, label});
}

void CpBuilder::label_point(Point2 p, const std::string& label) {
    labels_.emplace_back(p, label);
}

void CpBuilder::rule_at(Point2 p, const VertexRule& rule) {
    rules_.emplace_back(p, rule);
}

CreasePattern CpBuilder::build(const std::string& construction,
                               const std::map<std::string, double>& parameters) const {
    // Bounding box of the construction points (ray clip endpoints excluded).
    double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
    auto grow = [&](Point2 p) {
        minx = std::min(minx, p.x); maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y); maxy = std::max(maxy, p.y);
    };
    for (const auto& s : segs_) { grow(s.p); grow(s.q); }
    for (const auto& r : rays_) grow(r.origin);
    if (segs_.empty() && rays_.empty())
        throw std::invalid_argument("CpBuilder: empty pattern");
    double w = std::max(maxx - minx, 1e-6), h = std::max(maxy - miny, 1e-6);
    double pad = clip_inflation_ * std::max(w, h);
    minx -= pad; maxx += pad; miny -= pad; maxy += pad;

    std::vector<RawSeg> raw = segs_;
    for (const auto& r : rays_) {
        // Exit parameter of origin + t*dir from the inflated box.
        double t_exit = 1e300;
        if (r.dir.x > 1e-15) t_exit = std::min(t_exit, (maxx - r.origin.x) / r.dir.x);
        if (r.dir.x < -1e-15) t_exit = std::min(t_exit, (minx - r.origin.x) / r.dir.x);
        if (r.dir.y > 1e-15) t_exit = std::min(t_exit, (maxy - r.origin.y) / r.dir.y);
        if (r.dir.y < -1e-15) t_exit = std::min(t_exit, (miny - r.origin.y) / r.dir.y);
        raw.push_back({r.origin, r.origin + r.dir * t_exit, r.kind, r.label, true});
    }

    VertexPool pool;
    struct Mid { int u, v; EdgeKind kind; std::string label; bool v_is_clip; };
    std::vector<Mid> mids;
    std::set<std::pair<int, int>> seen;
    std::vector<bool> at_clip;
    for (const auto& s : raw) {
        if (dist(s.p, s.q) < kMergeEps) continue;   // merged away (critical cases)
        int u = pool.intern(s.p);
        int v = pool.intern(s.q);
        at_clip.resize(pool.pts.size(), false);
        if (s.q_is_clip) at_clip[v] = true;
        if (u == v) continue;
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) continue;
        mids.push_back({u, v, s.kind, s.label, s.q_is_clip});
    }
    at_clip.resize(pool.pts.size(), false);

    // Split edges at pool vertices lying on their interior.
    struct Fin { int u, v; EdgeKind kind; std::string label; };
    std::vector<Fin> fins;
    std::set<std::pair<int, int>> fseen;
    for (const auto& m : mids) {
        Point2 p = pool.pts[m.u], q = pool.pts[m.v];
        Point2 d = q - p;
        double len = norm(d);
        Point2 du = d * (1.0 / len);
        std::vector<std::pair<double, int>> cuts;
        for (size_t i = 0; i < pool.pts.size(); ++i) {
            if (static_cast<int>(i) == m.u || static_cast<int>(i) == m.v) continue;
            Point2 wv = pool.pts[i] - p;
            double t = dot(wv, du);
            if (t > kMergeEps && t < len - kMergeEps && std::abs(cross(du, wv)) < kMergeEps)
                cuts.emplace_back(t, static_cast<int>(i));
        }
        std::sort(cuts.begin(), cuts.end());
        int prev = m.u;
        for (const auto& [t, i] : cuts) {
            auto key = std::minmax(prev, i);
            if (fseen.insert(key).second) fins.push_back({prev, i, m.kind, m.label});
            prev = i;
        }
        auto key = std::minmax(prev, m.v);
        if (fseen.insert(key).second) fins.push_back({prev, m.v, m.kind, m.label});
    }

    CreasePattern cp;
    cp.construction = construction;
    cp.parameters = parameters;
    cp.vertices.resize(pool.pts.size());
    for (size_t i = 0; i < pool.pts.size(); ++i) {
        cp.vertices[i].pos = pool.pts[i];
        cp.vertices[i].at_clip = at_clip[i];
        cp.vertices[i].rule = at_clip[i] ? VertexRule::none() : VertexRule::interior();
    }
    std::vector<std::vector<std::string>> names(pool.pts.size());
    for (const auto& [p, label] : labels_) {
        int i = pool.find(p);
        if (i >= 0) names[i].push_back(label);
    }
    for (size_t i = 0; i < names.size(); ++i) {
        auto& v = names[i];
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        std::string joined;
        for (const auto& nm : v) joined += (joined.empty() ? "" : "=") + nm;
        cp.vertices[i].label = joined;
    }
    for (const auto& [p, rule] : rules_) {
        int i = pool.find(p);
        if (i >= 0) cp.vertices[i].rule = rule;
    }
    for (const auto& f : fins) cp.edges.push_back({f.u, f.v, f.kind, f.label});
    return cp;
}

}  // namespace origon
