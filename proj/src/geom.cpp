#include "origon/geom.hpp"

namespace origon {

std::optional<LineHit> intersect_lines(Point2 p1, Point2 d1, Point2 p2, Point2 d2) {
    double den = cross(d1, d2);
    // Cutoff on the raw cross product; callers pass direction vectors of
    // order-1 magnitude, so this rejects only truly degenerate pairs.
    if (std::abs(den) < 1e-14) return std::nullopt;
    Point2 w = p2 - p1;
    double t = cross(w, d2) / den;
    double s = cross(w, d1) / den;
    return LineHit{p1 + d1 * t, t, s};
}

std::optional<Point2> intersect(const Ray2& a, const Ray2& b, double eps) {
    auto hit = intersect_lines(a.origin, a.dir, b.origin, b.dir);
    if (!hit) return std::nullopt;
    if (hit->t < -eps || hit->s < -eps) return std::nullopt;
    return hit->point;
}

Point2 circumcenter(Point2 p, Point2 q, Point2 r) {
    double dd = 2.0 * (p.x * (q.y - r.y) + q.x * (r.y - p.y) + r.x * (p.y - q.y));
    // Scale-aware collinearity guard: dd is 4x the signed triangle area.
    double scale = dist(p, q) * dist(q, r);
    if (std::abs(dd) < 1e-13 * std::max(1.0, scale))
        throw std::invalid_argument("circumcenter: collinear points");
    double p2 = dot(p, p), q2 = dot(q, q), r2 = dot(r, r);
    double ux = (p2 * (q.y - r.y) + q2 * (r.y - p.y) + r2 * (p.y - q.y)) / dd;
    double uy = (p2 * (r.x - q.x) + q2 * (p.x - r.x) + r2 * (q.x - p.x)) / dd;
    return {ux, uy};
}

Point2 reflect_point(Point2 p, Point2 a, Point2 d) {
    Point2 u = normalize(d);
    Point2 w = p - a;
    Point2 foot = a + u * dot(w, u);
    return foot * 2.0 - p;
}

Point2 reflect_dir(Point2 v, Point2 d) {
    Point2 u = normalize(d);
    return u * (2.0 * dot(v, u)) - v;
}

}  // namespace origon
