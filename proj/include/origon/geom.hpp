#pragma once
// ===== 2D geometry kernel =====
// Plain value types and the handful of constructions the gadget builders
// need: line/ray intersection, circumcenter, reflections, angle sectors.

#include <cmath>
#include <optional>
#include <stdexcept>

namespace origon {

inline constexpr double TAU = 6.283185307179586476925286766559;
inline constexpr double PI = 3.1415926535897932384626433832795;
inline constexpr double DEG = PI / 180.0;

struct Tolerance {
    double angle_eps = 1e-9;
    double length_eps = 1e-9;
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 p, Point2 q) { return {p.x + q.x, p.y + q.y}; }
inline Point2 operator-(Point2 p, Point2 q) { return {p.x - q.x, p.y - q.y}; }
inline Point2 operator*(Point2 p, double s) { return {p.x * s, p.y * s}; }
inline Point2 operator*(double s, Point2 p) { return {p.x * s, p.y * s}; }

inline double dot(Point2 p, Point2 q) { return p.x * q.x + p.y * q.y; }
inline double cross(Point2 p, Point2 q) { return p.x * q.y - p.y * q.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double dist(Point2 p, Point2 q) { return norm(p - q); }
inline Point2 unit(double theta) { return {std::cos(theta), std::sin(theta)}; }
inline Point2 normalize(Point2 p) {
    double n = norm(p);
    if (n == 0.0) throw std::invalid_argument("normalize: zero vector");
    return {p.x / n, p.y / n};
}
inline Point2 perp(Point2 p) { return {-p.y, p.x}; }
inline double ang(Point2 p) { return std::atan2(p.y, p.x); }

// CCW angle from direction a to direction b, in [0, tau).
inline double sector(double a, double b) {
    double s = std::fmod(b - a, TAU);
    if (s < 0) s += TAU;
    return s;
}

// Wrap an angle difference into (-pi, pi].
inline double wrap_pi(double a) {
    double w = std::fmod(a + PI, TAU);
    if (w < 0) w += TAU;
    w -= PI;
    return w == -PI ? PI : w;
}

// Signed angle from u to v in (-pi, pi].
inline double signed_angle(Point2 u, Point2 v) {
    double a = std::atan2(cross(u, v), dot(u, v));
    return a == -PI ? PI : a;
}

struct Ray2 {
    Point2 origin{};
    Point2 dir{};   // need not be unit length
    Point2 at(double t) const { return origin + dir * t; }
};

struct LineHit {
    Point2 point{};
    double t = 0.0;   // parameter along the first line (in units of its dir)
    double s = 0.0;   // parameter along the second line
};

// Intersection of the infinite lines p1 + t*d1 and p2 + s*d2.
// Returns nullopt for (near-)parallel direction pairs.
std::optional<LineHit> intersect_lines(Point2 p1, Point2 d1, Point2 p2, Point2 d2);

// Ray-ray intersection (both parameters must be >= -eps).
std::optional<Point2> intersect(const Ray2& a, const Ray2& b, double eps = 1e-12);

// Circumcenter of a triangle; throws std::invalid_argument for (near-)collinear input.
Point2 circumcenter(Point2 p, Point2 q, Point2 r);

// Reflect a point across the line through `a` with direction `d`.
Point2 reflect_point(Point2 p, Point2 a, Point2 d);

// Reflect a direction vector across the direction `d`.
Point2 reflect_dir(Point2 v, Point2 d);

}  // namespace origon
