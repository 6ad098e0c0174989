#pragma once
// Shared helpers for the test suites: canonical example parameter sets and
// crease-pattern lookup utilities.

#include <cmath>
#include <optional>
#include <sstream>
#include <string>

#include "origon/cp.hpp"
#include "origon/params.hpp"

namespace tu {

using namespace origon;

inline bool almost_equal(double a, double b, double eps = 1e-9) {
    return std::abs(a - b) <= eps;
}

inline bool pt_close(Point2 p, Point2 q, double eps = 1e-9) { return dist(p, q) <= eps; }

// alpha=beta_l=beta_r=90: the cube gadget, gamma=90
inline GadgetParams cube_params() { return {PI / 2, PI / 2, PI / 2, 0.0, 0.0, 1.0}; }
// alpha=90, beta_l=45, beta_r=120: the worked division example, gamma=105
inline GadgetParams remark_params() {
    return {90 * DEG, 45 * DEG, 120 * DEG, 0.0, 0.0, 1.0};
}
inline GadgetParams gen_params() { return {75 * DEG, 80 * DEG, 95 * DEG, 0.0, 0.0, 1.0}; }
inline GadgetParams delta_params() {
    return {80 * DEG, 70 * DEG, 100 * DEG, 10 * DEG, 15 * DEG, 1.0};
}
inline GadgetParams delta_r_params() {
    return {80 * DEG, 70 * DEG, 100 * DEG, 0.0, 15 * DEG, 1.0};
}

// Left-critical opening for the cube gadget: phi_l = 2 zeta_l = 2 atan(1/2)
inline double cube_phi_crit() { return 2.0 * std::atan(0.5); }

// Vertex labels at merged points are joined with '='; match a single token.
inline bool has_label_token(const std::string& label, const std::string& token) {
    std::stringstream ss(label);
    std::string part;
    while (std::getline(ss, part, '='))
        if (part == token) return true;
    return false;
}

inline int vertex_with_label(const CreasePattern& cp, const std::string& token) {
    for (size_t i = 0; i < cp.vertices.size(); ++i)
        if (has_label_token(cp.vertices[i].label, token)) return static_cast<int>(i);
    return -1;
}

inline int vertex_near(const CreasePattern& cp, Point2 p, double eps = 1e-7) {
    for (size_t i = 0; i < cp.vertices.size(); ++i)
        if (dist(cp.vertices[i].pos, p) <= eps) return static_cast<int>(i);
    return -1;
}

// Kind of the crease leaving p toward q (robust against intermediate split
// vertices along the emitted segment).
inline std::optional<EdgeKind> kind_along(const CreasePattern& cp, Point2 p, Point2 q) {
    int u = vertex_near(cp, p);
    if (u < 0) return std::nullopt;
    Point2 seg = q - p;
    double len = norm(seg);
    for (const CpEdge& e : cp.edges) {
        int o = -1;
        if (e.u == u) o = e.v;
        else if (e.v == u) o = e.u;
        if (o < 0) continue;
        Point2 w = cp.vertices[o].pos - p;
        if (std::abs(cross(w, seg)) > 1e-7 * len) continue;
        if (dot(w, seg) <= 0.0) continue;
        if (norm(w) > len + 1e-7) continue;
        return e.kind;
    }
    return std::nullopt;
}

inline int count_kind(const CreasePattern& cp, EdgeKind k) {
    int c = 0;
    for (const CpEdge& e : cp.edges)
        if (e.kind == k) ++c;
    return c;
}

inline int degree_of(const CreasePattern& cp, int v) {
    int c = 0;
    for (const CpEdge& e : cp.edges)
        if (e.u == v || e.v == v) ++c;
    return c;
}

}  // namespace tu
