#pragma once
// ===== Crease pattern container =====
//
// A crease pattern is a straight-line planar graph. Rays (creases running to
// the flat outer region) are clipped to a bounding box inflated around the
// construction points; the clip endpoints are marked so checkers can ignore
// them. Each vertex carries a foldability rule:
//   None      no local condition applies (apex, clip endpoints, chain ends),
//   Interior  full alternating angle sum must vanish,
//   Boundary  the folded region ends here; the alternating sum over the arc
//             between the two given chain directions, signed + at the sector
//             containing the anchor direction, must equal `expected`
//             (0 at hem vertices, alpha at tongue-tip vertices).

#include <map>
#include <string>
#include <vector>

#include "origon/geom.hpp"

namespace origon {

enum class EdgeKind { Mountain, Valley, Flat };

struct VertexRule {
    enum class Kind { None, Interior, Boundary };
    Kind kind = Kind::Interior;
    Point2 chain_a{};    // boundary-adjacent crease direction (unit, from vertex)
    Point2 chain_b{};
    Point2 anchor{};     // strictly inside the positive arc
    double expected = 0.0;

    static VertexRule none() { return {Kind::None, {}, {}, {}, 0.0}; }
    static VertexRule interior() { return {Kind::Interior, {}, {}, {}, 0.0}; }
    static VertexRule boundary(Point2 a, Point2 b, Point2 anchor, double expected) {
        return {Kind::Boundary, a, b, anchor, expected};
    }
};

struct CpVertex {
    Point2 pos{};
    std::string label;
    VertexRule rule = VertexRule::interior();
    bool at_clip = false;
};

struct CpEdge {
    int u = -1;
    int v = -1;
    EdgeKind kind = EdgeKind::Mountain;
    std::string label;
};

struct CreasePattern {
    std::string construction;                   // e.g. "conventional", "improved-v1"
    std::map<std::string, double> parameters;   // alpha, beta_l, ... (radians)
    std::vector<CpVertex> vertices;
    std::vector<CpEdge> edges;
};

// Accumulates raw segments/rays, then dedupes vertices, splits edges at
// on-edge vertices, drops zero-length leftovers and duplicate edges, and
// attaches vertex rules by position.
class CpBuilder {
  public:
    // Merge radius for coincident construction points (critical merges land
    // within ~1e-12 of each other; distinct points in the supported parameter
    // ranges stay far above this).
    static constexpr double kMergeEps = 1e-7;

    void segment(Point2 p, Point2 q, EdgeKind kind, const std::string& label = {});
    void ray(Point2 origin, Point2 dir, EdgeKind kind, const std::string& label = {});

    // Vertex annotations, matched by position at build() time.
    void label_point(Point2 p, const std::string& label);
    void rule_at(Point2 p, const VertexRule& rule);

    // Clip box inflation factor around the bounding box of all segment
    // endpoints and ray origins (rays are cut where they leave the box).
    void set_clip_inflation(double f) { clip_inflation_ = f; }

    CreasePattern build(const std::string& construction,
                        const std::map<std::string, double>& parameters) const;

  private:
    struct RawSeg {
        Point2 p, q;
        EdgeKind kind;
        std::string label;
        bool q_is_clip;
    };
    struct RawRay {
        Point2 origin, dir;
        EdgeKind kind;
        std::string label;
    };
    std::vector<RawSeg> segs_;
    std::vector<RawRay> rays_;
    std::vector<std::pair<Point2, std::string>> labels_;
    std::vector<std::pair<Point2, VertexRule>> rules_;
    double clip_inflation_ = 0.5;
};

}  // namespace origon
