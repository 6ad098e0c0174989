#pragma once

#include <string>
#include <vector>

#include "origon/cp.hpp"
#include "origon/params.hpp"

namespace origon {

// Per-vertex flat-foldability result. `value` is the angle-sector sum the
// vertex rule prescribes (alternating Kawasaki sum for interior vertices,
// signed boundary-walk sum for boundary vertices), `expected` its target.
struct VertexCheck {
    int vertex = -1;
    std::string label;
    std::string kind;        // "interior", "boundary", "odd-degree", "bad-chain"
    int degree = 0;
    double value = 0.0;
    double expected = 0.0;
    bool pass = false;
};

struct FoldabilityReport {
    int crossings = 0;       // proper interior crossings between crease segments
    std::vector<VertexCheck> checks;
    double worst_err = 0.0;  // max |value - expected| over passing kinds
    bool pass = false;

    int checked() const { return static_cast<int>(checks.size()); }
};

// Count proper interior crossings between crease segments (edges sharing a
// vertex are skipped). A planar pattern has zero.
int planarity_crossings(const CreasePattern& cp);

// Kawasaki-style local flatness per vertex, honouring each vertex's rule:
//   None      skipped (pattern boundary artifacts, designated apex vertices)
//   Interior  full alternating sector sum must vanish (and degree be even)
//   Boundary  walk the arc between the rule's two chain directions that
//             contains the anchor; alternate sector signs with the anchor's
//             sector positive; |sum| must equal the rule's expected angle.
// Vertices of degree <= 2 are skipped. Also counts planar crossings.
FoldabilityReport kawasaki_check(const CreasePattern& cp, const Tolerance& tol = {});

}  // namespace origon
