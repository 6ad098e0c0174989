#include "origon/fold_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "json.hpp"

namespace origon {

namespace {

using nlohmann::json;

constexpr double kQuantum = 1e-9;

struct CanonicalCp {
    std::vector<CpVertex> vertices;
    std::vector<CpEdge> edges;
};

int kind_rank(EdgeKind k) {
    switch (k) {
        case EdgeKind::Mountain: return 0;
        case EdgeKind::Valley: return 1;
        default: return 2;
    }
}

// Reorders vertices by quantized coordinates and edges by reindexed endpoint
// pairs. Distinct vertices sit at least CpBuilder::kMergeEps apart, far above
// the quantum, so the ordering is stable against rounding noise.
CanonicalCp canonicalize(const CreasePattern& cp) {
    size_t nv = cp.vertices.size();
    std::vector<size_t> order(nv);
    for (size_t i = 0; i < nv; ++i) order[i] = i;
    auto key = [&](size_t i) {
        const Point2& p = cp.vertices[i].pos;
        return std::make_pair(std::llround(p.x / kQuantum), std::llround(p.y / kQuantum));
    };
    std::sort(order.begin(), order.end(),
              [&](size_t i, size_t j) { return key(i) < key(j); });
    std::vector<int> perm(nv);
    CanonicalCp out;
    out.vertices.reserve(nv);
    for (size_t rank = 0; rank < nv; ++rank) {
        perm[order[rank]] = static_cast<int>(rank);
        out.vertices.push_back(cp.vertices[order[rank]]);
    }
    out.edges.reserve(cp.edges.size());
    for (const CpEdge& e : cp.edges) {
        CpEdge ne = e;
        ne.u = perm[e.u];
        ne.v = perm[e.v];
        if (ne.u > ne.v) std::swap(ne.u, ne.v);
        out.edges.push_back(ne);
    }
    std::sort(out.edges.begin(), out.edges.end(), [](const CpEdge& a, const CpEdge& b) {
        return std::make_tuple(a.u, a.v, kind_rank(a.kind)) <
               std::make_tuple(b.u, b.v, kind_rank(b.kind));
    });
    return out;
}

const char* assignment_of(EdgeKind k) {
    switch (k) {
        case EdgeKind::Mountain: return "M";
        case EdgeKind::Valley: return "V";
        default: return "F";
    }
}

EdgeKind kind_of(const std::string& assignment) {
    if (assignment == "M") return EdgeKind::Mountain;
    if (assignment == "V") return EdgeKind::Valley;
    return EdgeKind::Flat;
}

json rule_to_json(const VertexRule& r) {
    switch (r.kind) {
        case VertexRule::Kind::None: return json("none");
        case VertexRule::Kind::Interior: return json("interior");
        default:
            return json{{"anchor", {r.anchor.x, r.anchor.y}},
                        {"chain_a", {r.chain_a.x, r.chain_a.y}},
                        {"chain_b", {r.chain_b.x, r.chain_b.y}},
                        {"expected", r.expected}};
    }
}

VertexRule rule_from_json(const json& j) {
    if (j.is_string()) {
        if (j == "none") return VertexRule::none();
        if (j == "interior") return VertexRule::interior();
        throw std::runtime_error("unknown vertex rule: " + j.get<std::string>());
    }
    Point2 a{j.at("chain_a")[0].get<double>(), j.at("chain_a")[1].get<double>()};
    Point2 b{j.at("chain_b")[0].get<double>(), j.at("chain_b")[1].get<double>()};
    Point2 anchor{j.at("anchor")[0].get<double>(), j.at("anchor")[1].get<double>()};
    return VertexRule::boundary(a, b, anchor, j.at("expected").get<double>());
}

}  // namespace

std::string to_fold(const CreasePattern& cp) {
    CanonicalCp c = canonicalize(cp);
    json j;
    j["file_spec"] = 1.1;
    j["file_creator"] = "origon";
    j["file_classes"] = json::array({"singleModel"});
    j["frame_classes"] = json::array({"creasePattern"});
    json coords = json::array();
    json vlabels = json::array();
    json vrules = json::array();
    json vclip = json::array();
    for (const CpVertex& v : c.vertices) {
        coords.push_back({v.pos.x, v.pos.y});
        vlabels.push_back(v.label);
        vrules.push_back(rule_to_json(v.rule));
        vclip.push_back(v.at_clip);
    }
    json ev = json::array();
    json ea = json::array();
    json elabels = json::array();
    for (const CpEdge& e : c.edges) {
        ev.push_back({e.u, e.v});
        ea.push_back(assignment_of(e.kind));
        elabels.push_back(e.label);
    }
    j["vertices_coords"] = coords;
    j["edges_vertices"] = ev;
    j["edges_assignment"] = ea;
    j["origon:construction"] = cp.construction;
    j["origon:parameters"] = json(cp.parameters);
    j["origon:vertices_label"] = vlabels;
    j["origon:vertices_rule"] = vrules;
    j["origon:vertices_at_clip"] = vclip;
    j["origon:edges_label"] = elabels;
    return j.dump(2) + "\n";
}

CreasePattern from_fold(const std::string& text) {
    json j = json::parse(text);
    CreasePattern cp;
    const json& coords = j.at("vertices_coords");
    for (const json& p : coords) {
        CpVertex v;
        v.pos = {p.at(0).get<double>(), p.at(1).get<double>()};
        cp.vertices.push_back(v);
    }
    const json& ev = j.at("edges_vertices");
    const json& ea = j.at("edges_assignment");
    if (ea.size() != ev.size())
        throw std::runtime_error("edges_assignment size does not match edges_vertices");
    int nv = static_cast<int>(cp.vertices.size());
    for (size_t i = 0; i < ev.size(); ++i) {
        CpEdge e;
        e.u = ev[i].at(0).get<int>();
        e.v = ev[i].at(1).get<int>();
        if (e.u < 0 || e.u >= nv || e.v < 0 || e.v >= nv)
            throw std::runtime_error("edge endpoint index out of range");
        e.kind = kind_of(ea[i].get<std::string>());
        cp.edges.push_back(e);
    }
    if (j.contains("origon:vertices_rule")) {
        cp.construction = j.value("origon:construction", std::string("unknown"));
        if (j.contains("origon:parameters"))
            for (auto it = j["origon:parameters"].begin(); it != j["origon:parameters"].end(); ++it)
                cp.parameters[it.key()] = it.value().get<double>();
        const json& vr = j["origon:vertices_rule"];
        const json& vl = j["origon:vertices_label"];
        const json& vc = j["origon:vertices_at_clip"];
        if (static_cast<int>(vr.size()) != nv || static_cast<int>(vl.size()) != nv ||
            static_cast<int>(vc.size()) != nv)
            throw std::runtime_error("vertex metadata size does not match vertices_coords");
        for (int i = 0; i < nv; ++i) {
            cp.vertices[i].rule = rule_from_json(vr[i]);
            cp.vertices[i].label = vl[i].get<std::string>();
            cp.vertices[i].at_clip = vc[i].get<bool>();
        }
        if (j.contains("origon:edges_label")) {
            const json& el = j["origon:edges_label"];
            if (el.size() != cp.edges.size())
                throw std::runtime_error("edge labels size does not match edges_vertices");
            for (size_t i = 0; i < el.size(); ++i)
                cp.edges[i].label = el[i].get<std::string>();
        }
    } else {
        // Foreign file: vertices on the coordinate bounding box are treated as
        // sheet-boundary points and skipped; everything else must satisfy the
        // interior flat-foldability condition.
        cp.construction = "foreign";
        if (nv > 0) {
            double xmin = cp.vertices[0].pos.x, xmax = xmin;
            double ymin = cp.vertices[0].pos.y, ymax = ymin;
            for (const CpVertex& v : cp.vertices) {
                xmin = std::min(xmin, v.pos.x);
                xmax = std::max(xmax, v.pos.x);
                ymin = std::min(ymin, v.pos.y);
                ymax = std::max(ymax, v.pos.y);
            }
            double span = std::max(xmax - xmin, ymax - ymin);
            double eps = 1e-9 * std::max(1.0, span);
            for (CpVertex& v : cp.vertices) {
                bool on_box = std::abs(v.pos.x - xmin) < eps || std::abs(v.pos.x - xmax) < eps ||
                              std::abs(v.pos.y - ymin) < eps || std::abs(v.pos.y - ymax) < eps;
                v.rule = on_box ? VertexRule::none() : VertexRule::interior();
                v.at_clip = on_box;
            }
        }
    }
    return cp;
}

bool cp_equivalent(const CreasePattern& a, const CreasePattern& b, double eps) {
    CanonicalCp ca = canonicalize(a);
    CanonicalCp cb = canonicalize(b);
    if (ca.vertices.size() != cb.vertices.size() || ca.edges.size() != cb.edges.size())
        return false;
    for (size_t i = 0; i < ca.vertices.size(); ++i)
        if (dist(ca.vertices[i].pos, cb.vertices[i].pos) > eps) return false;
    for (size_t i = 0; i < ca.edges.size(); ++i) {
        const CpEdge& ea = ca.edges[i];
        const CpEdge& eb = cb.edges[i];
        if (ea.u != eb.u || ea.v != eb.v || ea.kind != eb.kind) return false;
    }
    return true;
}

}  // namespace origon
