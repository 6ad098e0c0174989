#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>

#include "origon/fold_io.hpp"

namespace origon {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

std::string to_svg(const CreasePattern& cp) {
    // Flip y so the pattern appears with +y up, matching the construction
    // frame rather than SVG screen coordinates.
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    for (const CpVertex& v : cp.vertices) {
        double x = v.pos.x, y = -v.pos.y;
        if (first) {
            xmin = xmax = x;
            ymin = ymax = y;
            first = false;
        } else {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    double span = std::max({xmax - xmin, ymax - ymin, 1e-6});
    double margin = 0.05 * span;
    double w = xmax - xmin + 2 * margin;
    double h = ymax - ymin + 2 * margin;
    double stroke = 0.006 * span;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(xmin - margin) << " "
       << num(ymin - margin) << " " << num(w) << " " << num(h) << "\" width=\"640\" height=\""
       << num(640.0 * h / w) << "\">\n";
    os << "<rect x=\"" << num(xmin - margin) << "\" y=\"" << num(ymin - margin) << "\" width=\""
       << num(w) << "\" height=\"" << num(h) << "\" fill=\"white\"/>\n";
    struct Style {
        EdgeKind kind;
        const char* open;
    };
    const Style styles[] = {
        {EdgeKind::Mountain, "<g stroke=\"#c62828\" fill=\"none\" stroke-linecap=\"round\""},
        {EdgeKind::Valley, "<g stroke=\"#1565c0\" fill=\"none\" stroke-linecap=\"round\""},
        {EdgeKind::Flat, "<g stroke=\"#9e9e9e\" fill=\"none\" stroke-linecap=\"round\""},
    };
    for (const Style& st : styles) {
        bool any = false;
        for (const CpEdge& e : cp.edges)
            if (e.kind == st.kind) any = true;
        if (!any) continue;
        os << st.open << " stroke-width=\"" << num(stroke) << "\"";
        if (st.kind == EdgeKind::Valley)
            os << " stroke-dasharray=\"" << num(4 * stroke) << " " << num(3 * stroke) << "\"";
        os << ">\n";
        for (const CpEdge& e : cp.edges) {
            if (e.kind != st.kind) continue;
            const Point2& p = cp.vertices[e.u].pos;
            const Point2& q = cp.vertices[e.v].pos;
            os << "<line x1=\"" << num(p.x) << "\" y1=\"" << num(-p.y) << "\" x2=\"" << num(q.x)
               << "\" y2=\"" << num(-q.y) << "\"/>\n";
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace origon
