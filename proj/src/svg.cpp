#include "strongmatch/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace strongmatch {

namespace {

struct Bounds {
    double xlo = 0, xhi = 1, ylo = 0, yhi = 1;

    void grow(double x, double y) {
        xlo = std::min(xlo, x);
        xhi = std::max(xhi, x);
        ylo = std::min(ylo, y);
        yhi = std::max(yhi, y);
    }
};

std::string num(double v) {
    std::ostringstream ss;
    ss.precision(6);
    ss << v;
    return ss.str();
}

}  // namespace

std::string render_svg(const std::vector<Point>& pts, const StrongMatching<double>* matching) {
    Bounds b;
    bool first = true;
    auto grow = [&](double x, double y) {
        if (first) {
            b = {x, x, y, y};
            first = false;
        } else {
            b.grow(x, y);
        }
    };
    for (const auto& p : pts) grow(p.x, p.y);
    if (matching) {
        for (const auto& pr : matching->pairs) {
            const auto& h = pr.rep;
            switch (h.kind) {
                case ShapeKind::Disk:
                    grow(h.center.x - h.radius_double(), h.center.y - h.radius_double());
                    grow(h.center.x + h.radius_double(), h.center.y + h.radius_double());
                    break;
                case ShapeKind::TriDown:
                case ShapeKind::TriUp:
                    for (const auto& v : tri_vertices(h)) grow(v.x, v.y);
                    break;
                case ShapeKind::Square:
                    grow(h.x0, h.y0);
                    grow(h.x0 + h.side, h.y0 + h.side);
                    break;
            }
        }
    }
    if (first) grow(0, 0), grow(1, 1);

    double w = std::max(b.xhi - b.xlo, 1e-9), hgt = std::max(b.yhi - b.ylo, 1e-9);
    double margin = 0.05 * std::max(w, hgt);
    double x0 = b.xlo - margin, y0 = b.ylo - margin;
    double vw = w + 2 * margin, vh = hgt + 2 * margin;
    // flip y: svg-y = (ymax + margin) - y
    auto fy = [&](double y) { return (b.yhi + margin) - y; };
    double px = vw / 600.0;  // stroke/radius unit so the figure scales nicely

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(x0) << ' ' << num(0) << ' '
        << num(vw) << ' ' << num(vh) << "\" width=\"600\">\n";
    (void)y0;

    if (matching) {
        for (const auto& pr : matching->pairs) {
            const auto& h = pr.rep;
            svg << "  ";
            switch (h.kind) {
                case ShapeKind::Disk:
                    svg << "<circle cx=\"" << num(h.center.x) << "\" cy=\"" << num(fy(h.center.y))
                        << "\" r=\"" << num(h.radius_double()) << '"';
                    break;
                case ShapeKind::TriDown:
                case ShapeKind::TriUp: {
                    auto vs = tri_vertices(h);
                    svg << "<polygon points=\"";
                    for (std::size_t k = 0; k < vs.size(); ++k)
                        svg << (k ? " " : "") << num(vs[k].x) << ',' << num(fy(vs[k].y));
                    svg << '"';
                    break;
                }
                case ShapeKind::Square:
                    svg << "<rect x=\"" << num(h.x0) << "\" y=\"" << num(fy(h.y0 + h.side))
                        << "\" width=\"" << num(h.side) << "\" height=\"" << num(h.side) << '"';
                    break;
            }
            svg << " fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"" << num(1.2 * px) << "\"/>\n";
        }
        for (const auto& pr : matching->pairs) {
            const auto &p = pts.at(pr.i), &q = pts.at(pr.j);
            svg << "  <line x1=\"" << num(p.x) << "\" y1=\"" << num(fy(p.y)) << "\" x2=\""
                << num(q.x) << "\" y2=\"" << num(fy(q.y)) << "\" stroke=\"#d62728\" stroke-width=\""
                << num(1.5 * px) << "\"/>\n";
        }
    }
    for (const auto& p : pts)
        svg << "  <circle cx=\"" << num(p.x) << "\" cy=\"" << num(fy(p.y)) << "\" r=\""
            << num(2.0 * px) << "\" fill=\"#000\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace strongmatch
