#include "strongmatch/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace strongmatch {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string points_to_string(const std::vector<Point>& pts) {
    std::string out;
    for (const auto& p : pts) {
        out += format_double(p.x);
        out += ' ';
        out += format_double(p.y);
        out += '\n';
    }
    return out;
}

namespace {

// strip comments/whitespace; returns false for blank lines
bool significant(const std::string& line, std::string& body) {
    auto hash = line.find('#');
    body = (hash == std::string::npos) ? line : line.substr(0, hash);
    return body.find_first_not_of(" \t\r") != std::string::npos;
}

double parse_num(std::istringstream& in, int line_no, const char* what) {
    double v;
    if (!(in >> v)) throw ParseError(std::string("expected ") + what, line_no);
    return v;
}

}  // namespace

std::vector<Point> parse_points(const std::string& text) {
    std::vector<Point> pts;
    std::istringstream in(text);
    std::string line, body;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!significant(line, body)) continue;
        std::istringstream ls(body);
        Point p;
        p.x = parse_num(ls, line_no, "x coordinate");
        p.y = parse_num(ls, line_no, "y coordinate");
        std::string extra;
        if (ls >> extra) throw ParseError("trailing tokens after point", line_no);
        pts.push_back(p);
    }
    return pts;
}

std::vector<Pt<ExactReal>> parse_points_exact(const std::string& text) {
    std::vector<Pt<ExactReal>> pts;
    std::istringstream in(text);
    std::string line, body;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!significant(line, body)) continue;
        std::istringstream ls(body);
        std::string xs, ys, extra;
        if (!(ls >> xs >> ys)) throw ParseError("expected two coordinates", line_no);
        if (ls >> extra) throw ParseError("trailing tokens after point", line_no);
        try {
            pts.push_back({ExactReal(rational_from_decimal(xs)), ExactReal(rational_from_decimal(ys))});
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    return pts;
}

std::string matching_to_string(const StrongMatching<double>& m) {
    std::string out = "# mode ";
    out += to_string(m.mode);
    out += " shape ";
    out += to_string(m.shape);
    out += '\n';
    for (const auto& pr : m.pairs) {
        out += std::to_string(pr.i);
        out += ' ';
        out += std::to_string(pr.j);
        switch (pr.rep.kind) {
            case ShapeKind::Disk:
                out += " disk ";
                out += format_double(pr.rep.center.x);
                out += ' ';
                out += format_double(pr.rep.center.y);
                out += ' ';
                out += format_double(pr.rep.radius_double());
                break;
            case ShapeKind::TriDown:
            case ShapeKind::TriUp:
                out += " tri ";
                out += format_double(pr.rep.a);
                out += ' ';
                out += format_double(pr.rep.b);
                out += ' ';
                out += format_double(pr.rep.c);
                out += (pr.rep.kind == ShapeKind::TriDown) ? " down" : " up";
                break;
            case ShapeKind::Square:
                out += " square ";
                out += format_double(pr.rep.x0);
                out += ' ';
                out += format_double(pr.rep.y0);
                out += ' ';
                out += format_double(pr.rep.side);
                break;
        }
        out += '\n';
    }
    return out;
}

StrongMatching<double> parse_matching(const std::string& text) {
    StrongMatching<double> m;
    m.mode = DisjointMode::Strict;
    std::istringstream in(text);
    std::string line, body;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!header_seen && line.rfind("# mode ", 0) == 0) {
            header_seen = true;
            std::istringstream hs(line.substr(7));
            std::string mode, kw, shape;
            hs >> mode >> kw >> shape;
            if (mode == "interior") m.mode = DisjointMode::Interior;
            for (MatchShape s : {MatchShape::Disk, MatchShape::TriDown, MatchShape::TriUp,
                                 MatchShape::Theta6, MatchShape::Square})
                if (shape == to_string(s)) m.shape = s;
            continue;
        }
        if (!significant(line, body)) continue;
        std::istringstream ls(body);
        MatchedPair<double> pr;
        std::string kind;
        if (!(ls >> pr.i >> pr.j >> kind)) throw ParseError("expected 'i j kind ...'", line_no);
        if (kind == "disk") {
            double cx = parse_num(ls, line_no, "cx");
            double cy = parse_num(ls, line_no, "cy");
            double r = parse_num(ls, line_no, "r");
            pr.rep = Homothet<double>::disk({cx, cy}, r * r);
        } else if (kind == "tri") {
            double a = parse_num(ls, line_no, "A");
            double b = parse_num(ls, line_no, "B");
            double c = parse_num(ls, line_no, "C");
            std::string orient;
            if (!(ls >> orient) || (orient != "down" && orient != "up"))
                throw ParseError("expected triangle orientation 'down' or 'up'", line_no);
            pr.rep = (orient == "down") ? Homothet<double>::tri_down(a, b, c)
                                        : Homothet<double>::tri_up(a, b, c);
        } else if (kind == "square") {
            double x0 = parse_num(ls, line_no, "x0");
            double y0 = parse_num(ls, line_no, "y0");
            double s = parse_num(ls, line_no, "s");
            pr.rep = Homothet<double>::square(x0, y0, s);
        } else {
            throw ParseError("unknown shape kind '" + kind + "'", line_no);
        }
        m.pairs.push_back(pr);
    }
    return m;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace strongmatch
