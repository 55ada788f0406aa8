// strongmatch command line: generate point sets, run the matching engines,
// verify matchings, render figures, and batch experiments.
//
// Exit codes: 0 success, 1 verification/bound failure, 2 input error.

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "strongmatch/io.hpp"
#include "strongmatch/recursive.hpp"
#include "strongmatch/rng.hpp"
#include "strongmatch/run.hpp"
#include "strongmatch/spanning.hpp"
#include "strongmatch/svg.hpp"

#include <json.hpp>

namespace sm = strongmatch;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;

std::optional<sm::MatchShape> parse_shape(const std::string& s) {
    for (sm::MatchShape v : {sm::MatchShape::Disk, sm::MatchShape::TriDown, sm::MatchShape::TriUp,
                             sm::MatchShape::Theta6, sm::MatchShape::Square})
        if (s == to_string(v)) return v;
    return std::nullopt;
}

void emit(const std::string& path, const std::string& content, bool append = false) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    if (append) {
        auto prev = std::string();
        try {
            prev = sm::read_file(path);
        } catch (...) {
        }
        sm::write_file(path, prev + content);
    } else {
        sm::write_file(path, content);
    }
}

int cmd_gen(int n, std::uint64_t seed, const std::string& shape_s, const std::string& out) {
    auto shape = parse_shape(shape_s);
    if (!shape) {
        std::cerr << "unknown shape: " << shape_s << "\n";
        return kExitInput;
    }
    auto pts = sm::generate_points(n, seed, sm::gp_mode_of(*shape));
    emit(out, sm::points_to_string(pts));
    return 0;
}

int cmd_run(const std::string& points_path, const std::string& shape_s, const std::string& engine_s,
            bool exact, const std::string& out, const std::string& report_path,
            const std::string& svg_path) {
    auto shape = parse_shape(shape_s);
    if (!shape) {
        std::cerr << "unknown shape: " << shape_s << "\n";
        return kExitInput;
    }
    sm::Engine engine = (engine_s == "recursive") ? sm::Engine::Recursive : sm::Engine::Greedy;
    if (engine_s != "greedy" && engine_s != "recursive") {
        std::cerr << "unknown engine: " << engine_s << "\n";
        return kExitInput;
    }
    if (!sm::engine_supports(*shape, engine)) {
        std::cerr << "unsupported combination: " << to_string(*shape) << " with " << engine_s
                  << "\n";
        return kExitInput;
    }
    std::string text = sm::read_file(points_path);
    sm::InstanceResult res;
    std::vector<sm::Point> pts;
    if (exact) {
        auto epts = sm::parse_points_exact(text);
        for (const auto& p : epts) pts.push_back({p.x.to_double(), p.y.to_double()});
        res = sm::run_instance_exact(epts, *shape, engine, points_path, 0);
    } else {
        pts = sm::parse_points(text);
        res = sm::run_instance(pts, *shape, engine, points_path, 0);
    }
    if (!out.empty()) emit(out, sm::matching_to_string(res.matching));
    if (!report_path.empty()) emit(report_path, sm::report_to_json(res.report) + "\n", true);
    if (!svg_path.empty()) emit(svg_path, sm::render_svg(pts, &res.matching));
    std::cerr << "size=" << res.report.size << " required=" << res.report.required
              << " inf_t=" << res.report.inf_t << " pass=" << (res.report.pass ? "yes" : "no")
              << " wall_ms=" << res.report.wall_ms << "\n";
    if (out.empty() && report_path.empty()) std::cout << sm::report_to_json(res.report) << "\n";
    return (res.report.pass && res.report.bound_met) ? 0 : kExitVerify;
}

int cmd_batch(int count, int n_lo, int n_hi, const std::string& shape_s,
              const std::string& engine_s, std::uint64_t seed0, int threads,
              const std::string& report_path) {
    auto shape = parse_shape(shape_s);
    if (!shape) {
        std::cerr << "unknown shape: " << shape_s << "\n";
        return kExitInput;
    }
    sm::Engine engine = (engine_s == "recursive") ? sm::Engine::Recursive : sm::Engine::Greedy;
    if (!sm::engine_supports(*shape, engine)) {
        std::cerr << "unsupported combination\n";
        return kExitInput;
    }
    auto agg = sm::run_batch(count, n_lo, n_hi, *shape, engine, seed0, threads);
    std::string lines;
    for (const auto& r : agg.reports) lines += sm::report_to_json(r) + "\n";
    if (!report_path.empty()) emit(report_path, lines, true);
    std::cout << sm::aggregate_to_json(agg) << "\n";
    return (agg.bound_violations == 0 && agg.verify_failures == 0) ? 0 : kExitVerify;
}

int cmd_verify(const std::string& points_path, const std::string& matching_path,
               const std::string& mode_s, const std::string& container_s) {
    auto pts = sm::parse_points(sm::read_file(points_path));
    auto m = sm::parse_matching(sm::read_file(matching_path));
    for (const auto& pr : m.pairs)
        if (pr.i < 0 || pr.j < 0 || pr.i >= static_cast<int>(pts.size()) ||
            pr.j >= static_cast<int>(pts.size())) {
            std::cerr << "matching references missing point index\n";
            return kExitInput;
        }
    sm::DisjointMode mode =
        (mode_s == "interior" || (mode_s.empty() && m.mode == sm::DisjointMode::Interior))
            ? sm::DisjointMode::Interior
            : sm::DisjointMode::Strict;
    std::optional<sm::Homothet<double>> container;
    if (container_s == "square") container = sm::bounding_square(pts);
    if (container_s == "triangle") container = sm::bounding_tri_up(pts);
    auto cert = sm::verify_strong(pts, m, mode, container);
    nlohmann::ordered_json j;
    j["pass"] = cert.pass;
    j["mode"] = to_string(mode);
    j["boundary_contacts"] = cert.boundary_contacts;
    auto fails = nlohmann::ordered_json::array();
    for (const auto& f : cert.failures) {
        nlohmann::ordered_json jf;
        jf["check"] = f.check;
        jf["indices"] = f.indices;
        fails.push_back(jf);
    }
    j["failures"] = fails;
    std::cout << j.dump() << "\n";
    return cert.pass ? 0 : kExitVerify;
}

int cmd_svg(const std::string& points_path, const std::string& matching_path,
            const std::string& out) {
    auto pts = sm::parse_points(sm::read_file(points_path));
    std::optional<sm::StrongMatching<double>> m;
    if (!matching_path.empty()) {
        m = sm::parse_matching(sm::read_file(matching_path));
        for (const auto& pr : m->pairs)
            if (pr.i < 0 || pr.j < 0 || pr.i >= static_cast<int>(pts.size()) ||
                pr.j >= static_cast<int>(pts.size()))
                throw sm::ParseError("matching references missing point index", 0);
    }
    emit(out, sm::render_svg(pts, m ? &*m : nullptr));
    return 0;
}

int cmd_stats(const std::string& points_path, const std::string& shape_s) {
    auto shape = parse_shape(shape_s);
    if (!shape || *shape == sm::MatchShape::Theta6) {
        std::cerr << "stats needs a single-shape family (disk, tri-down, tri-up, square)\n";
        return kExitInput;
    }
    auto pts = sm::parse_points(sm::read_file(points_path));
    sm::ShapeKind kind = *shape == sm::MatchShape::Disk      ? sm::ShapeKind::Disk
                         : *shape == sm::MatchShape::TriDown ? sm::ShapeKind::TriDown
                         : *shape == sm::MatchShape::TriUp   ? sm::ShapeKind::TriUp
                                                             : sm::ShapeKind::Square;
    auto graph = sm::build_shape_graph(pts, kind);
    auto tree = sm::mst(pts, kind);
    nlohmann::ordered_json j;
    j["n"] = pts.size();
    j["shape"] = to_string(*shape);
    j["graph_edges"] = graph.edges.size();
    j["mst_edges"] = tree.edges.size();
    if (!tree.edges.empty()) {
        auto inf = sm::influence_number(tree);
        j["inf_t"] = inf.value;
        j["inf_argmax"] = {inf.argmax.i, inf.argmax.j};
        j["minimal_edges"] = sm::minimal_edges(tree).size();
        j["max_minimal_degree"] = sm::max_minimal_edge_degree(tree);
        j["conjecture_violated"] = inf.value > sm::max_minimal_edge_degree(tree);
        int mst_in_graph = 0;
        for (const auto& e : tree.edges) mst_in_graph += graph.has_edge(e.i, e.j);
        j["mst_edges_in_graph"] = mst_in_graph;
    }
    std::cout << j.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strong matchings in shape-Delaunay graphs"};
    app.require_subcommand(1);

    std::string shape = "disk", engine = "greedy", points, matching, out, report, svg_out;
    std::string mode, container;
    int n = 10, count = 10, n_lo = 2, n_hi = 100, threads = 0;
    std::uint64_t seed = 1;
    bool exact = false;

    auto* gen = app.add_subcommand("gen", "generate a general-position point file");
    gen->add_option("--n", n, "number of points");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--shape", shape, "shape family for the general-position check");
    gen->add_option("--out", out, "output file ('-' for stdout)");

    auto* run = app.add_subcommand("run", "run an engine on a point file");
    run->add_option("--points", points, "point file")->required();
    run->add_option("--shape", shape, "disk|tri-down|tri-up|theta6|square");
    run->add_option("--engine", engine, "greedy|recursive");
    run->add_flag("--exact", exact, "exact arithmetic mode");
    run->add_option("--out", out, "matching output file");
    run->add_option("--report", report, "append a JSON report line here");
    run->add_option("--svg", svg_out, "also render an SVG");

    auto* batch = app.add_subcommand("batch", "run many seeded instances");
    batch->add_option("--count", count, "number of instances");
    batch->add_option("--n-min", n_lo, "smallest n");
    batch->add_option("--n-max", n_hi, "largest n");
    batch->add_option("--shape", shape, "shape family");
    batch->add_option("--engine", engine, "greedy|recursive");
    batch->add_option("--seed", seed, "base seed (instance i uses seed+i)");
    batch->add_option("--threads", threads, "worker threads (0 = hardware)");
    batch->add_option("--report", report, "append JSON report lines here");

    auto* verify = app.add_subcommand("verify", "verify a matching file");
    verify->add_option("--points", points, "point file")->required();
    verify->add_option("--matching", matching, "matching file")->required();
    verify->add_option("--mode", mode, "strict|interior (default: file header)");
    verify->add_option("--container", container, "square|triangle bounding container check");

    auto* svg = app.add_subcommand("svg", "render points (and a matching) as SVG");
    svg->add_option("--points", points, "point file")->required();
    svg->add_option("--matching", matching, "matching file");
    svg->add_option("--out", out, "output file ('-' for stdout)");

    auto* stats = app.add_subcommand("stats", "graph/MST/influence diagnostics");
    stats->add_option("--points", points, "point file")->required();
    stats->add_option("--shape", shape, "disk|tri-down|tri-up|square");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(n, seed, shape, out);
        if (run->parsed()) return cmd_run(points, shape, engine, exact, out, report, svg_out);
        if (batch->parsed()) return cmd_batch(count, n_lo, n_hi, shape, engine, seed, threads, report);
        if (verify->parsed()) return cmd_verify(points, matching, mode, container);
        if (svg->parsed()) return cmd_svg(points, matching, out);
        if (stats->parsed()) return cmd_stats(points, shape);
    } catch (const sm::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerify;
    }
    return 0;
}
