#include "strongmatch/run.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include <json.hpp>

#include "strongmatch/greedy.hpp"
#include "strongmatch/recursive.hpp"
#include "strongmatch/rng.hpp"

namespace strongmatch {

namespace {

ShapeKind single_kind(MatchShape shape) {
    switch (shape) {
        case MatchShape::Disk: return ShapeKind::Disk;
        case MatchShape::TriDown: return ShapeKind::TriDown;
        case MatchShape::TriUp: return ShapeKind::TriUp;
        case MatchShape::Square: return ShapeKind::Square;
        case MatchShape::Theta6: break;
    }
    throw std::invalid_argument("theta6 is not a single-shape family");
}

// diagnostic MST family for a run
ShapeKind diagnostic_kind(MatchShape shape) {
    return shape == MatchShape::Theta6 ? ShapeKind::TriDown : single_kind(shape);
}

Homothet<double> homothet_to_double(const Homothet<ExactReal>& h) {
    auto d = [](const ExactReal& v) { return v.to_double(); };
    switch (h.kind) {
        case ShapeKind::Disk:
            return Homothet<double>::disk({d(h.center.x), d(h.center.y)}, d(h.r2));
        case ShapeKind::TriDown: return Homothet<double>::tri_down(d(h.a), d(h.b), d(h.c));
        case ShapeKind::TriUp: return Homothet<double>::tri_up(d(h.a), d(h.b), d(h.c));
        case ShapeKind::Square: return Homothet<double>::square(d(h.x0), d(h.y0), d(h.side));
    }
    throw std::invalid_argument("bad homothet");
}

template <class S>
InstanceResult run_typed(const std::vector<Pt<S>>& pts, MatchShape shape, Engine engine,
                         const std::string& instance_id, std::uint64_t seed) {
    auto t0 = std::chrono::steady_clock::now();
    InstanceResult out;
    RunReport& r = out.report;
    r.instance = instance_id;
    r.seed = seed;
    r.n = static_cast<int>(pts.size());
    r.shape = shape;
    r.engine = engine;
    r.exact = scalar_traits<S>::exact;

    if (!engine_supports(shape, engine))
        throw std::invalid_argument(std::string("unsupported combination: ") + to_string(shape) +
                                    " with " + to_string(engine));

    StrongMatching<S> matching;
    RecursionStats stats;
    if (engine == Engine::Greedy) {
        auto tree = mst(pts, single_kind(shape));
        matching = strong_match_greedy_on_tree(tree);
        if (!tree.edges.empty()) {
            auto inf = influence_number(tree);
            r.inf_t = inf.value;
            r.max_minimal_degree = max_minimal_edge_degree(tree);
            r.conjecture_violated = r.inf_t > r.max_minimal_degree;
            r.required = std::max(check_bound(r.n, shape, engine),
                                  ceil_div(r.n - 1, r.inf_t));
        }
        auto cert = verify_strong(pts, matching, DisjointMode::Strict);
        r.pass = cert.pass;
        r.boundary_contacts = cert.boundary_contacts;
    } else {
        Homothet<S> container = (shape == MatchShape::Square) ? bounding_square(pts)
                                                              : bounding_tri_up(pts);
        matching = (shape == MatchShape::Square)
                       ? strong_match_square_recursive(pts, container, &stats)
                       : strong_match_theta_recursive(pts, container, &stats);
        r.required = check_bound(r.n, shape, engine);
        auto cert = verify_strong(pts, matching, DisjointMode::Interior,
                                  std::optional<Homothet<S>>(container));
        bool occupancy_ok = exact_occupancy_failures(pts, matching).empty();
        r.pass = cert.pass && occupancy_ok;
        r.boundary_contacts = cert.boundary_contacts;
        if (r.n >= 2) {
            auto tree = mst(pts, diagnostic_kind(shape));
            auto inf = influence_number(tree);
            r.inf_t = inf.value;
            r.max_minimal_degree = max_minimal_edge_degree(tree);
            r.conjecture_violated = r.inf_t > r.max_minimal_degree;
        }
    }
    r.size = matching.size();
    r.bound_met = r.size >= r.required;

    if constexpr (scalar_traits<S>::exact) {
        out.matching = to_double_matching(matching);
    } else {
        out.matching = std::move(matching);
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    return out;
}

}  // namespace

StrongMatching<double> to_double_matching(const StrongMatching<ExactReal>& m) {
    StrongMatching<double> out;
    out.shape = m.shape;
    out.mode = m.mode;
    for (const auto& pr : m.pairs) out.pairs.push_back({pr.i, pr.j, homothet_to_double(pr.rep)});
    return out;
}

bool engine_supports(MatchShape shape, Engine engine) {
    if (engine == Engine::Greedy)
        return shape == MatchShape::Disk || shape == MatchShape::TriDown ||
               shape == MatchShape::TriUp || shape == MatchShape::Square;
    return shape == MatchShape::Theta6 || shape == MatchShape::Square;
}

InstanceResult run_instance(const std::vector<Point>& pts, MatchShape shape, Engine engine,
                            const std::string& instance_id, std::uint64_t seed) {
    return run_typed(pts, shape, engine, instance_id, seed);
}

InstanceResult run_instance_exact(const std::vector<Pt<ExactReal>>& pts, MatchShape shape,
                                  Engine engine, const std::string& instance_id,
                                  std::uint64_t seed) {
    return run_typed(pts, shape, engine, instance_id, seed);
}

std::string report_to_json(const RunReport& r) {
    nlohmann::ordered_json j;
    j["instance"] = r.instance;
    j["seed"] = r.seed;
    j["n"] = r.n;
    j["shape"] = to_string(r.shape);
    j["engine"] = to_string(r.engine);
    j["exact"] = r.exact;
    j["size"] = r.size;
    j["required"] = r.required;
    j["bound_met"] = r.bound_met;
    j["inf_t"] = r.inf_t;
    j["max_minimal_degree"] = r.max_minimal_degree;
    j["conjecture_violated"] = r.conjecture_violated;
    j["pass"] = r.pass;
    j["boundary_contacts"] = r.boundary_contacts;
    return j.dump();
}

BatchAggregate run_batch(int count, int n_lo, int n_hi, MatchShape shape, Engine engine,
                         std::uint64_t seed0, int threads) {
    BatchAggregate agg;
    agg.count = count;
    agg.reports.resize(count);
    if (count == 0) return agg;

    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, count));

    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= count) return;
            std::uint64_t seed = seed0 + static_cast<std::uint64_t>(i);
            DetRng rng(seed);
            int n = rng.uniform_int(n_lo, n_hi);
            auto pts = generate_points(n, seed, gp_mode_of(shape));
            auto res = run_instance(pts, shape, engine, "batch-" + std::to_string(i), seed);
            agg.reports[i] = res.report;
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    double sz = 0, rq = 0;
    agg.min_size = agg.reports[0].size;
    for (const auto& r : agg.reports) {
        agg.bound_violations += !r.bound_met;
        agg.verify_failures += !r.pass;
        agg.conjecture_violations += r.conjecture_violated;
        agg.max_inf_t = std::max(agg.max_inf_t, r.inf_t);
        agg.min_size = std::min(agg.min_size, r.size);
        sz += r.size;
        rq += r.required;
    }
    agg.mean_size = sz / count;
    agg.mean_required = rq / count;
    return agg;
}

std::string aggregate_to_json(const BatchAggregate& agg) {
    nlohmann::ordered_json j;
    j["count"] = agg.count;
    j["bound_violations"] = agg.bound_violations;
    j["verify_failures"] = agg.verify_failures;
    j["conjecture_violations"] = agg.conjecture_violations;
    j["max_inf_t"] = agg.max_inf_t;
    j["min_size"] = agg.min_size;
    j["mean_size"] = agg.mean_size;
    j["mean_required"] = agg.mean_required;
    return j.dump();
}

}  // namespace strongmatch
