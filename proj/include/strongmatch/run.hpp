#pragma once

// Instance drivers shared by the CLI and the acceptance suite: run one
// engine on one point set, verify the output, collect diagnostics, and
// fan batches out across worker threads (merged in seed order).

#include <cstdint>
#include <string>
#include <vector>

#include "strongmatch/matching.hpp"
#include "strongmatch/oracle.hpp"

namespace strongmatch {

struct RunReport {
    std::string instance;
    std::uint64_t seed = 0;
    int n = 0;
    MatchShape shape{MatchShape::Disk};
    Engine engine{Engine::Greedy};
    bool exact = false;
    int size = 0;
    int required = 0;       // bound the engine must meet on this instance
    int inf_t = 0;          // influence number of the diagnostic MST
    int max_minimal_degree = 0;
    bool conjecture_violated = false;  // Inf(T) > max minimal-edge degree
    bool pass = false;                 // certificate verdict
    bool bound_met = false;
    int boundary_contacts = 0;
    double wall_ms = 0;  // informational; never serialized (reports stay byte-stable)
};

// single JSON line, stable key order, no volatile fields
std::string report_to_json(const RunReport& r);

struct InstanceResult {
    StrongMatching<double> matching;
    RunReport report;
};

bool engine_supports(MatchShape shape, Engine engine);

InstanceResult run_instance(const std::vector<Point>& pts, MatchShape shape, Engine engine,
                            const std::string& instance_id, std::uint64_t seed);
InstanceResult run_instance_exact(const std::vector<Pt<ExactReal>>& pts, MatchShape shape,
                                  Engine engine, const std::string& instance_id,
                                  std::uint64_t seed);

StrongMatching<double> to_double_matching(const StrongMatching<ExactReal>& m);

struct BatchAggregate {
    int count = 0;
    int bound_violations = 0;
    int verify_failures = 0;
    int conjecture_violations = 0;
    int max_inf_t = 0;
    int min_size = 0;
    double mean_size = 0;
    double mean_required = 0;
    std::vector<RunReport> reports;  // in seed order
};

BatchAggregate run_batch(int count, int n_lo, int n_hi, MatchShape shape, Engine engine,
                         std::uint64_t seed0, int threads);

std::string aggregate_to_json(const BatchAggregate& agg);

}  // namespace strongmatch
