#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sskm/generate.hpp"
#include "sskm/instance.hpp"
#include "sskm/lloyd.hpp"
#include "sskm/pipeline.hpp"

namespace sskm {

struct GeneratorSpec {
    std::string kind;  // gaussian-mixture | uniform-box | path | counterexample-5pt
    GaussianMixtureSpec gm;
    int n = 100;        // uniform-box / path
    int dim = 2;
    double box = 10.0;
    double D = 1000.0;  // counterexample-5pt
};

Instance build_generated(const GeneratorSpec& spec, std::uint64_t seed,
                         MetricMode mode);

struct RunConfig {
    std::string input_path;  // exactly one of input_path / generator
    std::string format = "points";
    std::optional<GeneratorSpec> generator;
    int k = 1;
    std::string mode = "kmedian";  // kmedian | kmeans-init
    MetricMode metric = MetricMode::Euclidean;
    double alpha = 4.0;
    double beta = 0.5;
    std::uint64_t seed = 0;
    std::string solver = "local-search";  // local-search | brute-force
    int lloyd_max_iters = 100;
    // Oracle comparison is attempted when the brute-force subset count stays
    // under this cap; 0 disables it.
    long long oracle_cap = 200'000;
};

struct BenchResult {
    PipelineReport report;
    double time_ms = 0.0;
    std::optional<double> oracle_cost;

    // kmeans-init mode only.
    int lloyd_iterations = 0;
    double kmeans_init_cost = 0.0;   // before Lloyd
    double kmeans_final_cost = 0.0;  // after Lloyd
    double random_init_final_cost = 0.0;
    double farthest_init_final_cost = 0.0;
};

Instance build_instance(const RunConfig& config);

BenchResult run_bench(const Instance& inst, const RunConfig& config);

}  // namespace sskm
