#include "sskm/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "sskm/blackbox.hpp"
#include "sskm/io.hpp"
#include "sskm/rng.hpp"

namespace sskm {

namespace {

bool has_uniform_weights(const Instance& inst) {
    for (int x = 1; x < inst.n(); ++x)
        if (inst.weight(x) != inst.weight(0)) return false;
    return true;
}

PipelineReport run_pipeline(const Instance& inst, const RunConfig& config) {
    SamplerParams params;
    params.k = config.k;
    params.alpha = config.alpha;
    params.beta = config.beta;
    params.seed = config.seed;

    LocalSearchSolver local_search;
    BruteForceSolver brute;
    const KMedianSolver* solver = &local_search;
    if (config.solver == "brute-force")
        solver = &brute;
    else if (config.solver != "local-search")
        throw ValidationError("unknown solver: " + config.solver);

    return has_uniform_weights(inst)
               ? uniform_kmedian(inst, config.k, params, *solver)
               : weighted_kmedian(inst, config.k, params, *solver);
}

std::optional<double> try_oracle(const Instance& inst, int k, long long cap) {
    if (cap <= 0) return std::nullopt;
    try {
        return brute_force_kmedian(inst, k, cap).second;
    } catch (const OracleTooLargeError&) {
        return std::nullopt;
    }
}

std::vector<double> random_init_centroids(const Instance& inst, int k,
                                          Rng& rng) {
    std::vector<int> pool(inst.n());
    for (int i = 0; i < inst.n(); ++i) pool[i] = i;
    rng.shuffle(pool);
    std::vector<double> centroids;
    for (int i = 0; i < k; ++i) {
        const auto p = inst.point(pool[i]);
        centroids.insert(centroids.end(), p.begin(), p.end());
    }
    return centroids;
}

std::vector<double> farthest_init_centroids(const Instance& inst, int k,
                                            Rng& rng) {
    std::vector<int> chosen = {static_cast<int>(rng.next_below(inst.n()))};
    std::vector<double> best(inst.n(), std::numeric_limits<double>::infinity());
    while (static_cast<int>(chosen.size()) < k) {
        for (int x = 0; x < inst.n(); ++x)
            best[x] = std::min(best[x], inst.distance(x, chosen.back()));
        int far = 0;
        for (int x = 1; x < inst.n(); ++x)
            if (best[x] > best[far]) far = x;
        chosen.push_back(far);
    }
    std::vector<double> centroids;
    for (int c : chosen) {
        const auto p = inst.point(c);
        centroids.insert(centroids.end(), p.begin(), p.end());
    }
    return centroids;
}

}  // namespace

Instance build_generated(const GeneratorSpec& spec, std::uint64_t seed,
                         MetricMode mode) {
    if (spec.kind == "gaussian-mixture") return gen_gaussian_mixture(spec.gm, seed, mode);
    if (spec.kind == "uniform-box") return gen_uniform_box(spec.n, spec.dim, spec.box, seed, mode);
    if (spec.kind == "path") return gen_path(spec.n);
    if (spec.kind == "counterexample-5pt") return gen_counterexample_5pt(spec.D, mode);
    throw ValidationError("unknown generator kind: " + spec.kind);
}

Instance build_instance(const RunConfig& config) {
    const bool have_input = !config.input_path.empty();
    const bool have_gen = config.generator.has_value();
    if (have_input == have_gen)
        throw ValidationError("exactly one of input path / generator required");
    if (have_input) return parse_input(config.input_path, config.format, config.metric);
    return build_generated(*config.generator, config.seed, config.metric);
}

BenchResult run_bench(const Instance& inst, const RunConfig& config) {
    if (config.k < 1) throw ValidationError("k must be >= 1");
    if (config.mode != "kmedian" && config.mode != "kmeans-init")
        throw ValidationError("unknown mode: " + config.mode);

    BenchResult result;
    const auto start = std::chrono::steady_clock::now();

    if (config.mode == "kmedian") {
        result.report = run_pipeline(inst, config);
        result.oracle_cost = try_oracle(inst, config.k, config.oracle_cap);
    } else {
        // k-means initialization: the pipeline runs on the squared-distance
        // near-metric, Lloyd refines the resulting centers as free centroids.
        if (!inst.has_coordinates())
            throw UnsupportedMetricError("kmeans-init requires coordinates");
        std::vector<double> coords;
        std::vector<double> weights;
        for (int x = 0; x < inst.n(); ++x) {
            const auto p = inst.point(x);
            coords.insert(coords.end(), p.begin(), p.end());
            weights.push_back(inst.raw_weight(x));
        }
        const Instance squared = Instance::from_points(
            coords, inst.dim(), weights, MetricMode::SquaredEuclidean);

        RunConfig inner = config;
        inner.metric = MetricMode::SquaredEuclidean;
        result.report = run_pipeline(squared, inner);

        LloydResult ours = lloyd_refine(inst, result.report.final_config,
                                        config.lloyd_max_iters);
        result.lloyd_iterations = ours.iterations;
        result.kmeans_init_cost = cost_config(squared, result.report.final_config);
        result.kmeans_final_cost = ours.cost;

        Rng rng = Rng(config.seed).split(0xBEEF);
        result.random_init_final_cost =
            lloyd_refine_from(inst, random_init_centroids(inst, config.k, rng),
                              config.lloyd_max_iters)
                .cost;
        result.farthest_init_final_cost =
            lloyd_refine_from(inst, farthest_init_centroids(inst, config.k, rng),
                              config.lloyd_max_iters)
                .cost;
    }

    result.time_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return result;
}

}  // namespace sskm
