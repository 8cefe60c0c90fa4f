// End-to-end acceptance suite. Each check prints one PASS/FAIL line; the
// process exits nonzero if any check fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "sskm/bench.hpp"
#include "sskm/blackbox.hpp"
#include "sskm/generate.hpp"
#include "sskm/io.hpp"
#include "sskm/lloyd.hpp"
#include "sskm/pipeline.hpp"
#include "sskm/sampler.hpp"

using namespace sskm;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion,
                detail.c_str());
    if (!ok) ++g_failures;
}

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

Instance mixed_instance(int n, std::uint64_t seed) {
    if (seed % 2 == 0) {
        GaussianMixtureSpec gm;
        gm.clusters = 16;
        gm.points_per_cluster = n / 16;
        gm.sigma = 0.2;
        gm.box = 20.0;
        return gen_gaussian_mixture(gm, seed);
    }
    return gen_uniform_box(n, 2, 20.0, seed);
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// Criteria 1, 2, 5: carve fraction / round bound, the trace cost inequality,
// and the image-size bound, over 200 seeded sampler runs.
void criteria_1_2_5() {
    const int n = 4096;
    const int ks[] = {4, 16, 64};
    bool carve_ok = true, rounds_ok = true, lemma_ok = true, image_ok = true;
    std::string first_fail;

    const double start = now_ms();
    for (int run = 0; run < 200; ++run) {
        const std::uint64_t seed = static_cast<std::uint64_t>(run);
        const int k = ks[run % 3];
        Instance inst = mixed_instance(n, seed);

        SamplerParams params;
        params.k = k;
        params.seed = seed;  // defaults alpha = 4, beta = 0.5
        const int k_prime = effective_k_prime(params, n);
        const SampledAssignment sa = successive_sample(inst, params);

        // 1a: per-round weight decay
        double prev_weight = inst.total_weight();
        for (const RoundRecord& rec : sa.trace.rounds) {
            if (rec.round == sa.trace.t) break;
            if (rec.surviving_weight > 0.5 * prev_weight) carve_ok = false;
            prev_weight = rec.surviving_weight;
        }
        // 1b: round count bound
        const int t_bound = static_cast<int>(std::ceil(std::log2(
                                static_cast<double>(n) /
                                (params.alpha * k_prime)))) + 1;
        if (sa.trace.t > t_bound) rounds_ok = false;

        // 2: c(sigma) <= sum nu_i * w(C_i), with both sides accumulated in
        // the same per-round point order so the inequality is exact.
        double lhs = 0.0, rhs = 0.0;
        for (const RoundRecord& rec : sa.trace.rounds) {
            for (int x : rec.carved) {
                lhs += inst.distance(x, sa.sigma.target[x]) * inst.weight(x);
                rhs += rec.nu * inst.weight(x);
            }
        }
        if (lhs > rhs) lemma_ok = false;

        // 5: |sigma(U)| <= (t+1) * floor(alpha*k') + alpha*k'
        const int image = static_cast<int>(sa.sigma.image().size());
        const double floor_ak = std::floor(params.alpha * k_prime);
        if (image > (sa.trace.t + 1) * floor_ak + params.alpha * k_prime)
            image_ok = false;
    }
    const double elapsed = now_ms() - start;

    report(1, carve_ok && rounds_ok && elapsed < 30000.0,
           "carve fraction & round bound over 200 runs (n=4096, k in {4,16,64}), " +
               std::to_string(elapsed / 1000.0) + " s");
    report(2, lemma_ok, "c(sigma) <= sum nu_i * w(C_i) on every run");
    report(5, image_ok, "|sigma(U)| <= (t+1)*floor(alpha*k') + alpha*k' on every run");
}

// Criterion 3: uniform-weight oracle ratio on brute-force-feasible instances.
void criterion_3() {
    const LocalSearchSolver solver;
    std::vector<double> ratios;
    bool all_ok = true;
    const double start = now_ms();
    for (int run = 0; run < 100; ++run) {
        const std::uint64_t seed = 1000 + run;
        const int n = 6 + run % 9;  // 6..14
        const int k = 1 + run % 3;
        Instance inst = gen_uniform_box(n, 2, 10.0, seed);

        SamplerParams params;
        params.k = k;
        params.seed = seed;
        const PipelineReport rep = uniform_kmedian(inst, k, params, solver);
        const double opt = brute_force_kmedian(inst, k).second;
        const double ratio = opt > 0.0 ? rep.final_cost / opt
                                       : (rep.final_cost == 0.0 ? 1.0 : 1e18);
        ratios.push_back(ratio);
        if (ratio > 10.0) all_ok = false;
    }
    const double elapsed = now_ms() - start;
    const double med = median(ratios);
    report(3, all_ok && med <= 2.0 && elapsed < 10000.0,
           "uniform oracle ratio <= 10 on all 100 seeds, median " +
               std::to_string(med));
}

// Criterion 4: same protocol with log-uniform weights in [1, 256).
void criterion_4() {
    const LocalSearchSolver solver;
    bool all_ok = true;
    double worst = 0.0;
    const double start = now_ms();
    for (int run = 0; run < 100; ++run) {
        const std::uint64_t seed = 2000 + run;
        const int n = 6 + run % 9;
        const int k = 1 + run % 3;
        Instance box = gen_uniform_box(n, 2, 10.0, seed);
        std::vector<double> coords;
        for (int x = 0; x < n; ++x) {
            const auto p = box.point(x);
            coords.insert(coords.end(), p.begin(), p.end());
        }
        Instance inst = Instance::from_points(
            coords, 2, gen_log_uniform_weights(n, 1.0, 256.0, seed));

        SamplerParams params;
        params.k = k;
        params.seed = seed;
        const PipelineReport rep = weighted_kmedian(inst, k, params, solver);
        const double opt = brute_force_kmedian(inst, k).second;
        const double ratio = opt > 0.0 ? rep.final_cost / opt
                                       : (rep.final_cost == 0.0 ? 1.0 : 1e18);
        worst = std::max(worst, ratio);
        if (ratio > 10.0) all_ok = false;
    }
    const double elapsed = now_ms() - start;
    report(4, all_ok && elapsed < 10000.0,
           "weighted oracle ratio <= 10 on all 100 seeds, worst " +
               std::to_string(worst));
}

// Criterion 6: end-to-end wall time grows by at most 2.6x per doubling of n.
void criterion_6() {
    const LocalSearchSolver solver;
    const int k = 32;
    std::vector<double> medians;
    for (int size : {10000, 20000, 40000}) {
        std::vector<double> times;
        for (std::uint64_t trial = 0; trial < 5; ++trial) {
            Instance inst = gen_uniform_box(size, 2, 50.0, 7000 + trial);
            SamplerParams params;
            params.k = k;
            params.seed = trial;
            const double t0 = now_ms();
            uniform_kmedian(inst, k, params, solver);
            times.push_back(now_ms() - t0);
        }
        medians.push_back(median(times));
    }
    const double r1 = medians[1] / medians[0];
    const double r2 = medians[2] / medians[1];
    report(6, r1 <= 2.6 && r2 <= 2.6,
           "time per doubling: " + std::to_string(r1) + "x, " +
               std::to_string(r2) + "x (medians " + std::to_string(medians[0]) +
               " / " + std::to_string(medians[1]) + " / " +
               std::to_string(medians[2]) + " ms)");
}

// Criterion 7: the 5-point counterexample. Pipeline-initialized Lloyd reaches
// the oracle-best fixed point; blue-initialized Lloyd stays at the bad one.
void criterion_7() {
    const double D = 1000.0;
    Instance inst = gen_counterexample_5pt(D);

    // Oracle best: Lloyd from every 3-subset of the input points.
    double oracle_best = std::numeric_limits<double>::infinity();
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            for (int c = b + 1; c < 5; ++c)
                oracle_best = std::min(
                    oracle_best,
                    lloyd_refine(inst, Configuration({a, b, c}), 100).cost);

    bool ok = true;
    std::string detail;
    for (std::uint64_t seed = 0; seed < 10 && ok; ++seed) {
        RunConfig config;
        GeneratorSpec gen;
        gen.kind = "counterexample-5pt";
        gen.D = D;
        config.generator = gen;
        config.k = 3;
        config.mode = "kmeans-init";
        config.seed = seed;
        const BenchResult result = run_bench(inst, config);

        const double bad = lloyd_refine(inst, Configuration({0, 1, 2}), 100).cost;
        const double good = result.kmeans_final_cost;
        ok = std::abs(good - oracle_best) <= 1e-9 * std::max(1.0, oracle_best) &&
             bad / good > 100.0;
        detail = "good " + std::to_string(good) + " (oracle " +
                 std::to_string(oracle_best) + "), bad " + std::to_string(bad) +
                 ", ratio " + std::to_string(bad / good);
    }
    report(7, ok, detail);
}

// Criterion 8: snapped configuration cost <= 2x the centroid solution cost.
void criterion_8() {
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Instance inst = gen_uniform_box(50, 2, 10.0, 8000 + seed);
        const LloydResult res =
            lloyd_refine(inst, Configuration({0, 1, 2, 3}), 50);
        const Configuration snapped = snap_to_points(inst, res.centroids);
        const double centroid_cost = centroid_kmedian_cost(inst, res.centroids);
        if (cost_config(inst, snapped) > 2.0 * centroid_cost) ok = false;
    }
    report(8, ok, "snap factor-2 bound on 100 seeded instances");
}

// Criterion 9: factor-2 relaxed triangle inequality in squared-euclidean mode.
void criterion_9() {
    bool ok = true;
    long long triples = 0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Instance inst =
            gen_uniform_box(500, 3, 10.0, 9000 + seed, MetricMode::SquaredEuclidean);
        const MetricReport rep = validate_metric(inst, 100000, seed);
        triples += rep.triples_checked;
        if (!rep.ok()) ok = false;
    }
    report(9, ok, std::to_string(triples) + " random triples, zero violations");
}

// Criterion 10: byte-identical reports for identical seed and config.
void criterion_10() {
    bool ok = true;
    for (const char* kind : {"uniform-box", "gaussian-mixture"}) {
        RunConfig config;
        GeneratorSpec gen;
        gen.kind = kind;
        gen.n = 600;
        config.generator = gen;
        config.k = 5;
        config.seed = 424242;
        Instance inst = build_instance(config);
        const std::string a =
            report_to_json(run_bench(inst, config).report, false).dump();
        const std::string b =
            report_to_json(run_bench(inst, config).report, false).dump();
        if (a != b) ok = false;
    }
    // weighted path as well
    {
        Instance box = gen_uniform_box(300, 2, 10.0, 5);
        std::vector<double> coords;
        for (int x = 0; x < box.n(); ++x) {
            const auto p = box.point(x);
            coords.insert(coords.end(), p.begin(), p.end());
        }
        Instance inst = Instance::from_points(
            coords, 2, gen_log_uniform_weights(300, 1.0, 64.0, 6));
        SamplerParams params;
        params.k = 4;
        params.seed = 11;
        const LocalSearchSolver solver;
        const std::string a =
            report_to_json(weighted_kmedian(inst, 4, params, solver), false).dump();
        const std::string b =
            report_to_json(weighted_kmedian(inst, 4, params, solver), false).dump();
        if (a != b) ok = false;
    }
    report(10, ok, "byte-identical JSON reports across repeated runs");
}

}  // namespace

int main() {
    criteria_1_2_5();
    criterion_3();
    criterion_4();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (g_failures > 0) {
        std::printf("%d criterion check(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
