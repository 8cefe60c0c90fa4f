#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sskm/blackbox.hpp"
#include "sskm/generate.hpp"

using namespace sskm;

TEST_CASE("brute force: k = n has cost 0") {
    Instance inst = gen_uniform_box(6, 2, 5.0, 1);
    auto [cfg, cost] = brute_force_kmedian(inst, 6);
    CHECK(cost == 0.0);
    CHECK(cfg.size() == 6);
}

TEST_CASE("brute force on the unit path, k = 1") {
    Instance inst = gen_path(4);
    auto [cfg, cost] = brute_force_kmedian(inst, 1);
    CHECK(cost == doctest::Approx(4.0));
    CHECK(cfg.centers == std::vector<int>{1});  // tie with 2 broken lexicographically
}

TEST_CASE("brute force on the 5-point counterexample, k = 3") {
    Instance inst = gen_counterexample_5pt(1000.0);
    auto [cfg, cost] = brute_force_kmedian(inst, 3);
    CHECK(cost == doctest::Approx(2.0));
    CHECK(cfg.centers == std::vector<int>{1, 3, 4});  // origin + the two reds
}

TEST_CASE("brute force respects the subset cap") {
    Instance inst = gen_uniform_box(40, 2, 5.0, 2);
    CHECK_THROWS_AS(brute_force_kmedian(inst, 10, /*subset_cap=*/1000),
                    OracleTooLargeError);
}

TEST_CASE("brute force rejects infeasible k") {
    Instance inst = gen_path(4);
    CHECK_THROWS_AS(brute_force_kmedian(inst, 5), InfeasibleKError);
}

TEST_CASE("local search: k = n gives cost 0") {
    Instance inst = gen_uniform_box(5, 2, 5.0, 3);
    LocalSearchParams params;
    params.k = 5;
    const Configuration cfg = local_search_kmedian(inst, params);
    CHECK(cost_config(inst, cfg) == 0.0);
}

TEST_CASE("local search reaches OPT on the unit path, k = 2") {
    Instance inst = gen_path(4);
    LocalSearchParams params;
    params.k = 2;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        params.seed = seed;
        const Configuration cfg = local_search_kmedian(inst, params);
        CHECK(cost_config(inst, cfg) <= 2.0);
    }
}

TEST_CASE("local search matches the oracle on the counterexample") {
    Instance inst = gen_counterexample_5pt(1000.0);
    LocalSearchParams params;
    params.k = 3;
    params.seed = 5;
    const Configuration cfg = local_search_kmedian(inst, params);
    CHECK(cost_config(inst, cfg) == doctest::Approx(2.0));
}

TEST_CASE("local search result is swap-optimal") {
    Instance inst = gen_uniform_box(20, 2, 10.0, 9);
    LocalSearchParams params;
    params.k = 3;
    params.seed = 17;
    const Configuration cfg = local_search_kmedian(inst, params);
    const double cost = cost_config(inst, cfg);
    const double threshold = (1.0 - params.epsilon / params.k) * cost;

    // no single swap reaches cost below (1 - eps/k) * cost
    for (int out : cfg.centers) {
        for (int in = 0; in < inst.n(); ++in) {
            bool in_cfg = false;
            for (int c : cfg.centers) in_cfg |= c == in;
            if (in_cfg) continue;
            std::vector<int> swapped;
            for (int c : cfg.centers)
                if (c != out) swapped.push_back(c);
            swapped.push_back(in);
            CHECK(cost_config(inst, Configuration(swapped)) >= threshold);
        }
    }
}

TEST_CASE("oracle dominance and approximation ratio on seeded instances") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Instance inst = gen_uniform_box(12, 2, 10.0, seed);
        LocalSearchParams params;
        params.k = 3;
        params.seed = seed;
        const Configuration ls = local_search_kmedian(inst, params);
        const double ls_cost = cost_config(inst, ls);
        auto [opt_cfg, opt_cost] = brute_force_kmedian(inst, 3);
        CHECK(opt_cost <= ls_cost);
        // 5-approximation guarantee, plus slack for finite epsilon
        CHECK(ls_cost <= (5.0 + 1.0) * opt_cost + 1e-12);
    }
}

TEST_CASE("local search ignores zero-weight candidate centers") {
    std::vector<double> coords = {0, 0, 5, 5, 100, 100};
    Instance inst = Instance::from_points(coords, 2, {1.0, 1.0, 0.0});
    LocalSearchParams params;
    params.k = 2;
    params.seed = 3;
    const Configuration cfg = local_search_kmedian(inst, params);
    for (int c : cfg.centers) CHECK(c != 2);

    params.k = 3;
    CHECK_THROWS_AS(local_search_kmedian(inst, params), InfeasibleKError);
}

TEST_CASE("local search is deterministic given the seed") {
    Instance inst = gen_uniform_box(30, 2, 10.0, 4);
    LocalSearchParams params;
    params.k = 4;
    params.seed = 88;
    const Configuration a = local_search_kmedian(inst, params);
    const Configuration b = local_search_kmedian(inst, params);
    CHECK(a.centers == b.centers);
}
