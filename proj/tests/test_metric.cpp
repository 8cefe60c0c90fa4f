#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sskm/generate.hpp"
#include "sskm/instance.hpp"
#include "sskm/rng.hpp"

using namespace sskm;

namespace {

Instance unit_path4() { return gen_path(4); }

}  // namespace

TEST_CASE("cost_config on the 5-point counterexample") {
    const double D = 1000.0;
    Instance inst = gen_counterexample_5pt(D);
    // centers: origin plus the two red points
    const Configuration X({1, 3, 4});
    // the two outer blue points each pay distance 1
    CHECK(cost_config(inst, X) == doctest::Approx(2.0));
}

TEST_CASE("cost_config trivial and path cases") {
    Instance inst = unit_path4();
    CHECK(cost_config(inst, Configuration({0, 1, 2, 3})) == 0.0);
    CHECK(cost_config(inst, Configuration({1})) == doctest::Approx(4.0));

    const std::vector<int> sub = {0, 1};
    CHECK(cost_config(inst, Configuration({1}), sub) == doctest::Approx(1.0));

    CHECK_THROWS_AS(cost_config(inst, Configuration{}), InvalidConfigurationError);
}

TEST_CASE("cost_assignment") {
    Instance inst = unit_path4();
    CHECK(cost_assignment(inst, identity_assignment(4)) == 0.0);

    Assignment all_one;
    all_one.target = {1, 1, 1, 1};
    CHECK(cost_assignment(inst, all_one) == doctest::Approx(4.0));
}

TEST_CASE("cost(tau(U)) <= c(tau) for random assignments") {
    Instance inst = gen_uniform_box(30, 2, 10.0, /*seed=*/7);
    Rng rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        Assignment tau;
        tau.target.resize(inst.n());
        for (int x = 0; x < inst.n(); ++x)
            tau.target[x] = static_cast<int>(rng.next_below(inst.n()));
        const Configuration img(tau.image());
        CHECK(cost_config(inst, img) <= cost_assignment(inst, tau));
    }
}

TEST_CASE("cost_config is monotone under center addition") {
    Instance inst = gen_uniform_box(25, 3, 5.0, 3);
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<int> small, big;
        for (int x = 0; x < inst.n(); ++x) {
            if (rng.next_double() < 0.2) {
                small.push_back(x);
                big.push_back(x);
            } else if (rng.next_double() < 0.3) {
                big.push_back(x);
            }
        }
        if (small.empty() || big.size() == small.size()) continue;
        CHECK(cost_config(inst, Configuration(big)) <=
              cost_config(inst, Configuration(small)));
    }
}

TEST_CASE("nearest with tie-break on smallest index") {
    Instance inst = unit_path4();
    auto [y0, d0] = nearest(inst, 0, Configuration({2, 3}));
    CHECK(y0 == 2);
    CHECK(d0 == 2.0);

    auto [y1, d1] = nearest(inst, 1, Configuration({0, 2}));
    CHECK(y1 == 0);  // equidistant, lower index wins
    CHECK(d1 == 1.0);

    auto [y2, d2] = nearest(inst, 2, Configuration({0, 2}));
    CHECK(y2 == 2);
    CHECK(d2 == 0.0);
}

TEST_CASE("validate_metric passes on Euclidean coordinates") {
    Instance inst = gen_uniform_box(40, 2, 10.0, 11);
    const MetricReport report = validate_metric(inst, 1000);
    CHECK(report.ok());
    CHECK(report.triples_checked > 0);
}

TEST_CASE("validate_metric flags a constructed triangle violation") {
    // d(0,1)=5, d(1,2)=1, d(0,2)=10 > 5 + 1
    std::vector<double> m = {0, 5, 10, 5, 0, 1, 10, 1, 0};
    Instance inst = Instance::from_matrix(m, 3, {});
    const MetricReport report = validate_metric(inst, 0);
    CHECK_FALSE(report.ok());
    bool found_triangle = false;
    for (const auto& v : report.violations)
        if (v.kind == MetricViolation::Kind::Triangle) found_triangle = true;
    CHECK(found_triangle);
}

TEST_CASE("squared-euclidean satisfies factor-2 relaxed triangle inequality") {
    std::vector<double> coords = {0.0, 1.0, 2.0};  // collinear, spacing 1
    Instance inst = Instance::from_points(coords, 1, {},
                                          MetricMode::SquaredEuclidean);
    CHECK(inst.distance(0, 2) == doctest::Approx(4.0));
    CHECK(inst.distance(0, 2) <= 2.0 * (inst.distance(0, 1) + inst.distance(1, 2)));
    CHECK(validate_metric(inst, 0).ok());

    Instance big = gen_uniform_box(200, 3, 4.0, 17, MetricMode::SquaredEuclidean);
    CHECK(validate_metric(big, 20000).ok());
}

TEST_CASE("weight normalization scales min nonzero weight to 1") {
    std::vector<double> coords = {0, 0, 1, 1, 2, 2};
    Instance inst = Instance::from_points(coords, 2, {0.5, 2.0, 0.0});
    CHECK(inst.weight(0) == 1.0);
    CHECK(inst.weight(1) == 4.0);
    CHECK(inst.weight(2) == 0.0);
    CHECK(inst.raw_weight(1) == 2.0);
    CHECK(inst.nonzero_weight_points() == std::vector<int>{0, 1});
    CHECK(inst.weight_ratio() == 4.0);
    CHECK(inst.weight_class_count() == 3);  // 1 + ceil(log2 4)
}

TEST_CASE("instance construction rejects bad input") {
    CHECK_THROWS_AS(Instance::from_points({0, 0}, 2, {0.0}),
                    DegenerateInstanceError);
    CHECK_THROWS_AS(Instance::from_points({0, 0}, 2, {-1.0}), ValidationError);
    // asymmetric matrix
    std::vector<double> m = {0, 1, 2, 0};
    CHECK_THROWS_AS(Instance::from_matrix(m, 2, {}), ValidationError);
}

TEST_CASE("restricted instance shares distances and keeps given weights") {
    Instance inst = unit_path4();
    Instance sub = inst.restricted({1, 3}, {2.5, 7.0});
    CHECK(sub.n() == 2);
    CHECK(sub.distance(0, 1) == 2.0);  // d(1,3) in the parent
    CHECK(sub.weight(0) == 2.5);       // not renormalized
    CHECK(sub.total_weight() == doctest::Approx(9.5));
}
