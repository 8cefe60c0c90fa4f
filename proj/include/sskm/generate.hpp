#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sskm/instance.hpp"

namespace sskm {

struct GaussianMixtureSpec {
    int clusters = 4;
    int points_per_cluster = 50;
    double sigma = 0.1;
    double box = 10.0;  // cluster centers drawn uniformly from [0, box]^dim
    int dim = 2;
};

// All generators are deterministic given the seed (hand-rolled Box-Muller on
// top of Rng; no std distributions).
Instance gen_gaussian_mixture(const GaussianMixtureSpec& spec,
                              std::uint64_t seed,
                              MetricMode mode = MetricMode::Euclidean);

Instance gen_uniform_box(int n, int dim, double box, std::uint64_t seed,
                         MetricMode mode = MetricMode::Euclidean);

// n-point unit path 0-1-2-...-(n-1) as an explicit distance matrix.
Instance gen_path(int n);

// The 5-point instance: blue (0,1),(0,0),(0,-1) and red (-D,0),(D,0), unit
// weights. A bad k-means initialization at the blue points gets stuck at a
// fixed point whose cost grows with D.
Instance gen_counterexample_5pt(double D,
                                MetricMode mode = MetricMode::Euclidean);

// Optional per-point weights drawn log-uniform from [lo, hi).
std::vector<double> gen_log_uniform_weights(int n, double lo, double hi,
                                            std::uint64_t seed);

}  // namespace sskm
