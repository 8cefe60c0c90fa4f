#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sskm/instance.hpp"
#include "sskm/rng.hpp"

namespace sskm {

struct SamplerParams {
    int k = 1;
    double alpha = 4.0;   // oversampling factor, >= 1
    double beta = 0.5;    // carve fraction, in (0,1)
    int k_prime = 0;      // 0 => max{k, ceil(log2 n)}
    std::uint64_t seed = 0;
};

int effective_k_prime(const SamplerParams& params, int n);

struct RoundRecord {
    int round = 0;
    std::vector<int> sample;   // distinct sampled points
    int raw_draws = 0;         // draws including duplicates
    double nu = 0.0;           // carve radius
    std::vector<int> carved;   // C_i, sorted
    int carved_count = 0;
    double carved_weight = 0.0;
    int surviving_count = 0;
    double surviving_weight = 0.0;
};

struct SamplerTrace {
    std::vector<RoundRecord> rounds;  // rounds 0..t; round t is the residual
    int t = 0;
    std::vector<int> residual;        // U_t, assigned to themselves
};

struct SampledAssignment {
    Assignment sigma;
    SamplerTrace trace;
};

// `count` draws with replacement from `active`, point x with probability
// w(x) / w(active).
std::vector<int> weighted_sample_with_replacement(const Instance& inst,
                                                  std::span<const int> active,
                                                  int count, Rng& rng);

// Smallest radius nu such that the active weight within distance nu of the
// sample is >= beta * w(active), together with that carved set (closed balls,
// so ties at distance nu are included).
std::pair<double, std::vector<int>> carve_radius(const Instance& inst,
                                                 std::span<const int> active,
                                                 std::span<const int> sample,
                                                 double beta);

// Round-based data reduction: sample floor(alpha*k') points by weight, carve
// off the beta-fraction of weight nearest the sample, assign carved points to
// their nearest sample point, recurse on the rest. Stops once at most
// alpha*k' points survive; survivors map to themselves.
SampledAssignment successive_sample(const Instance& inst,
                                    const SamplerParams& params);

struct ContractionWeights {
    std::vector<int> support;     // image(sigma), sorted
    std::vector<double> weights;  // total weight mapped to each support point
};

// weight(y) = sum of w(x) over x with sigma(x) = y, accumulated in point
// index order with Kahan compensation so the result is reproducible.
ContractionWeights assignment_weights(const Assignment& sigma,
                                      const Instance& inst);

}  // namespace sskm
