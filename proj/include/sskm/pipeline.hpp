#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sskm/blackbox.hpp"
#include "sskm/instance.hpp"
#include "sskm/sampler.hpp"

namespace sskm {

// Reduced instance built from an assignment: the support points carry the
// total weight assigned to them, distances come from the base instance.
struct ContractedInstance {
    Instance inst;
    std::vector<int> parent_ids;  // contracted index -> parent index
};

ContractedInstance contract(const Instance& inst, const Assignment& sigma);

struct WeightClass {
    int index = 0;               // class i covers weights in [2^i, 2^{i+1})
    std::vector<int> points;
};

struct WeightClassPartition {
    std::vector<WeightClass> classes;  // nonempty classes only, ascending
    int r_w = 0;
};

WeightClassPartition weight_classes(const Instance& inst);

struct ClassResult {
    int class_index = 0;
    std::vector<int> centers;  // Z_i, parent indices
    double phi_cost = 0.0;     // c(phi_i) over the class
    int rounds = 0;
};

struct StageTimings {
    double sampling_ms = 0.0;
    double contraction_ms = 0.0;
    double blackbox_ms = 0.0;
};

struct PipelineReport {
    std::string mode;  // "uniform" or "weighted"
    int k = 0;
    std::uint64_t seed = 0;
    double alpha = 0.0;
    double beta = 0.0;
    int k_prime = 0;
    Configuration final_config;
    double final_cost = 0.0;
    double c_sigma = 0.0;   // cost of the reduction assignment (sigma or phi)
    int rounds = 0;         // t (max over classes in weighted mode)
    int image_size = 0;     // |sigma(U)| or |phi(U)|
    std::vector<ClassResult> per_class;
    SamplerTrace trace;     // uniform mode only
    StageTimings timings;
};

// Uniform-weights algorithm: successive sampling, contraction to the image
// of sigma with assignment weights, then the black-box k-median solver on
// the contracted instance. Requires all weights equal.
PipelineReport uniform_kmedian(const Instance& inst, int k,
                               const SamplerParams& params,
                               const KMedianSolver& solver);

// Arbitrary-weights algorithm: partition nonzero-weight points into dyadic
// weight classes, run the uniform algorithm per class with the class's fixed
// weight 2^{i+1} (k' computed from global n), union the induced assignments
// into phi, and run the black box once more on the contracted phi(U).
PipelineReport weighted_kmedian(const Instance& inst, int k,
                                const SamplerParams& params,
                                const KMedianSolver& solver);

// Each point of `subset` mapped to its nearest center in Z (index
// tie-break); points outside `subset` keep their existing target.
void induced_assignment(const Instance& inst, const Configuration& Z,
                        std::span<const int> subset, Assignment& out);

}  // namespace sskm
