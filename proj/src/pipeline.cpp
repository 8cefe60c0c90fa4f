#include "sskm/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace sskm {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

ContractedInstance contract(const Instance& inst, const Assignment& sigma) {
    ContractionWeights cw = assignment_weights(sigma, inst);
    std::vector<int> parent_ids = cw.support;
    return {inst.restricted(cw.support, std::move(cw.weights)),
            std::move(parent_ids)};
}

WeightClassPartition weight_classes(const Instance& inst) {
    WeightClassPartition part;
    part.r_w = inst.weight_class_count();
    std::vector<std::vector<int>> buckets(part.r_w);
    for (int x = 0; x < inst.n(); ++x) {
        const double w = inst.weight(x);
        if (w <= 0.0) continue;
        // Half-open classes [2^i, 2^{i+1}); normalized weights start at 1.
        int i = static_cast<int>(std::floor(std::log2(w)));
        // Guard against log2 rounding at the boundaries.
        while (i > 0 && w < std::ldexp(1.0, i)) --i;
        while (w >= std::ldexp(1.0, i + 1)) ++i;
        if (i >= part.r_w) i = part.r_w - 1;
        buckets[i].push_back(x);
    }
    for (int i = 0; i < part.r_w; ++i) {
        if (buckets[i].empty()) continue;
        part.classes.push_back({i, std::move(buckets[i])});
    }
    return part;
}

void induced_assignment(const Instance& inst, const Configuration& Z,
                        std::span<const int> subset, Assignment& out) {
    if (static_cast<int>(out.target.size()) != inst.n())
        out.target.assign(inst.n(), -1);
    for (int x : subset) out.target[x] = nearest(inst, x, Z).first;
}

PipelineReport uniform_kmedian(const Instance& inst, int k,
                               const SamplerParams& params,
                               const KMedianSolver& solver) {
    for (int x = 1; x < inst.n(); ++x)
        if (inst.weight(x) != inst.weight(0))
            throw ValidationError("uniform_kmedian requires uniform weights");

    SamplerParams p = params;
    p.k = k;

    PipelineReport report;
    report.mode = "uniform";
    report.k = k;
    report.seed = p.seed;
    report.alpha = p.alpha;
    report.beta = p.beta;
    report.k_prime = effective_k_prime(p, inst.n());

    auto t0 = Clock::now();
    SampledAssignment sa = successive_sample(inst, p);
    report.timings.sampling_ms = ms_since(t0);

    t0 = Clock::now();
    ContractedInstance ci = contract(inst, sa.sigma);
    report.timings.contraction_ms = ms_since(t0);

    t0 = Clock::now();
    Configuration reduced = solver.solve(ci.inst, k, Rng(p.seed).split(1).seed());
    report.timings.blackbox_ms = ms_since(t0);

    std::vector<int> centers;
    centers.reserve(reduced.centers.size());
    for (int c : reduced.centers) centers.push_back(ci.parent_ids[c]);
    report.final_config = Configuration(std::move(centers));
    report.final_cost = cost_config(inst, report.final_config);
    report.c_sigma = cost_assignment(inst, sa.sigma);
    report.rounds = sa.trace.t;
    report.image_size = static_cast<int>(ci.parent_ids.size());
    report.trace = std::move(sa.trace);
    return report;
}

PipelineReport weighted_kmedian(const Instance& inst, int k,
                                const SamplerParams& params,
                                const KMedianSolver& solver) {
    SamplerParams p = params;
    p.k = k;

    PipelineReport report;
    report.mode = "weighted";
    report.k = k;
    report.seed = p.seed;
    report.alpha = p.alpha;
    report.beta = p.beta;
    report.k_prime = effective_k_prime(p, inst.n());

    const WeightClassPartition part = weight_classes(inst);
    const Rng master(p.seed);

    Assignment phi;
    phi.target.assign(inst.n(), -1);
    std::vector<int> all_centers;

    auto t0 = Clock::now();
    for (const WeightClass& cls : part.classes) {
        const double fixed_weight = std::ldexp(1.0, cls.index + 1);  // 2^{i+1}
        Instance sub = inst.restricted(
            cls.points, std::vector<double>(cls.points.size(), fixed_weight));

        SamplerParams cp = p;
        cp.seed = master.split(static_cast<std::uint64_t>(cls.index)).seed();
        cp.k_prime = report.k_prime;  // k' from global n, not |B_i|
        const int k_class = std::min(k, static_cast<int>(cls.points.size()));

        SampledAssignment sa = successive_sample(sub, cp);
        ContractedInstance ci = contract(sub, sa.sigma);
        Configuration reduced =
            solver.solve(ci.inst, k_class, Rng(cp.seed).split(1).seed());

        ClassResult res;
        res.class_index = cls.index;
        res.rounds = sa.trace.t;
        for (int c : reduced.centers)
            res.centers.push_back(cls.points[ci.parent_ids[c]]);
        std::sort(res.centers.begin(), res.centers.end());

        const Configuration z(res.centers);
        induced_assignment(inst, z, cls.points, phi);
        res.phi_cost = cost_assignment(inst, phi, cls.points);
        all_centers.insert(all_centers.end(), res.centers.begin(),
                           res.centers.end());
        report.per_class.push_back(std::move(res));
        report.rounds = std::max(report.rounds, sa.trace.t);
    }
    report.timings.sampling_ms = ms_since(t0);

    // Zero-weight points contribute nothing to any cost; map them to their
    // nearest center so phi is total.
    const Configuration all_z(all_centers);
    std::vector<int> leftovers;
    for (int x = 0; x < inst.n(); ++x)
        if (phi.target[x] < 0) leftovers.push_back(x);
    if (!leftovers.empty()) induced_assignment(inst, all_z, leftovers, phi);

    t0 = Clock::now();
    ContractedInstance ci = contract(inst, phi);
    report.timings.contraction_ms = ms_since(t0);

    t0 = Clock::now();
    const int k_final =
        std::min(k, static_cast<int>(ci.inst.nonzero_weight_points().size()));
    Configuration reduced =
        solver.solve(ci.inst, k_final, master.split(0xFFFF).seed());
    report.timings.blackbox_ms = ms_since(t0);

    std::vector<int> centers;
    for (int c : reduced.centers) centers.push_back(ci.parent_ids[c]);
    report.final_config = Configuration(std::move(centers));
    report.final_cost = cost_config(inst, report.final_config);
    report.c_sigma = cost_assignment(inst, phi);
    report.image_size = static_cast<int>(ci.parent_ids.size());
    return report;
}

}  // namespace sskm
