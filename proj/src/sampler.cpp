#include "sskm/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace sskm {

int effective_k_prime(const SamplerParams& params, int n) {
    if (params.k_prime > 0) return params.k_prime;
    const int log_n = n <= 1 ? 1 : static_cast<int>(std::ceil(std::log2(static_cast<double>(n))));
    return std::max(params.k, std::max(log_n, 1));
}

std::vector<int> weighted_sample_with_replacement(const Instance& inst,
                                                  std::span<const int> active,
                                                  int count, Rng& rng) {
    if (active.empty()) throw DegenerateInstanceError("sampling from empty set");
    std::vector<double> prefix(active.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < active.size(); ++i) {
        acc += inst.weight(active[i]);
        prefix[i] = acc;
    }
    if (acc <= 0.0) throw DegenerateInstanceError("sampling with zero total weight");

    std::vector<int> draws;
    draws.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double u = rng.next_double() * acc;
        auto it = std::upper_bound(prefix.begin(), prefix.end(), u);
        if (it == prefix.end()) --it;  // u can round to acc
        draws.push_back(active[it - prefix.begin()]);
    }
    return draws;
}

namespace {

// Distance from each active point to its nearest sample point, plus that
// nearest sample point (smallest index on ties).
void distances_to_sample(const Instance& inst, std::span<const int> active,
                         std::span<const int> sample,
                         std::vector<double>& dist, std::vector<int>& near) {
    dist.assign(active.size(), std::numeric_limits<double>::infinity());
    near.assign(active.size(), -1);
    for (std::size_t i = 0; i < active.size(); ++i) {
        for (int s : sample) {
            const double d = inst.distance(active[i], s);
            if (d < dist[i] || (d == dist[i] && s < near[i])) {
                dist[i] = d;
                near[i] = s;
            }
        }
    }
}

// Given per-point distances to the sample, find the smallest radius covering
// >= beta * total weight, and the indices (into `active`) within it.
std::pair<double, std::vector<std::size_t>> carve_from_distances(
    const Instance& inst, std::span<const int> active,
    const std::vector<double>& dist, double beta) {
    std::vector<std::size_t> order(active.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (dist[a] != dist[b]) return dist[a] < dist[b];
        return active[a] < active[b];
    });

    double total = 0.0;
    for (int x : active) total += inst.weight(x);
    const double target = beta * total;

    double acc = 0.0;
    double nu = 0.0;
    std::size_t cut = order.size();
    for (std::size_t i = 0; i < order.size(); ++i) {
        acc += inst.weight(active[order[i]]);
        if (acc >= target) {
            nu = dist[order[i]];
            cut = i + 1;
            break;
        }
    }
    // Closed balls: include every point at distance exactly nu.
    while (cut < order.size() && dist[order[cut]] == nu) ++cut;

    std::vector<std::size_t> carved(order.begin(), order.begin() + cut);
    return {nu, std::move(carved)};
}

std::vector<int> dedup_sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

std::pair<double, std::vector<int>> carve_radius(const Instance& inst,
                                                 std::span<const int> active,
                                                 std::span<const int> sample,
                                                 double beta) {
    if (sample.empty()) throw InvalidConfigurationError("carve_radius: empty sample");
    if (active.empty()) throw DegenerateInstanceError("carve_radius: empty active set");
    std::vector<double> dist;
    std::vector<int> near;
    distances_to_sample(inst, active, sample, dist, near);
    auto [nu, carved_pos] = carve_from_distances(inst, active, dist, beta);
    std::vector<int> carved;
    carved.reserve(carved_pos.size());
    for (std::size_t p : carved_pos) carved.push_back(active[p]);
    std::sort(carved.begin(), carved.end());
    return {nu, std::move(carved)};
}

SampledAssignment successive_sample(const Instance& inst,
                                    const SamplerParams& params) {
    if (params.beta <= 0.0 || params.beta >= 1.0)
        throw ValidationError("beta must lie in (0,1)");
    if (params.alpha < 1.0) throw ValidationError("alpha must be >= 1");

    const int n = inst.n();
    const int k_prime = effective_k_prime(params, n);
    const double guard = params.alpha * k_prime;
    const int draws_per_round = static_cast<int>(std::floor(params.alpha * k_prime));

    Rng rng(params.seed);
    SampledAssignment out;
    out.sigma.target.assign(n, -1);

    std::vector<int> active(n);
    std::iota(active.begin(), active.end(), 0);

    std::vector<double> dist;
    std::vector<int> near;
    int round = 0;
    while (static_cast<double>(active.size()) > guard) {
        std::vector<int> sample = dedup_sorted(
            weighted_sample_with_replacement(inst, active, draws_per_round, rng));

        distances_to_sample(inst, active, sample, dist, near);
        auto [nu, carved_pos] = carve_from_distances(inst, active, dist, params.beta);

        RoundRecord rec;
        rec.round = round;
        rec.sample = sample;
        rec.raw_draws = draws_per_round;
        rec.nu = nu;
        rec.carved_count = static_cast<int>(carved_pos.size());

        std::vector<char> carved_flag(active.size(), 0);
        rec.carved.reserve(carved_pos.size());
        for (std::size_t p : carved_pos) {
            carved_flag[p] = 1;
            out.sigma.target[active[p]] = near[p];
            rec.carved.push_back(active[p]);
            rec.carved_weight += inst.weight(active[p]);
        }
        std::sort(rec.carved.begin(), rec.carved.end());

        std::vector<int> survivors;
        survivors.reserve(active.size() - carved_pos.size());
        for (std::size_t i = 0; i < active.size(); ++i)
            if (!carved_flag[i]) survivors.push_back(active[i]);

        rec.surviving_count = static_cast<int>(survivors.size());
        for (int x : survivors) rec.surviving_weight += inst.weight(x);
        out.trace.rounds.push_back(std::move(rec));

        active = std::move(survivors);
        ++round;
    }

    // Residual round: C_t = S_t = U_t, every survivor is its own target.
    RoundRecord rec;
    rec.round = round;
    rec.sample = active;
    rec.raw_draws = 0;
    rec.nu = 0.0;
    rec.carved_count = static_cast<int>(active.size());
    rec.carved = active;
    for (int x : active) {
        out.sigma.target[x] = x;
        rec.carved_weight += inst.weight(x);
    }
    out.trace.rounds.push_back(std::move(rec));
    out.trace.t = round;
    out.trace.residual = std::move(active);
    return out;
}

ContractionWeights assignment_weights(const Assignment& sigma,
                                      const Instance& inst) {
    ContractionWeights out;
    out.support = sigma.image();

    std::vector<int> pos(inst.n(), -1);
    for (std::size_t i = 0; i < out.support.size(); ++i) pos[out.support[i]] = static_cast<int>(i);

    out.weights.assign(out.support.size(), 0.0);
    std::vector<double> comp(out.support.size(), 0.0);
    for (int x = 0; x < inst.n(); ++x) {
        const int j = pos[sigma.target[x]];
        const double y = inst.weight(x) - comp[j];
        const double t = out.weights[j] + y;
        comp[j] = (t - out.weights[j]) - y;
        out.weights[j] = t;
    }
    return out;
}

}  // namespace sskm
