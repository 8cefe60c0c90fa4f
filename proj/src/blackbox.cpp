#include "sskm/blackbox.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "sskm/rng.hpp"

namespace sskm {

namespace {

// k distinct points sampled by weight without replacement.
std::vector<int> weighted_init(const Instance& inst,
                               const std::vector<int>& candidates, int k,
                               Rng& rng) {
    std::vector<int> pool(candidates);
    std::vector<int> chosen;
    chosen.reserve(k);
    for (int i = 0; i < k; ++i) {
        double total = 0.0;
        for (int x : pool) total += inst.weight(x);
        const double u = rng.next_double() * total;
        double acc = 0.0;
        std::size_t pick = pool.size() - 1;
        for (std::size_t j = 0; j < pool.size(); ++j) {
            acc += inst.weight(pool[j]);
            if (acc > u) {
                pick = j;
                break;
            }
        }
        chosen.push_back(pool[pick]);
        pool.erase(pool.begin() + pick);
    }
    return chosen;
}

struct NearestTable {
    std::vector<double> d1, d2;  // nearest / second-nearest center distance
    std::vector<int> c1;         // nearest center

    void rebuild(const Instance& inst, const std::vector<int>& centers) {
        const int n = inst.n();
        d1.assign(n, std::numeric_limits<double>::infinity());
        d2.assign(n, std::numeric_limits<double>::infinity());
        c1.assign(n, -1);
        for (int x = 0; x < n; ++x) {
            for (int y : centers) {
                const double d = inst.distance(x, y);
                if (d < d1[x] || (d == d1[x] && y < c1[x])) {
                    d2[x] = d1[x];
                    d1[x] = d;
                    c1[x] = y;
                } else if (d < d2[x]) {
                    d2[x] = d;
                }
            }
        }
    }

    double cost(const Instance& inst) const {
        double total = 0.0;
        for (int x = 0; x < inst.n(); ++x) total += inst.weight(x) * d1[x];
        return total;
    }

    // Cost after removing center `out` and adding point `in`.
    double swap_cost(const Instance& inst, int out, int in) const {
        double total = 0.0;
        for (int x = 0; x < inst.n(); ++x) {
            const double din = inst.distance(x, in);
            const double base = (c1[x] == out) ? d2[x] : d1[x];
            total += inst.weight(x) * std::min(base, din);
        }
        return total;
    }
};

}  // namespace

Configuration local_search_kmedian(const Instance& inst,
                                   const LocalSearchParams& params) {
    const int n = inst.n();
    const int k = params.k;
    const std::vector<int> candidates = inst.nonzero_weight_points();
    if (k < 1 || k > static_cast<int>(candidates.size()))
        throw InfeasibleKError("k exceeds available candidate centers");
    if (params.epsilon <= 0.0) throw ValidationError("epsilon must be > 0");

    Rng rng(params.seed);
    std::vector<int> centers = weighted_init(inst, candidates, k, rng);
    std::sort(centers.begin(), centers.end());

    const long long budget = params.max_iterations > 0
                                 ? params.max_iterations
                                 : 100LL * k * n;

    NearestTable tab;
    tab.rebuild(inst, centers);
    double cur = tab.cost(inst);
    const double accept_factor = 1.0 - params.epsilon / k;

    std::vector<char> is_center(n, 0);
    long long evals = 0;
    bool improved = true;
    while (improved && evals < budget) {
        improved = false;
        std::fill(is_center.begin(), is_center.end(), 0);
        for (int y : centers) is_center[y] = 1;

        std::vector<std::pair<int, int>> swaps;
        swaps.reserve(static_cast<std::size_t>(k) * candidates.size());
        for (int out : centers)
            for (int in : candidates)
                if (!is_center[in]) swaps.emplace_back(out, in);
        rng.shuffle(swaps);

        for (auto [out, in] : swaps) {
            if (evals++ >= budget) break;
            const double next = tab.swap_cost(inst, out, in);
            if (next < accept_factor * cur) {
                centers.erase(std::find(centers.begin(), centers.end(), out));
                centers.push_back(in);
                std::sort(centers.begin(), centers.end());
                tab.rebuild(inst, centers);
                cur = tab.cost(inst);
                improved = true;
                break;  // first improvement: restart the pass
            }
        }
    }
    return Configuration(std::move(centers));
}

std::pair<Configuration, double> brute_force_kmedian(const Instance& inst,
                                                     int k,
                                                     long long subset_cap) {
    const std::vector<int> candidates = inst.nonzero_weight_points();
    const int m = static_cast<int>(candidates.size());
    if (k < 1 || k > m)
        throw InfeasibleKError("k exceeds available candidate centers");

    // C(m, k) with early bail-out against the cap.
    double subsets = 1.0;
    for (int i = 1; i <= k; ++i) {
        subsets *= static_cast<double>(m - k + i) / i;
        if (subsets > static_cast<double>(subset_cap) * 2.0) break;
    }
    if (subsets > static_cast<double>(subset_cap))
        throw OracleTooLargeError("brute-force oracle: too many subsets");

    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;

    Configuration best;
    double best_cost = std::numeric_limits<double>::infinity();
    std::vector<int> centers(k);
    while (true) {
        for (int i = 0; i < k; ++i) centers[i] = candidates[idx[i]];
        const double c = cost_config(inst, Configuration(centers));
        if (c < best_cost) {  // strict: lexicographic enumeration keeps ties
            best_cost = c;
            best = Configuration(centers);
        }
        // next combination
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return {best, best_cost};
}

}  // namespace sskm
