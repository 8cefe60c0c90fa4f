#pragma once

#include <cstdint>
#include <utility>

#include "sskm/instance.hpp"

namespace sskm {

struct LocalSearchParams {
    int k = 1;
    double epsilon = 1e-3;          // swap must beat (1 - epsilon/k) * cost
    long long max_iterations = 0;   // swap evaluations; 0 => 100 * k * n
    std::uint64_t seed = 0;
};

// Abstract O(1)-approximate k-median solver. The pipeline only relies on
// constant-factor approximation, so other solvers can slot in here.
class KMedianSolver {
public:
    virtual ~KMedianSolver() = default;
    virtual Configuration solve(const Instance& inst, int k,
                                std::uint64_t seed) const = 0;
};

// Single-swap local search with first-improvement acceptance over a seeded
// random permutation of (out, in) pairs. Swap-optimal on termination:
// no swap reaches cost below (1 - epsilon/k) * cost(X). 5-approximate in the
// epsilon -> 0 limit.
Configuration local_search_kmedian(const Instance& inst,
                                   const LocalSearchParams& params);

// Exact minimum-cost k-configuration over nonzero-weight candidate centers,
// by exhaustive enumeration. Ties resolve to the lexicographically smallest
// sorted index tuple.
std::pair<Configuration, double> brute_force_kmedian(
    const Instance& inst, int k, long long subset_cap = 5'000'000);

class LocalSearchSolver final : public KMedianSolver {
public:
    explicit LocalSearchSolver(double epsilon = 1e-3) : epsilon_(epsilon) {}
    Configuration solve(const Instance& inst, int k,
                        std::uint64_t seed) const override {
        LocalSearchParams p;
        p.k = k;
        p.epsilon = epsilon_;
        p.seed = seed;
        return local_search_kmedian(inst, p);
    }

private:
    double epsilon_;
};

class BruteForceSolver final : public KMedianSolver {
public:
    Configuration solve(const Instance& inst, int k,
                        std::uint64_t) const override {
        return brute_force_kmedian(inst, k).first;
    }
};

}  // namespace sskm
