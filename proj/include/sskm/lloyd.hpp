#pragma once

#include <vector>

#include "sskm/instance.hpp"

namespace sskm {

struct LloydResult {
    std::vector<double> centroids;  // k*dim row-major
    double cost = 0.0;              // sum of w(x) * squared distance
    int iterations = 0;
    std::vector<double> cost_history;  // cost after each iteration
};

// Weighted k-means objective of free centroids: sum of w(x) times squared
// Euclidean distance to the nearest centroid.
double kmeans_cost(const Instance& inst, const std::vector<double>& centroids);

// Same centroids scored under the k-median (plain Euclidean) objective.
double centroid_kmedian_cost(const Instance& inst,
                             const std::vector<double>& centroids);

// Standard Lloyd iterations starting from the coordinates of `init`.
// Stops when assignments stabilize or after max_iters. Cost is nonincreasing
// per iteration. An empty cluster is reseeded at the point currently farthest
// from its assigned centroid.
LloydResult lloyd_refine(const Instance& inst, const Configuration& init,
                         int max_iters = 100);

LloydResult lloyd_refine_from(const Instance& inst,
                              std::vector<double> centroids,
                              int max_iters = 100);

// Replace each centroid by its nearest input point. The resulting
// configuration's k-median cost is at most twice the centroids' k-median
// cost (the nearest input point to a centroid is no farther than any point
// it serves).
Configuration snap_to_points(const Instance& inst,
                             const std::vector<double>& centroids);

}  // namespace sskm
