#include "sskm/lloyd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sskm {

namespace {

double sq_dist(std::span<const double> a, const double* b, int dim) {
    double s = 0.0;
    for (int j = 0; j < dim; ++j) {
        const double diff = a[j] - b[j];
        s += diff * diff;
    }
    return s;
}

void require_coordinates(const Instance& inst) {
    if (!inst.has_coordinates())
        throw UnsupportedMetricError("operation requires point coordinates");
}

// Nearest centroid index (smallest index on ties) and squared distance.
std::pair<int, double> nearest_centroid(const Instance& inst, int x,
                                        const std::vector<double>& centroids) {
    const int dim = inst.dim();
    const int k = static_cast<int>(centroids.size()) / dim;
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    const auto px = inst.point(x);
    for (int c = 0; c < k; ++c) {
        const double d = sq_dist(px, centroids.data() + static_cast<std::size_t>(c) * dim, dim);
        if (d < best_d) {
            best = c;
            best_d = d;
        }
    }
    return {best, best_d};
}

}  // namespace

double kmeans_cost(const Instance& inst, const std::vector<double>& centroids) {
    require_coordinates(inst);
    double total = 0.0;
    for (int x = 0; x < inst.n(); ++x)
        total += inst.weight(x) * nearest_centroid(inst, x, centroids).second;
    return total;
}

double centroid_kmedian_cost(const Instance& inst,
                             const std::vector<double>& centroids) {
    require_coordinates(inst);
    double total = 0.0;
    for (int x = 0; x < inst.n(); ++x)
        total += inst.weight(x) * std::sqrt(nearest_centroid(inst, x, centroids).second);
    return total;
}

LloydResult lloyd_refine_from(const Instance& inst,
                              std::vector<double> centroids, int max_iters) {
    require_coordinates(inst);
    const int dim = inst.dim();
    const int n = inst.n();
    const int k = static_cast<int>(centroids.size()) / dim;
    if (k < 1 || centroids.size() % static_cast<std::size_t>(dim) != 0)
        throw ValidationError("lloyd: bad centroid table");

    LloydResult res;
    res.centroids = std::move(centroids);
    std::vector<int> assign(n, -1), prev(n, -2);
    std::vector<double> assign_sq(n, 0.0);

    for (int iter = 0; iter < max_iters; ++iter) {
        for (int x = 0; x < n; ++x) {
            auto [c, d] = nearest_centroid(inst, x, res.centroids);
            assign[x] = c;
            assign_sq[x] = d;
        }
        if (assign == prev) break;
        prev = assign;
        ++res.iterations;

        std::vector<double> sums(static_cast<std::size_t>(k) * dim, 0.0);
        std::vector<double> wsum(k, 0.0);
        for (int x = 0; x < n; ++x) {
            const double w = inst.weight(x);
            const auto px = inst.point(x);
            for (int j = 0; j < dim; ++j)
                sums[static_cast<std::size_t>(assign[x]) * dim + j] += w * px[j];
            wsum[assign[x]] += w;
        }
        for (int c = 0; c < k; ++c) {
            if (wsum[c] > 0.0) {
                for (int j = 0; j < dim; ++j)
                    res.centroids[static_cast<std::size_t>(c) * dim + j] =
                        sums[static_cast<std::size_t>(c) * dim + j] / wsum[c];
            } else {
                // Empty cluster: reseed at the point farthest from its
                // assigned centroid.
                int far = 0;
                double far_d = -1.0;
                for (int x = 0; x < n; ++x)
                    if (assign_sq[x] > far_d) {
                        far_d = assign_sq[x];
                        far = x;
                    }
                const auto px = inst.point(far);
                for (int j = 0; j < dim; ++j)
                    res.centroids[static_cast<std::size_t>(c) * dim + j] = px[j];
                assign_sq[far] = 0.0;  // do not reuse the same point
            }
        }
        res.cost_history.push_back(kmeans_cost(inst, res.centroids));
    }
    res.cost = kmeans_cost(inst, res.centroids);
    return res;
}

LloydResult lloyd_refine(const Instance& inst, const Configuration& init,
                         int max_iters) {
    require_coordinates(inst);
    const int dim = inst.dim();
    std::vector<double> centroids;
    centroids.reserve(init.centers.size() * dim);
    for (int c : init.centers) {
        const auto p = inst.point(c);
        centroids.insert(centroids.end(), p.begin(), p.end());
    }
    return lloyd_refine_from(inst, std::move(centroids), max_iters);
}

Configuration snap_to_points(const Instance& inst,
                             const std::vector<double>& centroids) {
    require_coordinates(inst);
    const int dim = inst.dim();
    const int k = static_cast<int>(centroids.size()) / dim;
    std::vector<int> snapped;
    snapped.reserve(k);
    for (int c = 0; c < k; ++c) {
        const double* pc = centroids.data() + static_cast<std::size_t>(c) * dim;
        int best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (int x = 0; x < inst.n(); ++x) {
            const double d = sq_dist(inst.point(x), pc, dim);
            if (d < best_d) {
                best = x;
                best_d = d;
            }
        }
        snapped.push_back(best);
    }
    return Configuration(std::move(snapped));
}

}  // namespace sskm
