#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sskm/errors.hpp"

namespace sskm {

enum class MetricMode {
    ExplicitMatrix,
    Euclidean,
    SquaredEuclidean,  // near-metric: triangle inequality holds within factor 2
};

const char* metric_mode_name(MetricMode m);
MetricMode parse_metric_mode(const std::string& s);

// A weighted point set with a distance oracle. Immutable after construction
// and safe to share across threads. Weights are normalized at construction so
// the smallest nonzero weight is 1; the original weights are kept for
// reporting. Restrictions (subsets with replacement weights, as used when
// contracting an instance or forming a weight class) share the distance
// payload and are NOT re-normalized.
class Instance {
public:
    // coords: n*dim row-major. weights empty => all 1.
    static Instance from_points(std::vector<double> coords, int dim,
                                std::vector<double> weights,
                                MetricMode mode = MetricMode::Euclidean);

    // matrix: n*n row-major, validated for symmetry/nonnegativity/zero diagonal.
    static Instance from_matrix(std::vector<double> matrix, int n,
                                std::vector<double> weights);

    int n() const { return static_cast<int>(ids_.size()); }
    MetricMode mode() const;
    bool has_coordinates() const;
    int dim() const;

    // Coordinates of local point i (coordinate modes only).
    std::span<const double> point(int i) const;

    double distance(int a, int b) const;

    double weight(int i) const { return weights_[i]; }
    double raw_weight(int i) const { return raw_weights_[i]; }
    const std::vector<double>& weights() const { return weights_; }
    double total_weight() const { return total_weight_; }

    // Local indices of points with nonzero weight.
    std::vector<int> nonzero_weight_points() const;

    // Max weight / min nonzero weight, and r_w = 1 + ceil(log2 R_w).
    double weight_ratio() const;
    int weight_class_count() const;

    // Subset view with replacement weights; indices of the result are
    // 0..ids.size()-1 and distances come from the shared payload.
    Instance restricted(const std::vector<int>& ids,
                        std::vector<double> weights) const;

private:
    struct Payload {
        MetricMode mode = MetricMode::Euclidean;
        int dim = 0;
        int n0 = 0;
        std::vector<double> coords;
        std::vector<double> matrix;
    };

    Instance() = default;

    std::shared_ptr<const Payload> payload_;
    std::vector<int> ids_;  // local index -> payload index
    std::vector<double> weights_;
    std::vector<double> raw_weights_;
    double total_weight_ = 0.0;
};

// A nonempty set of centers, stored as sorted unique local indices.
struct Configuration {
    std::vector<int> centers;

    Configuration() = default;
    explicit Configuration(std::vector<int> c);

    int size() const { return static_cast<int>(centers.size()); }
};

// A total map from points to representative points.
struct Assignment {
    std::vector<int> target;  // target[x] = tau(x)

    std::vector<int> image() const;  // sorted unique
};

Assignment identity_assignment(int n);

// cost(X, Y) = sum over Y of d(x, X) * w(x). Empty subset span means Y = U.
double cost_config(const Instance& inst, const Configuration& X,
                   std::span<const int> subset = {});

// c(tau, Y) = sum over Y of d(x, tau(x)) * w(x).
double cost_assignment(const Instance& inst, const Assignment& tau,
                       std::span<const int> subset = {});

// Nearest center in X to x, smallest index on ties.
std::pair<int, double> nearest(const Instance& inst, int x,
                               const Configuration& X);

struct MetricViolation {
    enum class Kind { Negative, Asymmetric, Identity, Triangle };
    Kind kind;
    int a = -1, b = -1, c = -1;
    double lhs = 0.0, rhs = 0.0;
};

struct MetricReport {
    std::vector<MetricViolation> violations;
    long long triples_checked = 0;
    bool relaxed = false;  // squared-euclidean: factor-2 triangle inequality
    bool ok() const { return violations.empty(); }
};

// Spot-checks the metric axioms: exhaustive for n <= 64, otherwise
// sample_budget random triples. Squared-euclidean mode checks
// d(x,z) <= 2*(d(x,y) + d(y,z)) instead of the plain triangle inequality.
MetricReport validate_metric(const Instance& inst, long long sample_budget,
                             std::uint64_t seed = 0);

}  // namespace sskm
