#include "sskm/instance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sskm/rng.hpp"

namespace sskm {

const char* metric_mode_name(MetricMode m) {
    switch (m) {
        case MetricMode::ExplicitMatrix: return "explicit-matrix";
        case MetricMode::Euclidean: return "euclidean";
        case MetricMode::SquaredEuclidean: return "squared-euclidean";
    }
    return "unknown";
}

MetricMode parse_metric_mode(const std::string& s) {
    if (s == "explicit-matrix" || s == "matrix") return MetricMode::ExplicitMatrix;
    if (s == "euclidean") return MetricMode::Euclidean;
    if (s == "squared-euclidean" || s == "sqeuclidean") return MetricMode::SquaredEuclidean;
    throw ValidationError("unknown metric mode: " + s);
}

namespace {

void normalize_weights(std::vector<double>& weights,
                       std::vector<double>& raw_weights) {
    double min_nonzero = std::numeric_limits<double>::infinity();
    bool any_positive = false;
    for (double w : weights) {
        if (w < 0.0) throw ValidationError("negative point weight");
        if (w > 0.0) {
            any_positive = true;
            min_nonzero = std::min(min_nonzero, w);
        }
    }
    if (!any_positive) throw DegenerateInstanceError("all point weights are zero");
    raw_weights = weights;
    for (double& w : weights) w /= min_nonzero;
}

double kahan_sum(const std::vector<double>& v) {
    double sum = 0.0, comp = 0.0;
    for (double x : v) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

}  // namespace

Instance Instance::from_points(std::vector<double> coords, int dim,
                               std::vector<double> weights, MetricMode mode) {
    if (dim < 1) throw ValidationError("dimension must be >= 1");
    if (mode == MetricMode::ExplicitMatrix)
        throw ValidationError("explicit-matrix mode needs a matrix, not coordinates");
    if (coords.empty() || coords.size() % static_cast<std::size_t>(dim) != 0)
        throw ValidationError("coordinate count is not a multiple of dim");
    const int n = static_cast<int>(coords.size()) / dim;
    if (weights.empty()) weights.assign(n, 1.0);
    if (static_cast<int>(weights.size()) != n)
        throw ValidationError("weight count does not match point count");

    auto payload = std::make_shared<Payload>();
    payload->mode = mode;
    payload->dim = dim;
    payload->n0 = n;
    payload->coords = std::move(coords);

    Instance inst;
    inst.payload_ = std::move(payload);
    inst.ids_.resize(n);
    for (int i = 0; i < n; ++i) inst.ids_[i] = i;
    inst.weights_ = std::move(weights);
    normalize_weights(inst.weights_, inst.raw_weights_);
    inst.total_weight_ = kahan_sum(inst.weights_);
    return inst;
}

Instance Instance::from_matrix(std::vector<double> matrix, int n,
                               std::vector<double> weights) {
    if (n < 1) throw ValidationError("n must be >= 1");
    if (matrix.size() != static_cast<std::size_t>(n) * n)
        throw ValidationError("matrix size is not n*n");
    for (int i = 0; i < n; ++i) {
        if (matrix[static_cast<std::size_t>(i) * n + i] != 0.0)
            throw ValidationError("matrix diagonal must be zero");
        for (int j = 0; j < n; ++j) {
            const double dij = matrix[static_cast<std::size_t>(i) * n + j];
            if (dij < 0.0) throw ValidationError("negative distance in matrix");
            if (dij != matrix[static_cast<std::size_t>(j) * n + i])
                throw ValidationError("distance matrix is not symmetric");
        }
    }
    if (weights.empty()) weights.assign(n, 1.0);
    if (static_cast<int>(weights.size()) != n)
        throw ValidationError("weight count does not match point count");

    auto payload = std::make_shared<Payload>();
    payload->mode = MetricMode::ExplicitMatrix;
    payload->n0 = n;
    payload->matrix = std::move(matrix);

    Instance inst;
    inst.payload_ = std::move(payload);
    inst.ids_.resize(n);
    for (int i = 0; i < n; ++i) inst.ids_[i] = i;
    inst.weights_ = std::move(weights);
    normalize_weights(inst.weights_, inst.raw_weights_);
    inst.total_weight_ = kahan_sum(inst.weights_);
    return inst;
}

MetricMode Instance::mode() const { return payload_->mode; }

bool Instance::has_coordinates() const {
    return payload_->mode != MetricMode::ExplicitMatrix;
}

int Instance::dim() const { return payload_->dim; }

std::span<const double> Instance::point(int i) const {
    if (!has_coordinates())
        throw UnsupportedMetricError("instance has no coordinates");
    const int d = payload_->dim;
    return {payload_->coords.data() + static_cast<std::size_t>(ids_[i]) * d,
            static_cast<std::size_t>(d)};
}

double Instance::distance(int a, int b) const {
    const Payload& p = *payload_;
    const int ia = ids_[a], ib = ids_[b];
    if (p.mode == MetricMode::ExplicitMatrix)
        return p.matrix[static_cast<std::size_t>(ia) * p.n0 + ib];
    const double* pa = p.coords.data() + static_cast<std::size_t>(ia) * p.dim;
    const double* pb = p.coords.data() + static_cast<std::size_t>(ib) * p.dim;
    double s = 0.0;
    for (int j = 0; j < p.dim; ++j) {
        const double diff = pa[j] - pb[j];
        s += diff * diff;
    }
    return p.mode == MetricMode::Euclidean ? std::sqrt(s) : s;
}

std::vector<int> Instance::nonzero_weight_points() const {
    std::vector<int> out;
    for (int i = 0; i < n(); ++i)
        if (weights_[i] > 0.0) out.push_back(i);
    return out;
}

double Instance::weight_ratio() const {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (double w : weights_) {
        if (w > 0.0) {
            lo = std::min(lo, w);
            hi = std::max(hi, w);
        }
    }
    return hi / lo;
}

int Instance::weight_class_count() const {
    return 1 + static_cast<int>(std::ceil(std::log2(weight_ratio())));
}

Instance Instance::restricted(const std::vector<int>& ids,
                              std::vector<double> weights) const {
    if (ids.empty()) throw ValidationError("restriction must be nonempty");
    if (weights.size() != ids.size())
        throw ValidationError("restriction weight count mismatch");
    Instance sub;
    sub.payload_ = payload_;
    sub.ids_.reserve(ids.size());
    sub.raw_weights_.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        sub.ids_.push_back(ids_[ids[i]]);
        sub.raw_weights_.push_back(weights[i]);
    }
    sub.weights_ = std::move(weights);
    sub.total_weight_ = kahan_sum(sub.weights_);
    return sub;
}

Configuration::Configuration(std::vector<int> c) : centers(std::move(c)) {
    std::sort(centers.begin(), centers.end());
    centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
    if (centers.empty())
        throw InvalidConfigurationError("configuration must be nonempty");
}

std::vector<int> Assignment::image() const {
    std::vector<int> img(target);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
}

Assignment identity_assignment(int n) {
    Assignment a;
    a.target.resize(n);
    for (int i = 0; i < n; ++i) a.target[i] = i;
    return a;
}

std::pair<int, double> nearest(const Instance& inst, int x,
                               const Configuration& X) {
    if (X.centers.empty())
        throw InvalidConfigurationError("nearest: empty configuration");
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int y : X.centers) {
        const double d = inst.distance(x, y);
        if (d < best_d || (d == best_d && y < best)) {
            best = y;
            best_d = d;
        }
    }
    return {best, best_d};
}

double cost_config(const Instance& inst, const Configuration& X,
                   std::span<const int> subset) {
    if (X.centers.empty())
        throw InvalidConfigurationError("cost_config: empty configuration");
    auto point_cost = [&](int x) {
        double best = std::numeric_limits<double>::infinity();
        for (int y : X.centers) best = std::min(best, inst.distance(x, y));
        return best * inst.weight(x);
    };
    double total = 0.0;
    if (subset.empty()) {
        for (int x = 0; x < inst.n(); ++x) total += point_cost(x);
    } else {
        for (int x : subset) total += point_cost(x);
    }
    return total;
}

double cost_assignment(const Instance& inst, const Assignment& tau,
                       std::span<const int> subset) {
    double total = 0.0;
    if (subset.empty()) {
        for (int x = 0; x < inst.n(); ++x)
            total += inst.distance(x, tau.target[x]) * inst.weight(x);
    } else {
        for (int x : subset)
            total += inst.distance(x, tau.target[x]) * inst.weight(x);
    }
    return total;
}

namespace {

void check_triple(const Instance& inst, int a, int b, int c, bool relaxed,
                  MetricReport& report) {
    const double dab = inst.distance(a, b);
    const double dbc = inst.distance(b, c);
    const double dac = inst.distance(a, c);
    const double factor = relaxed ? 2.0 : 1.0;
    if (dac > factor * (dab + dbc)) {
        report.violations.push_back({MetricViolation::Kind::Triangle, a, b, c,
                                     dac, factor * (dab + dbc)});
    }
    ++report.triples_checked;
}

}  // namespace

MetricReport validate_metric(const Instance& inst, long long sample_budget,
                             std::uint64_t seed) {
    MetricReport report;
    report.relaxed = inst.mode() == MetricMode::SquaredEuclidean;
    const int n = inst.n();

    // Pairwise axioms: exhaustive up to n = 64, sampled beyond.
    auto check_pair = [&](int a, int b) {
        const double dab = inst.distance(a, b);
        const double dba = inst.distance(b, a);
        if (dab < 0.0)
            report.violations.push_back(
                {MetricViolation::Kind::Negative, a, b, -1, dab, 0.0});
        if (dab != dba)
            report.violations.push_back(
                {MetricViolation::Kind::Asymmetric, a, b, -1, dab, dba});
        if (a != b && dab == 0.0)
            report.violations.push_back(
                {MetricViolation::Kind::Identity, a, b, -1, dab, 0.0});
        if (a == b && dab != 0.0)
            report.violations.push_back(
                {MetricViolation::Kind::Identity, a, b, -1, dab, 0.0});
    };

    if (n <= 64) {
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) check_pair(a, b);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) check_triple(inst, a, b, c, report.relaxed, report);
    } else {
        Rng rng(seed);
        for (long long i = 0; i < sample_budget; ++i) {
            const int a = static_cast<int>(rng.next_below(n));
            const int b = static_cast<int>(rng.next_below(n));
            const int c = static_cast<int>(rng.next_below(n));
            check_pair(a, b);
            check_triple(inst, a, b, c, report.relaxed, report);
        }
    }
    return report;
}

}  // namespace sskm
