#include "sskm/generate.hpp"

#include <cmath>
#include <numbers>

#include "sskm/rng.hpp"

namespace sskm {

namespace {

// Box-Muller; uses two uniforms per pair of normals.
double next_normal(Rng& rng) {
    double u1 = rng.next_double();
    while (u1 <= 0.0) u1 = rng.next_double();
    const double u2 = rng.next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

Instance gen_gaussian_mixture(const GaussianMixtureSpec& spec,
                              std::uint64_t seed, MetricMode mode) {
    if (spec.clusters < 1 || spec.points_per_cluster < 1 || spec.sigma <= 0.0 ||
        spec.box <= 0.0 || spec.dim < 1)
        throw ValidationError("gaussian-mixture: invalid parameters");
    Rng rng(seed);
    std::vector<double> centers(static_cast<std::size_t>(spec.clusters) * spec.dim);
    for (double& c : centers) c = rng.next_double() * spec.box;

    std::vector<double> coords;
    coords.reserve(static_cast<std::size_t>(spec.clusters) *
                   spec.points_per_cluster * spec.dim);
    for (int c = 0; c < spec.clusters; ++c)
        for (int p = 0; p < spec.points_per_cluster; ++p)
            for (int j = 0; j < spec.dim; ++j)
                coords.push_back(centers[static_cast<std::size_t>(c) * spec.dim + j] +
                                 spec.sigma * next_normal(rng));
    return Instance::from_points(std::move(coords), spec.dim, {}, mode);
}

Instance gen_uniform_box(int n, int dim, double box, std::uint64_t seed,
                         MetricMode mode) {
    if (n < 1 || dim < 1 || box <= 0.0)
        throw ValidationError("uniform-box: invalid parameters");
    Rng rng(seed);
    std::vector<double> coords(static_cast<std::size_t>(n) * dim);
    for (double& c : coords) c = rng.next_double() * box;
    return Instance::from_points(std::move(coords), dim, {}, mode);
}

Instance gen_path(int n) {
    if (n < 1) throw ValidationError("path: n must be >= 1");
    std::vector<double> matrix(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            matrix[static_cast<std::size_t>(i) * n + j] = std::abs(i - j);
    return Instance::from_matrix(std::move(matrix), n, {});
}

Instance gen_counterexample_5pt(double D, MetricMode mode) {
    if (D <= 0.0) throw ValidationError("counterexample-5pt: D must be > 0");
    const std::vector<double> coords = {
        0.0, 1.0,   // blue
        0.0, 0.0,   // blue
        0.0, -1.0,  // blue
        -D,  0.0,   // red
        D,   0.0,   // red
    };
    return Instance::from_points(coords, 2, {}, mode);
}

std::vector<double> gen_log_uniform_weights(int n, double lo, double hi,
                                            std::uint64_t seed) {
    if (lo <= 0.0 || hi <= lo)
        throw ValidationError("log-uniform weights: need 0 < lo < hi");
    Rng rng(seed);
    std::vector<double> w(n);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (double& x : w) x = std::exp(llo + rng.next_double() * (lhi - llo));
    return w;
}

}  // namespace sskm
