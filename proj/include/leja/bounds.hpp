// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <mutex>
#include <vector>

#include "leja/compact_set.hpp"
#include "leja/green.hpp"

namespace leja {

/// Positive root of e^{e^l}(e^l - 1) = 1 by bisection on [0.1, 0.5],
/// stopped once |f| <= tol.
[[nodiscard]] double lambda_const(double tol = 1e-10);

/// The same root to full double precision, computed once.
[[nodiscard]] double lambda_constant();

/// Memoized delta -> G(delta) for one Green model. Thread-safe.
class GTable {
public:
    explicit GTable(const GreenModel& model, int boundary_samples = kDefaultBoundarySamples)
        : model_(&model), samples_(boundary_samples) {}

    [[nodiscard]] double operator()(double delta) const;
    [[nodiscard]] const GreenModel& model() const noexcept { return *model_; }
    [[nodiscard]] std::size_t cached() const;

private:
    const GreenModel* model_;
    int samples_;
    mutable std::mutex mu_;
    mutable std::map<double, double> cache_;
};

/// log of 2n [diam/delta e^{n G}]^{9/8}.
[[nodiscard]] double theorem1_log_bound(double diam, std::size_t n, double delta, double g) noexcept;

/// log of (2/tau^2) n [diam/(tau delta) e^{n G}]^{9/8 + 2 log(1/tau)/lambda}.
[[nodiscard]] double theorem2_log_bound(double diam, std::size_t n, double tau, double delta,
                                        double g) noexcept;

/// Bound values; +inf when the exponent overflows.
[[nodiscard]] double theorem1_bound(const CompactSet& k, const GreenModel& model, std::size_t n,
                                    double delta);
[[nodiscard]] double theorem1_bound(const CompactSet& k, const GTable& g, std::size_t n, double delta);
[[nodiscard]] double theorem2_bound(const CompactSet& k, const GreenModel& model, std::size_t n,
                                    double tau, double delta);
[[nodiscard]] double theorem2_bound(const CompactSet& k, const GTable& g, std::size_t n, double tau,
                                    double delta);

/// Log-spaced delta grid [lo_factor diam, hi_factor diam]. The grid is
/// widened by a decade whenever the discrete minimizer sits on an end, then
/// Brent-refined in log(delta) around it.
struct DeltaGridSpec {
    double lo_factor = 1e-4;
    double hi_factor = 1.0;
    int points = 64;
    bool refine = true;
    int max_widen = 8;
};

struct BoundReport {
    std::size_t n = 0;
    double tau = 1.0;
    std::vector<double> delta_grid;
    std::vector<double> G_values;
    std::vector<double> bound_values;
    std::vector<double> log_bound_values;
    double best_delta = 0.0;
    double best_bound = 0.0;
    double best_log_bound = 0.0;
    /// True when the minimizer is strictly inside the (possibly widened) grid.
    bool interior = false;
};

[[nodiscard]] BoundReport theorem1_bound_opt(const CompactSet& k, const GTable& g, std::size_t n,
                                             const DeltaGridSpec& spec = {});
[[nodiscard]] BoundReport theorem2_bound_opt(const CompactSet& k, const GTable& g, std::size_t n,
                                             double tau, const DeltaGridSpec& spec = {});

struct SubexponentialWitness {
    double epsilon = 0.0;
    double delta = 0.0;       // chosen with G(delta) < (8/9) epsilon
    double g_delta = 0.0;
    std::size_t n0 = 0;       // (1/n) log theorem1_bound(n, delta) < epsilon for n >= n0
};

/// Pick delta with G(delta) < (8/9) eps, then the first n from which the
/// fixed-delta bound grows slower than e^{eps n}.
[[nodiscard]] SubexponentialWitness subexponential_threshold(const CompactSet& k, const GTable& g,
                                                             double epsilon);

/// Least-squares slope of log y against log x.
[[nodiscard]] double log_log_slope(std::span<const double> x, std::span<const double> y);

}  // namespace leja
