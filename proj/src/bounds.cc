// SPDX-License-Identifier: MIT
#include "leja/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "leja/errors.hpp"
#include "leja/optimize.hpp"

namespace leja {
namespace {

double lambda_equation(double l) { return std::exp(std::exp(l)) * (std::exp(l) - 1.0) - 1.0; }

double bisect_lambda(double tol, bool full_precision) {
    double lo = 0.1, hi = 0.5;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f = lambda_equation(mid);
        if (!full_precision && std::abs(f) <= tol) return mid;
        if (f < 0.0) lo = mid; else hi = mid;
        if (!(lo < 0.5 * (lo + hi) && 0.5 * (lo + hi) < hi)) break;
    }
    return 0.5 * (lo + hi);
}

double exp_or_inf(double log_v) noexcept {
    return log_v > std::log(std::numeric_limits<double>::max())
               ? std::numeric_limits<double>::infinity()
               : std::exp(log_v);
}

void check_args(std::size_t n, double delta) {
    if (n < 1) throw ValidationError("bound: n must be >= 1");
    if (!(delta > 0.0) || !std::isfinite(delta)) throw ValidationError("bound: delta must be positive");
}

template <class LogBound>
BoundReport optimize_delta(const CompactSet& k, const GTable& g, std::size_t n, double tau,
                           const DeltaGridSpec& spec, LogBound&& log_bound) {
    if (spec.points < 3 || !(spec.lo_factor > 0.0) || !(spec.hi_factor > spec.lo_factor))
        throw ValidationError("bound: invalid delta grid");
    if (spec.hi_factor / spec.lo_factor < 100.0)
        throw ValidationError("bound: delta grid must cover at least two decades");

    const double d = diam(k);
    const double step = std::log(spec.hi_factor / spec.lo_factor) / (spec.points - 1);
    std::vector<double> logs;
    for (int i = 0; i < spec.points; ++i) logs.push_back(std::log(spec.lo_factor * d) + step * i);
    const int per_decade = std::max(1, static_cast<int>(std::ceil(std::log(10.0) / step)));

    BoundReport rep;
    rep.n = n;
    rep.tau = tau;
    std::size_t arg = 0;
    for (int widen = 0;; ++widen) {
        rep.delta_grid.clear();
        rep.G_values.clear();
        rep.log_bound_values.clear();
        for (double u : logs) {
            const double delta = std::exp(u);
            const double gv = g(delta);
            rep.delta_grid.push_back(delta);
            rep.G_values.push_back(gv);
            rep.log_bound_values.push_back(log_bound(delta, gv));
        }
        arg = static_cast<std::size_t>(std::min_element(rep.log_bound_values.begin(),
                                                        rep.log_bound_values.end()) -
                                       rep.log_bound_values.begin());
        const bool at_lo = arg == 0, at_hi = arg + 1 == logs.size();
        if ((!at_lo && !at_hi) || widen >= spec.max_widen) break;
        if (at_lo) {
            std::vector<double> ext;
            for (int i = per_decade; i >= 1; --i) ext.push_back(logs.front() - step * i);
            logs.insert(logs.begin(), ext.begin(), ext.end());
        } else {
            for (int i = 1; i <= per_decade; ++i) logs.push_back(logs.back() + step);
        }
    }
    rep.interior = arg > 0 && arg + 1 < logs.size();
    rep.bound_values.clear();
    for (double lb : rep.log_bound_values) rep.bound_values.push_back(exp_or_inf(lb));

    rep.best_delta = rep.delta_grid[arg];
    rep.best_log_bound = rep.log_bound_values[arg];
    if (spec.refine && rep.interior) {
        auto neg = [&](double u) {
            const double delta = std::exp(u);
            return -log_bound(delta, g(delta));
        };
        const auto [u, v] = refine_max(neg, logs[arg - 1], logs[arg + 1], 14, 40);
        if (-v < rep.best_log_bound) {
            rep.best_log_bound = -v;
            rep.best_delta = std::exp(u);
        }
    }
    rep.best_bound = exp_or_inf(rep.best_log_bound);
    return rep;
}

}  // namespace

double lambda_const(double tol) {
    if (!(tol > 0.0)) throw ValidationError("lambda_const: tol must be positive");
    return bisect_lambda(tol, false);
}

double lambda_constant() {
    static const double value = bisect_lambda(0.0, true);
    return value;
}

double GTable::operator()(double delta) const {
    {
        std::lock_guard lock(mu_);
        if (auto it = cache_.find(delta); it != cache_.end()) return it->second;
    }
    const double v = g_of_delta(*model_, delta, samples_);
    std::lock_guard lock(mu_);
    cache_.emplace(delta, v);
    return v;
}

std::size_t GTable::cached() const {
    std::lock_guard lock(mu_);
    return cache_.size();
}

double theorem1_log_bound(double diam, std::size_t n, double delta, double g) noexcept {
    const double nn = static_cast<double>(n);
    return std::log(2.0) + std::log(nn) + 1.125 * (std::log(diam) - std::log(delta) + nn * g);
}

double theorem2_log_bound(double diam, std::size_t n, double tau, double delta, double g) noexcept {
    const double nn = static_cast<double>(n);
    const double exponent = 1.125 + 2.0 * std::log(1.0 / tau) / lambda_constant();
    return std::log(2.0 / (tau * tau)) + std::log(nn) +
           exponent * (std::log(diam) - std::log(tau * delta) + nn * g);
}

double theorem1_bound(const CompactSet& k, const GreenModel& model, std::size_t n, double delta) {
    check_args(n, delta);
    return exp_or_inf(theorem1_log_bound(diam(k), n, delta, g_of_delta(model, delta)));
}

double theorem1_bound(const CompactSet& k, const GTable& g, std::size_t n, double delta) {
    check_args(n, delta);
    return exp_or_inf(theorem1_log_bound(diam(k), n, delta, g(delta)));
}

double theorem2_bound(const CompactSet& k, const GreenModel& model, std::size_t n, double tau,
                      double delta) {
    check_args(n, delta);
    if (!(tau > 0.0 && tau <= 1.0)) throw ValidationError("bound: tau must lie in (0, 1]");
    return exp_or_inf(theorem2_log_bound(diam(k), n, tau, delta, g_of_delta(model, delta)));
}

double theorem2_bound(const CompactSet& k, const GTable& g, std::size_t n, double tau, double delta) {
    check_args(n, delta);
    if (!(tau > 0.0 && tau <= 1.0)) throw ValidationError("bound: tau must lie in (0, 1]");
    return exp_or_inf(theorem2_log_bound(diam(k), n, tau, delta, g(delta)));
}

BoundReport theorem1_bound_opt(const CompactSet& k, const GTable& g, std::size_t n,
                               const DeltaGridSpec& spec) {
    check_args(n, 1.0);
    const double d = diam(k);
    return optimize_delta(k, g, n, 1.0, spec, [&](double delta, double gv) {
        return theorem1_log_bound(d, n, delta, gv);
    });
}

BoundReport theorem2_bound_opt(const CompactSet& k, const GTable& g, std::size_t n, double tau,
                               const DeltaGridSpec& spec) {
    check_args(n, 1.0);
    if (!(tau > 0.0 && tau <= 1.0)) throw ValidationError("bound: tau must lie in (0, 1]");
    const double d = diam(k);
    return optimize_delta(k, g, n, tau, spec, [&](double delta, double gv) {
        return theorem2_log_bound(d, n, tau, delta, gv);
    });
}

SubexponentialWitness subexponential_threshold(const CompactSet& k, const GTable& g, double epsilon) {
    if (!(epsilon > 0.0)) throw ValidationError("subexponential_threshold: epsilon must be positive");
    SubexponentialWitness w;
    w.epsilon = epsilon;
    const double d = diam(k);
    double delta = d;
    double gv = g(delta);
    for (int i = 0; i < 200 && !(gv < (8.0 / 9.0) * epsilon); ++i) {
        delta *= 0.5;
        gv = g(delta);
    }
    if (!(gv < (8.0 / 9.0) * epsilon)) throw InternalError("subexponential_threshold: no delta found");
    w.delta = delta;
    w.g_delta = gv;

    // (A + log n)/n + (9/8) G with A = log 2 + (9/8) log(d/delta); decreasing once log n > 1 - A.
    const double a = std::log(2.0) + 1.125 * std::log(d / delta);
    auto rate = [&](std::size_t n) { return theorem1_log_bound(d, n, delta, gv) / static_cast<double>(n); };
    std::size_t lo = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::exp(1.0 - a))));
    std::size_t hi = lo;
    while (!(rate(hi) < epsilon)) {
        if (hi > (std::size_t{1} << 60)) throw InternalError("subexponential_threshold: overflow");
        lo = hi;
        hi *= 2;
    }
    if (rate(lo) < epsilon) {
        w.n0 = lo;
        return w;
    }
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (rate(mid) < epsilon) hi = mid; else lo = mid;
    }
    w.n0 = hi;
    return w;
}

double log_log_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw ValidationError("log_log_slope: need >= 2 pairs");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace leja
