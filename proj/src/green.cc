// SPDX-License-Identifier: MIT
#include "leja/green.hpp"

#include <Eigen/Dense>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "leja/errors.hpp"
#include "leja/optimize.hpp"

namespace leja {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMassTol = 1e-10;
constexpr double kPotentialTol = 1e-14;

double clenshaw(std::span<const double> c, double u) noexcept {
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = c.size(); k-- > 1;) {
        const double b0 = 2.0 * u * b1 - b2 + c[k];
        b2 = b1;
        b1 = b0;
    }
    return u * b1 - b2 + c[0];
}

// T_0..T_{n-1} at u.
void chebyshev_row(double u, std::span<double> out) noexcept {
    if (out.empty()) return;
    out[0] = 1.0;
    if (out.size() > 1) out[1] = u;
    for (std::size_t k = 2; k < out.size(); ++k) out[k] = 2.0 * u * out[k - 1] - out[k - 2];
}

boost::math::quadrature::tanh_sinh<double>& integrator() {
    thread_local boost::math::quadrature::tanh_sinh<double> ts(15);
    return ts;
}

// Gauss-Chebyshev node theta_m of an order-M rule on [0, pi].
double gc_theta(int m, int order) noexcept {
    return (2.0 * m + 1.0) * kPi / (2.0 * order);
}

}  // namespace

double GreenModel::log_sqrt_other(double t, double skip_lo, double skip_hi) const noexcept {
    double s = 0.0;
    for (const auto& iv : set_.intervals()) {
        if (iv.lo != skip_lo && iv.lo != skip_hi) s += std::log(std::abs(t - iv.lo));
        if (iv.hi != skip_lo && iv.hi != skip_hi) s += std::log(std::abs(t - iv.hi));
    }
    return 0.5 * s;
}

double GreenModel::h(double t) const noexcept {
    return clenshaw(coeffs_, (t - center_) / halfwidth_);
}

double GreenModel::density(double t) const noexcept {
    if (!set_.contains(t)) return 0.0;
    double log_r = 0.0;
    for (const auto& iv : set_.intervals()) {
        log_r += std::log(std::abs(t - iv.lo)) + std::log(std::abs(t - iv.hi));
    }
    return std::abs(h(t)) * std::exp(-0.5 * log_r) / kPi;
}

double GreenModel::theta_weight(std::size_t j, double theta) const noexcept {
    const auto& iv = set_[j];
    const double t = iv.mid() + 0.5 * iv.length() * std::cos(theta);
    return std::abs(h(t)) * std::exp(-log_sqrt_other(t, iv.lo, iv.hi));
}

double GreenModel::potential(Complex z) const {
    const double x = z.real();
    const double y2 = z.imag() * z.imag();
    auto& ts = integrator();
    double total = 0.0;
    for (std::size_t j = 0; j < set_.size(); ++j) {
        const auto& iv = set_[j];
        const double half = 0.5 * iv.length();
        const double c = (x - iv.mid()) / half;
        auto term = [&](double theta, double x_minus_t) {
            const double d2 = std::max(x_minus_t * x_minus_t + y2, std::numeric_limits<double>::min());
            return 0.5 * std::log(d2) * theta_weight(j, theta);
        };
        double part = 0.0;
        if (c > -1.0 && c < 1.0) {
            // x - t = half (cos s - cos theta) = 2 half sin((theta+s)/2) sin((theta-s)/2),
            // with theta - s taken from the endpoint complement near the split s.
            const double split = std::acos(c);
            auto x_minus_t = [&](double theta, double dtheta) {
                return 2.0 * half * std::sin(0.5 * (theta + split)) * std::sin(0.5 * dtheta);
            };
            auto left = [&](double theta, double tc) {
                const double d = tc > 0.0 ? -tc : theta - split;
                return term(theta, x_minus_t(theta, d));
            };
            auto right = [&](double theta, double tc) {
                const double d = tc < 0.0 ? -tc : theta - split;
                return term(theta, x_minus_t(theta, d));
            };
            part = ts.integrate(left, 0.0, split, kPotentialTol) +
                   ts.integrate(right, split, kPi, kPotentialTol);
        } else {
            auto whole = [&](double theta, double) {
                const double e = c >= 1.0 ? (x - iv.hi) + 2.0 * half * std::pow(std::sin(0.5 * theta), 2)
                                          : (x - iv.lo) - 2.0 * half * std::pow(std::cos(0.5 * theta), 2);
                return term(theta, e);
            };
            part = ts.integrate(whole, 0.0, kPi, kPotentialTol);
        }
        total += part / kPi;
    }
    return total;
}

GreenModel build_green_model(const CompactSet& k, int quadrature_order) {
    if (quadrature_order < kMinQuadratureOrder)
        throw ValidationError("green: quadrature_order must be >= " +
                              std::to_string(kMinQuadratureOrder));
    GreenModel model(k);
    const std::size_t n = k.size();
    model.center_ = 0.5 * (k.lo() + k.hi());
    model.halfwidth_ = 0.5 * diam(k);

    std::vector<double> row(n);
    // Integral of T_k / sqrt(other) over a segment [lo, hi] whose own endpoint
    // factors are absorbed by the cosine substitution; result scaled by 1/pi.
    auto segment_moments = [&](double lo, double hi, int order, std::span<double> acc) {
        std::fill(acc.begin(), acc.end(), 0.0);
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        for (int m = 0; m < order; ++m) {
            const double t = mid + half * std::cos(gc_theta(m, order));
            chebyshev_row((t - model.center_) / model.halfwidth_, row);
            const double w = std::exp(-model.log_sqrt_other(t, lo, hi));
            for (std::size_t c = 0; c < n; ++c) acc[c] += row[c] * w;
        }
        for (auto& a : acc) a /= order;
    };
    // Same segment, integrating h itself: returns (signed, absolute) pair.
    auto segment_h = [&](double lo, double hi, int order) {
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        double s = 0.0, a = 0.0;
        for (int m = 0; m < order; ++m) {
            const double t = mid + half * std::cos(gc_theta(m, order));
            const double v = model.h(t) * std::exp(-model.log_sqrt_other(t, lo, hi));
            s += v;
            a += std::abs(v);
        }
        return std::pair{s / order, a / order};
    };

    int order = quadrature_order;
    std::vector<double> acc(n);
    for (;;) {
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                                  static_cast<Eigen::Index>(n));
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
        for (std::size_t g = 0; g + 1 < n; ++g) {
            segment_moments(k[g].hi, k[g + 1].lo, order, acc);
            double scale = 0.0;
            for (double v : acc) scale = std::max(scale, std::abs(v));
            for (std::size_t c = 0; c < n; ++c)
                a(static_cast<Eigen::Index>(g), static_cast<Eigen::Index>(c)) = acc[c] / scale;
        }
        const auto last = static_cast<Eigen::Index>(n - 1);
        for (std::size_t j = 0; j < n; ++j) {
            segment_moments(k[j].lo, k[j].hi, order, acc);
            // h is positive on the rightmost component and alternates leftwards.
            const double sign = ((n - 1 - j) % 2 == 0) ? 1.0 : -1.0;
            for (std::size_t c = 0; c < n; ++c)
                a(last, static_cast<Eigen::Index>(c)) += sign * acc[c];
        }
        rhs(last) = 1.0;

        Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
        const auto& sv = svd.singularValues();
        const double cond = sv(0) / sv(sv.size() - 1);
        if (!std::isfinite(cond) || cond > 1e14)
            throw InternalError("green: singular density system (condition number " +
                                std::to_string(cond) + ")");
        const Eigen::VectorXd sol = a.fullPivLu().solve(rhs);
        model.coeffs_.assign(sol.data(), sol.data() + sol.size());
        model.cond_ = cond;

        const int check = 2 * order;
        double mass = 0.0, gap_res = 0.0;
        for (std::size_t j = 0; j < n; ++j) mass += segment_h(k[j].lo, k[j].hi, check).second;
        for (std::size_t g = 0; g + 1 < n; ++g) {
            const auto [s, ab] = segment_h(k[g].hi, k[g + 1].lo, check);
            gap_res = std::max(gap_res, std::abs(s) / ab);
        }
        model.mass_error_ = std::abs(mass - 1.0);
        model.gap_residual_ = gap_res;
        model.order_ = order;
        if (model.mass_error_ < kMassTol && gap_res < kMassTol) break;
        if (check > kMaxQuadratureOrder)
            throw InternalError("green: quadrature did not converge (mass error " +
                                std::to_string(model.mass_error_) + ")");
        order = check;
    }

    model.robin_ = -model.potential(Complex(k[0].mid(), 0.0));
    double res = 0.0;
    for (const auto& iv : k.intervals()) {
        res = std::max(res, std::abs(model.potential(Complex(iv.mid(), 0.0)) + model.robin_));
    }
    model.robin_residual_ = res;
    return model;
}

double green_interval_analytic(double a, double b, Complex z) {
    if (!(a < b)) throw ValidationError("green_interval_analytic: need a < b");
    if (z.imag() == 0.0 && a <= z.real() && z.real() <= b) return 0.0;
    const Complex w = (2.0 * z - a - b) / (b - a);
    // sqrt(w-1)*sqrt(w+1) is the branch of sqrt(w^2-1) with |w + .| >= 1 off [-1,1].
    const Complex v = w + std::sqrt(w - 1.0) * std::sqrt(w + 1.0);
    return std::max(0.0, std::abs(std::log(std::abs(v))));
}

double green_value(const GreenModel& model, Complex z) {
    if (z.imag() == 0.0 && model.set().contains(z.real())) return 0.0;
    return std::max(0.0, model.potential(z) + model.robin_constant());
}

double capacity(const GreenModel& model) noexcept {
    return std::exp(-model.robin_constant());
}

double g_of_delta(const GreenModel& model, double delta, int boundary_samples) {
    if (!(delta > 0.0) || !std::isfinite(delta))
        throw ValidationError("g_of_delta: delta must be positive and finite");
    boundary_samples = std::max(boundary_samples, 3);
    const double r = 2.0 * delta;
    double best = 0.0;

    // Every stadium boundary point lies in the closed 2*delta-neighbourhood and
    // the union of stadium boundaries contains its outer boundary, so the max
    // over all traced points equals G(delta). Conjugate symmetry: upper half only.
    for (const auto& iv : model.set().intervals()) {
        const double a = iv.lo, b = iv.hi;
        const double arc = 0.5 * kPi * r;
        const double len = 2.0 * arc + (b - a);
        auto point = [&](double s) -> Complex {
            if (s <= 0.0) return {a - r, 0.0};
            if (s >= len) return {b + r, 0.0};
            if (s < arc) {
                const double phi = kPi - s / r;
                return {a + r * std::cos(phi), r * std::sin(phi)};
            }
            if (s <= arc + (b - a)) return {a + (s - arc), r};
            const double phi = 0.5 * kPi - (s - arc - (b - a)) / r;
            return {b + r * std::cos(phi), r * std::sin(phi)};
        };
        auto g_at = [&](double s) { return green_value(model, point(s)); };

        std::vector<double> vals(static_cast<std::size_t>(boundary_samples));
        std::size_t arg = 0;
        for (int i = 0; i < boundary_samples; ++i) {
            vals[static_cast<std::size_t>(i)] = g_at(len * i / (boundary_samples - 1));
            if (vals[static_cast<std::size_t>(i)] > vals[arg]) arg = static_cast<std::size_t>(i);
        }
        double comp_best = vals[arg];
        const double step = len / (boundary_samples - 1);
        const double lo = std::max(0.0, step * (static_cast<double>(arg) - 1.0));
        const double hi = std::min(len, step * (static_cast<double>(arg) + 1.0));
        comp_best = std::max(comp_best, refine_max(g_at, lo, hi).second);
        best = std::max(best, comp_best);
    }
    return best;
}

}  // namespace leja
