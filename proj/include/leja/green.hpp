// SPDX-License-Identifier: MIT
#pragma once

#include <span>
#include <vector>

#include "leja/compact_set.hpp"

namespace leja {

/// Equilibrium measure and Green's function of the complement of a finite
/// union of intervals E = U [a_j, b_j] with pole at infinity.
///
/// The equilibrium density is
///     w(t) = |h(t)| / (pi * sqrt(prod_j |t - a_j| |t - b_j|)),
/// where h has degree N-1 and is fixed by N-1 vanishing gap integrals plus
/// unit total mass. The Green function is g(z) = U(z) + F with
/// U(z) = int log|z - t| dmu(t) and F the Robin constant.
///
/// h is stored in the Chebyshev basis T_k(u), u = (t - center) / halfwidth of
/// the convex hull of E, which stays well-conditioned for many components.
class GreenModel {
public:
    [[nodiscard]] const CompactSet& set() const noexcept { return set_; }
    [[nodiscard]] std::span<const double> density_coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] double robin_constant() const noexcept { return robin_; }
    [[nodiscard]] int quadrature_order() const noexcept { return order_; }

    /// |1 - total mass| at twice the accepted quadrature order.
    [[nodiscard]] double mass_error() const noexcept { return mass_error_; }
    /// Largest |gap integral| relative to the gap's integral of |h|/sqrt.
    [[nodiscard]] double gap_residual() const noexcept { return gap_residual_; }
    /// max_j |g(mid of component j)|, the consistency of F across components.
    [[nodiscard]] double robin_residual() const noexcept { return robin_residual_; }
    /// 2-norm condition number of the (row-scaled) linear system.
    [[nodiscard]] double condition_number() const noexcept { return cond_; }

    [[nodiscard]] double h(double t) const noexcept;
    /// Equilibrium density w(t); zero outside E.
    [[nodiscard]] double density(double t) const noexcept;
    /// Logarithmic potential of the equilibrium measure.
    [[nodiscard]] double potential(Complex z) const;

    /// Density in the cosine variable of component j:
    /// dmu = weight(j, theta) dtheta / pi, t = mid_j + half_j cos(theta).
    [[nodiscard]] double theta_weight(std::size_t j, double theta) const noexcept;

private:
    friend GreenModel build_green_model(const CompactSet& k, int quadrature_order);
    explicit GreenModel(CompactSet k) : set_(std::move(k)) {}

    /// log sqrt(prod over all endpoints except those of `skip_lo`, `skip_hi` of |t - e|).
    [[nodiscard]] double log_sqrt_other(double t, double skip_lo, double skip_hi) const noexcept;

    CompactSet set_;
    std::vector<double> coeffs_;
    double center_ = 0.0;
    double halfwidth_ = 1.0;
    double robin_ = 0.0;
    int order_ = 0;
    double mass_error_ = 0.0;
    double gap_residual_ = 0.0;
    double robin_residual_ = 0.0;
    double cond_ = 1.0;
};

inline constexpr int kMinQuadratureOrder = 16;
inline constexpr int kMaxQuadratureOrder = 1 << 15;

/// Solve for the equilibrium density of K. The Gauss-Chebyshev order per
/// interval and gap doubles from `quadrature_order` until the mass error at
/// twice the order is below 1e-10.
[[nodiscard]] GreenModel build_green_model(const CompactSet& k, int quadrature_order = 32);

/// Closed-form Green function of the complement of the single interval [a, b].
[[nodiscard]] double green_interval_analytic(double a, double b, Complex z);

/// g(z) >= 0; exactly 0 for real z in K.
[[nodiscard]] double green_value(const GreenModel& model, Complex z);

/// Logarithmic capacity exp(-F).
[[nodiscard]] double capacity(const GreenModel& model) noexcept;

inline constexpr int kDefaultBoundarySamples = 64;

/// G(delta) = max { g(z) : dist(z, K) <= 2 delta }, taken over the boundary
/// curves (stadiums) of the fattened components.
[[nodiscard]] double g_of_delta(const GreenModel& model, double delta,
                                int boundary_samples = kDefaultBoundarySamples);

}  // namespace leja
