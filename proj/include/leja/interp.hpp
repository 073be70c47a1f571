// SPDX-License-Identifier: MIT
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "leja/compact_set.hpp"

namespace leja {

/// Lagrange interpolation on distinct real nodes x_0..x_{n-1}.
///
/// Barycentric weights w_k = 1 / prod_{j != k}(x_k - x_j) are kept as
/// (log|w_k|, sign) so that large n on small sets neither overflows nor
/// underflows.
class InterpolationOperator {
public:
    explicit InterpolationOperator(std::vector<double> nodes);

    [[nodiscard]] std::span<const double> nodes() const noexcept { return nodes_; }
    [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
    [[nodiscard]] double log_abs_weight(std::size_t k) const { return log_w_[k]; }
    [[nodiscard]] int weight_sign(std::size_t k) const { return sign_w_[k]; }

private:
    std::vector<double> nodes_;
    std::vector<double> log_w_;
    std::vector<int> sign_w_;
};

/// L_{k,n}(x); exact Kronecker delta at the nodes.
[[nodiscard]] double lagrange_basis(const InterpolationOperator& op, std::size_t k, double x);

/// T_n f(x) by the second (true) barycentric formula.
[[nodiscard]] std::complex<double> interpolate(const InterpolationOperator& op,
                                               std::span<const std::complex<double>> fvals,
                                               double x);

/// sum_k |L_{k,n}(x)|.
[[nodiscard]] double lebesgue_function(const InterpolationOperator& op, double x);

struct LebesgueReport {
    std::size_t n = 0;
    double lambda_n = 1.0;
    double argmax_x = 0.0;
    /// Set when the sample cap forced spacing above half the smallest node gap.
    bool coarse_grid_warning = false;
};

inline constexpr double kDefaultLebesgueDensity = 1000.0;

/// Lambda_n = max over K of the Lebesgue function. K is split at every node
/// (the function is a polynomial between consecutive nodes); each cell gets
/// at least 16 samples plus `grid_density` per unit length, and the best
/// sample of every cell is refined by Brent search.
[[nodiscard]] LebesgueReport lebesgue_constant(const InterpolationOperator& op, const CompactSet& k,
                                               double grid_density = kDefaultLebesgueDensity,
                                               std::size_t max_samples = std::size_t{1} << 22);

/// Sampled Lebesgue function (x, lambda(x)) on grid(K, density).
[[nodiscard]] std::vector<std::pair<double, double>> lebesgue_profile(
    const InterpolationOperator& op, const CompactSet& k, double density);

}  // namespace leja
