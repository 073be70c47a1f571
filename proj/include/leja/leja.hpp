// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "leja/compact_set.hpp"

namespace leja {

/// How the free starting point x_0 is chosen.
struct X0Policy {
    enum class Kind { LeftEnd, RightEnd, Given };
    Kind kind = Kind::RightEnd;
    double value = 0.0;

    static X0Policy left_end() { return {Kind::LeftEnd, 0.0}; }
    static X0Policy right_end() { return {Kind::RightEnd, 0.0}; }
    static X0Policy given(double x) { return {Kind::Given, x}; }
};

/// Ordered Leja or tau-quasi-Leja nodes with provenance.
///
/// achieved_ratios[k] is prod_{j<k}|x_k - x_j| divided by the step-k maximum
/// found by grid search plus refinement; entry 0 is 1 by convention.
/// log_step_max[k] is the log of that maximum (0 for k = 0).
struct PointSequence {
    std::vector<double> points;
    double tau = 1.0;
    double grid_density = 0.0;
    std::uint64_t rng_seed = 0;
    std::vector<double> achieved_ratios;
    std::vector<double> log_step_max;

    [[nodiscard]] std::size_t size() const noexcept { return points.size(); }
};

inline constexpr double kDefaultLejaDensity = 1e5;

/// Greedy Leja sequence: step k maximizes sum_j log|x - x_j| over a grid of K,
/// then polishes the maximizer by Brent search inside the two neighbouring
/// cells. Ties go to the smallest x.
[[nodiscard]] PointSequence leja_sequence(const CompactSet& k, std::size_t n,
                                          X0Policy x0 = X0Policy::right_end(),
                                          double grid_density = kDefaultLejaDensity);

/// tau-quasi-Leja sequence: at every step the next point is drawn uniformly
/// (seeded) among grid points whose product is at least tau times the step
/// maximum, the refined maximizer included. tau == 1 reproduces leja_sequence.
[[nodiscard]] PointSequence quasi_leja_sequence(const CompactSet& k, std::size_t n, double tau,
                                                std::uint64_t rng_seed,
                                                double grid_density = kDefaultLejaDensity,
                                                X0Policy x0 = X0Policy::right_end());

struct QuasiLejaAudit {
    bool ok = true;
    double worst_ratio = 1.0;
    std::size_t worst_k = 0;
};

/// Recompute every step maximum on an independent grid of `audit_density` and
/// check prod_{j<k}|x_k - x_j| >= tau (1 - slack) max_K prod_{j<k}|x - x_j|.
[[nodiscard]] QuasiLejaAudit verify_quasi_leja(const PointSequence& seq, const CompactSet& k,
                                               double tau, double audit_density,
                                               double slack = 1e-6);

/// Smallest pairwise distance; requires at least two points.
[[nodiscard]] double min_separation(std::span<const double> points);
[[nodiscard]] inline double min_separation(const PointSequence& seq) {
    return min_separation(seq.points);
}

struct SeparationReport {
    bool ok = true;
    double min_separation = 0.0;
    /// min over delta of (min_separation - tau delta exp(-n G(delta))).
    double worst_margin = 0.0;
    double worst_delta = 0.0;
};

/// Check |x_i - x_j| >= tau delta exp(-n G(delta)) at each supplied delta,
/// with g_values[i] = G(deltas[i]).
[[nodiscard]] SeparationReport check_separation(const PointSequence& seq,
                                                std::span<const double> deltas,
                                                std::span<const double> g_values,
                                                double slack = 1e-12);

/// sum_j log|x - x_j|, -inf if x is a node.
[[nodiscard]] double log_abs_product(double x, std::span<const double> nodes) noexcept;

}  // namespace leja
