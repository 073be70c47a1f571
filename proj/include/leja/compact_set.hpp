// SPDX-License-Identifier: MIT
#pragma once

#include <complex>
#include <initializer_list>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace leja {

using Complex = std::complex<double>;

struct Interval {
    double lo;
    double hi;

    [[nodiscard]] double length() const noexcept { return hi - lo; }
    [[nodiscard]] double mid() const noexcept { return 0.5 * (lo + hi); }
    [[nodiscard]] bool contains(double x) const noexcept { return lo <= x && x <= hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// A compact subset of the real line stored as a finite union of disjoint,
/// nondegenerate closed intervals sorted by left endpoint.
///
/// Instances are only produced by make_union / cantor_approx, so every
/// CompactSet is regular: hi_i < lo_{i+1}, lo_i < hi_i.
class CompactSet {
public:
    [[nodiscard]] std::span<const Interval> intervals() const noexcept { return intervals_; }
    [[nodiscard]] std::size_t size() const noexcept { return intervals_.size(); }
    [[nodiscard]] const Interval& operator[](std::size_t i) const { return intervals_[i]; }

    [[nodiscard]] double lo() const noexcept { return intervals_.front().lo; }
    [[nodiscard]] double hi() const noexcept { return intervals_.back().hi; }

    /// Sum of component lengths.
    [[nodiscard]] double measure() const noexcept;

    /// Index of the component containing x, or -1.
    [[nodiscard]] std::ptrdiff_t component_of(double x) const noexcept;
    [[nodiscard]] bool contains(double x) const noexcept { return component_of(x) >= 0; }

    friend bool operator==(const CompactSet&, const CompactSet&) = default;

private:
    friend CompactSet make_union(std::span<const std::pair<double, double>> pairs);
    friend CompactSet cantor_approx(int depth, double ratio);

    explicit CompactSet(std::vector<Interval> iv) : intervals_(std::move(iv)) {}

    std::vector<Interval> intervals_;
};

/// Build K from arbitrary closed intervals. Overlapping or touching intervals
/// are merged. Isolated single points are rejected since they make K irregular.
[[nodiscard]] CompactSet make_union(std::span<const std::pair<double, double>> pairs);
[[nodiscard]] CompactSet make_union(std::initializer_list<std::pair<double, double>> pairs);

/// Largest Cantor generation accepted by cantor_approx (2^depth intervals).
inline constexpr int kMaxCantorDepth = 20;

/// depth-th generation of the middle-gap Cantor construction on [0, 1]:
/// 2^depth intervals of length ratio^depth, ratio in (0, 1/2).
[[nodiscard]] CompactSet cantor_approx(int depth, double ratio);

[[nodiscard]] double diam(const CompactSet& k) noexcept;

/// Euclidean distance in the plane from z to the set.
[[nodiscard]] double dist_to_set(Complex z, const CompactSet& k) noexcept;

inline constexpr std::size_t kDefaultGridCap = std::size_t{1} << 26;

/// Deterministic sample of K: per component, equispaced points including both
/// endpoints with spacing <= 1/density and at least min_per_component points.
[[nodiscard]] std::vector<double> grid(const CompactSet& k, double density,
                                       int min_per_component = 2,
                                       std::size_t cap = kDefaultGridCap);

/// Sampled (diagnostic-only) estimate of the uniform perfectness constant:
/// the largest gamma such that every sampled annulus gamma*r <= |x - zeta| <= r,
/// x in K, r in (0, diam K), meets K.
[[nodiscard]] double perfectness_gamma(const CompactSet& k, int x_samples, int r_samples);

/// Largest |x - zeta| over zeta in K with |x - zeta| <= r, or -1 if none.
[[nodiscard]] double farthest_within(const CompactSet& k, double x, double r) noexcept;

}  // namespace leja
