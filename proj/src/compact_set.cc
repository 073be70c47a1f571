// SPDX-License-Identifier: MIT
#include "leja/compact_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "leja/errors.hpp"

namespace leja {

double CompactSet::measure() const noexcept {
    double m = 0.0;
    for (const auto& iv : intervals_) m += iv.length();
    return m;
}

std::ptrdiff_t CompactSet::component_of(double x) const noexcept {
    // First interval whose hi >= x.
    auto it = std::lower_bound(intervals_.begin(), intervals_.end(), x,
                               [](const Interval& iv, double v) { return iv.hi < v; });
    if (it == intervals_.end() || x < it->lo) return -1;
    return it - intervals_.begin();
}

CompactSet make_union(std::span<const std::pair<double, double>> pairs) {
    if (pairs.empty()) throw ValidationError("compact set: empty interval list");
    std::vector<Interval> iv;
    iv.reserve(pairs.size());
    for (const auto& [lo, hi] : pairs) {
        if (!std::isfinite(lo) || !std::isfinite(hi))
            throw ValidationError("compact set: non-finite endpoint");
        if (lo > hi)
            throw ValidationError("compact set: interval with lo > hi");
        iv.push_back({lo, hi});
    }
    std::sort(iv.begin(), iv.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });

    std::vector<Interval> merged;
    merged.push_back(iv.front());
    for (std::size_t i = 1; i < iv.size(); ++i) {
        if (iv[i].lo <= merged.back().hi) {
            merged.back().hi = std::max(merged.back().hi, iv[i].hi);
        } else {
            merged.push_back(iv[i]);
        }
    }
    for (const auto& m : merged) {
        if (!(m.lo < m.hi))
            throw ValidationError("compact set: isolated point " + std::to_string(m.lo) +
                                  " (polar component, K would not be regular)");
    }
    return CompactSet(std::move(merged));
}

CompactSet make_union(std::initializer_list<std::pair<double, double>> pairs) {
    return make_union(std::span<const std::pair<double, double>>(pairs.begin(), pairs.size()));
}

CompactSet cantor_approx(int depth, double ratio) {
    if (depth < 0) throw ValidationError("cantor: depth must be >= 0");
    if (depth > kMaxCantorDepth)
        throw ValidationError("cantor: depth " + std::to_string(depth) + " exceeds cap " +
                              std::to_string(kMaxCantorDepth));
    if (!(ratio > 0.0 && ratio < 0.5)) throw ValidationError("cantor: ratio must lie in (0, 1/2)");

    // Left endpoints only; every interval of generation d has length ratio^d.
    std::vector<double> left{0.0};
    double len = 1.0;
    for (int d = 0; d < depth; ++d) {
        const double next = len * ratio;
        std::vector<double> out;
        out.reserve(left.size() * 2);
        for (double a : left) {
            out.push_back(a);
            out.push_back(a + len - next);
        }
        left = std::move(out);
        len = next;
    }
    std::vector<Interval> iv;
    iv.reserve(left.size());
    for (double a : left) iv.push_back({a, a + len});
    // Keep the outer endpoints exact.
    iv.back().hi = 1.0;
    return CompactSet(std::move(iv));
}

double diam(const CompactSet& k) noexcept { return k.hi() - k.lo(); }

double dist_to_set(Complex z, const CompactSet& k) noexcept {
    const double x = z.real();
    const double y = std::abs(z.imag());
    double best = std::numeric_limits<double>::infinity();
    for (const auto& iv : k.intervals()) {
        const double dx = x < iv.lo ? iv.lo - x : (x > iv.hi ? x - iv.hi : 0.0);
        best = std::min(best, std::hypot(dx, y));
    }
    return best;
}

std::vector<double> grid(const CompactSet& k, double density, int min_per_component,
                         std::size_t cap) {
    if (!(density > 0.0) || !std::isfinite(density))
        throw ValidationError("grid: density must be positive and finite");
    min_per_component = std::max(min_per_component, 2);

    std::vector<std::size_t> counts;
    std::size_t total = 0;
    for (const auto& iv : k.intervals()) {
        const double segs = std::ceil(iv.length() * density);
        if (segs + 1.0 > static_cast<double>(cap))
            throw ValidationError("grid: size exceeds cap");
        const auto c = std::max<std::size_t>(static_cast<std::size_t>(segs) + 1,
                                              static_cast<std::size_t>(min_per_component));
        counts.push_back(c);
        total += c;
        if (total > cap) throw ValidationError("grid: size exceeds cap");
    }

    std::vector<double> out;
    out.reserve(total);
    for (std::size_t c = 0; c < k.size(); ++c) {
        const auto& iv = k[c];
        const std::size_t m = counts[c] - 1;
        const double h = iv.length() / static_cast<double>(m);
        out.push_back(iv.lo);
        for (std::size_t i = 1; i < m; ++i) out.push_back(iv.lo + static_cast<double>(i) * h);
        out.push_back(iv.hi);
    }
    return out;
}

double farthest_within(const CompactSet& k, double x, double r) noexcept {
    double best = -1.0;
    for (const auto& iv : k.intervals()) {
        const double lo = std::max(iv.lo, x - r);
        const double hi = std::min(iv.hi, x + r);
        if (lo > hi) continue;
        best = std::max({best, std::abs(x - lo), std::abs(x - hi)});
    }
    return best;
}

double perfectness_gamma(const CompactSet& k, int x_samples, int r_samples) {
    if (x_samples < 1 || r_samples < 2)
        throw ValidationError("perfectness_gamma: need x_samples >= 1 and r_samples >= 2");
    const double d = diam(k);
    const auto xs = grid(k, static_cast<double>(x_samples) / k.measure(), 2);

    const double r_lo = 1e-6 * d;
    const double r_hi = d * (1.0 - 1e-9);
    const double step = std::log(r_hi / r_lo) / (r_samples - 1);

    double gamma = 1.0;
    for (double x : xs) {
        for (int i = 0; i < r_samples; ++i) {
            const double r = r_lo * std::exp(step * i);
            const double far = farthest_within(k, x, r);
            gamma = std::min(gamma, std::max(far, 0.0) / r);
        }
    }
    return gamma;
}

}  // namespace leja
