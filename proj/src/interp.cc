// SPDX-License-Identifier: MIT
#include "leja/interp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "leja/errors.hpp"
#include "leja/optimize.hpp"

namespace leja {

InterpolationOperator::InterpolationOperator(std::vector<double> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.empty()) throw ValidationError("interp: need at least one node");
    for (double x : nodes_) {
        if (!std::isfinite(x)) throw ValidationError("interp: non-finite node");
    }
    std::vector<double> sorted = nodes_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ValidationError("interp: nodes must be pairwise distinct");

    const std::size_t n = nodes_.size();
    log_w_.assign(n, 0.0);
    sign_w_.assign(n, 1);
    for (std::size_t k = 0; k < n; ++k) {
        double s = 0.0;
        int sign = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            const double d = nodes_[k] - nodes_[j];
            s -= std::log(std::abs(d));
            if (d < 0) sign = -sign;
        }
        log_w_[k] = s;
        sign_w_[k] = sign;
    }
}

double lagrange_basis(const InterpolationOperator& op, std::size_t k, double x) {
    const auto nodes = op.nodes();
    if (k >= nodes.size()) throw ValidationError("lagrange_basis: k out of range");
    double log_abs = op.log_abs_weight(k);
    int sign = op.weight_sign(k);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (j == k) continue;
        const double d = x - nodes[j];
        if (d == 0.0) return 0.0;
        log_abs += std::log(std::abs(d));
        if (d < 0) sign = -sign;
    }
    if (x == nodes[k]) return 1.0;
    return sign * std::exp(log_abs);
}

std::complex<double> interpolate(const InterpolationOperator& op,
                                 std::span<const std::complex<double>> fvals, double x) {
    const auto nodes = op.nodes();
    if (fvals.size() != nodes.size())
        throw ValidationError("interpolate: expected " + std::to_string(nodes.size()) + " values");
    double max_lw = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (x == nodes[k]) return fvals[k];
        max_lw = std::max(max_lw, op.log_abs_weight(k));
    }
    // The second form is invariant under a common rescaling of the weights.
    std::complex<double> num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const double w = op.weight_sign(k) * std::exp(op.log_abs_weight(k) - max_lw);
        const double c = w / (x - nodes[k]);
        num += c * fvals[k];
        den += c;
    }
    return num / den;
}

double lebesgue_function(const InterpolationOperator& op, double x) {
    const auto nodes = op.nodes();
    double log_ell = 0.0;
    for (double xj : nodes) {
        const double d = std::abs(x - xj);
        if (d == 0.0) return 1.0;
        log_ell += std::log(d);
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        sum += std::exp(op.log_abs_weight(k) + log_ell - std::log(std::abs(x - nodes[k])));
    }
    return sum;
}

LebesgueReport lebesgue_constant(const InterpolationOperator& op, const CompactSet& k,
                                 double grid_density, std::size_t max_samples) {
    if (!(grid_density > 0.0)) throw ValidationError("lebesgue_constant: density must be positive");
    const auto nodes = op.nodes();
    for (double x : nodes) {
        if (!k.contains(x))
            throw ValidationError("lebesgue_constant: node " + std::to_string(x) + " not in K");
    }
    LebesgueReport rep;
    rep.n = nodes.size();
    rep.argmax_x = nodes[0];
    rep.lambda_n = 1.0;
    if (nodes.size() == 1) return rep;

    std::vector<double> sorted(nodes.begin(), nodes.end());
    std::sort(sorted.begin(), sorted.end());
    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < sorted.size(); ++i) min_gap = std::min(min_gap, sorted[i] - sorted[i - 1]);

    // Cells: consecutive breakpoints (nodes and component endpoints) inside one component.
    std::vector<std::pair<double, double>> cells;
    for (const auto& iv : k.intervals()) {
        std::vector<double> br{iv.lo};
        for (double x : sorted) {
            if (x > iv.lo && x < iv.hi) br.push_back(x);
        }
        br.push_back(iv.hi);
        for (std::size_t i = 1; i < br.size(); ++i) cells.emplace_back(br[i - 1], br[i]);
    }

    constexpr std::size_t kMinCellSamples = 16;
    double density = grid_density;
    const auto requested = [&](double d) {
        double total = 0.0;
        for (const auto& [a, b] : cells)
            total += std::max<double>(kMinCellSamples, std::ceil((b - a) * d)) + 1.0;
        return total;
    };
    if (requested(density) > static_cast<double>(max_samples)) {
        density = grid_density * static_cast<double>(max_samples) / requested(grid_density);
        rep.coarse_grid_warning = 1.0 / density > 0.5 * min_gap;
    }

    auto lam = [&](double x) { return lebesgue_function(op, x); };
    for (const auto& [a, b] : cells) {
        const auto m = static_cast<std::size_t>(
            std::max<double>(kMinCellSamples, std::ceil((b - a) * density)));
        const double h = (b - a) / static_cast<double>(m);
        std::size_t arg = 0;
        double best = -1.0;
        for (std::size_t i = 0; i <= m; ++i) {
            const double x = i == m ? b : a + static_cast<double>(i) * h;
            const double v = lam(x);
            if (v > best) {
                best = v;
                arg = i;
            }
        }
        double bx = arg == m ? b : a + static_cast<double>(arg) * h;
        const double lo = arg == 0 ? a : a + static_cast<double>(arg - 1) * h;
        const double hi = arg >= m - 1 ? b : a + static_cast<double>(arg + 1) * h;
        const auto [rx, rv] = refine_max(lam, lo, hi);
        if (rv > best) {
            best = rv;
            bx = rx;
        }
        if (best > rep.lambda_n) {
            rep.lambda_n = best;
            rep.argmax_x = bx;
        }
    }
    return rep;
}

std::vector<std::pair<double, double>> lebesgue_profile(const InterpolationOperator& op,
                                                        const CompactSet& k, double density) {
    std::vector<std::pair<double, double>> out;
    for (double x : grid(k, density, 2)) out.emplace_back(x, lebesgue_function(op, x));
    return out;
}

}  // namespace leja
