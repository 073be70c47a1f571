// SPDX-License-Identifier: MIT
#include "leja/leja.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "leja/errors.hpp"
#include "leja/optimize.hpp"

namespace leja {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Relative tolerance under which two log-products count as a tie.
double tie_tol(double v) noexcept { return 1e-12 * (1.0 + std::abs(v)); }

// Running objective sum_j log|g_i - x_j| over a fixed grid of K.
class GridObjective {
public:
    GridObjective(const CompactSet& k, double density) : set_(k), grid_(grid(k, density, 2)) {
        vals_.assign(grid_.size(), 0.0);
    }

    [[nodiscard]] std::size_t size() const noexcept { return grid_.size(); }
    [[nodiscard]] double x(std::size_t i) const noexcept { return grid_[i]; }
    [[nodiscard]] double value(std::size_t i) const noexcept { return vals_[i]; }

    void add_node(double node) {
        nodes_.push_back(node);
        for (std::size_t i = 0; i < grid_.size(); ++i) {
            const double d = std::abs(grid_[i] - node);
            vals_[i] = d == 0.0 ? kNegInf : vals_[i] + std::log(d);
        }
    }

    struct Max {
        double x;          // maximizer (refined or grid)
        double value;      // log of the step maximum
        std::size_t cell;  // grid index of the discrete argmax
        bool refined;      // true if refinement beat the grid value
        double grid_value;
    };

    // Discrete argmax (smallest x on ties) followed by refinement within the
    // neighbouring cells of the same component.
    [[nodiscard]] Max maximum() const {
        double best = kNegInf;
        for (double v : vals_) best = std::max(best, v);
        if (!std::isfinite(best)) throw ValidationError("leja: grid exhausted by nodes");
        std::size_t arg = 0;
        while (vals_[arg] < best - tie_tol(best)) ++arg;

        const double xa = grid_[arg];
        const auto comp = set_.component_of(xa);
        double lo = xa, hi = xa;
        if (arg > 0 && set_.component_of(grid_[arg - 1]) == comp) lo = grid_[arg - 1];
        if (arg + 1 < grid_.size() && set_.component_of(grid_[arg + 1]) == comp) hi = grid_[arg + 1];
        const auto [rx, rv] = refine_max([&](double t) { return log_abs_product(t, nodes_); }, lo, hi);
        if (rv > vals_[arg]) return {rx, rv, arg, true, vals_[arg]};
        return {xa, vals_[arg], arg, false, vals_[arg]};
    }

    [[nodiscard]] std::span<const double> nodes() const noexcept { return nodes_; }

private:
    const CompactSet& set_;
    std::vector<double> grid_;
    std::vector<double> vals_;
    std::vector<double> nodes_;
};

double resolve_x0(const CompactSet& k, X0Policy p) {
    switch (p.kind) {
        case X0Policy::Kind::LeftEnd: return k.lo();
        case X0Policy::Kind::RightEnd: return k.hi();
        case X0Policy::Kind::Given:
            if (!std::isfinite(p.value) || !k.contains(p.value))
                throw ValidationError("leja: x0 = " + std::to_string(p.value) + " is not in K");
            return p.value;
    }
    return k.hi();
}

void check_request(const GridObjective& obj, std::size_t n) {
    if (n < 1) throw ValidationError("leja: n must be >= 1");
    if (n > obj.size())
        throw ValidationError("leja: n = " + std::to_string(n) + " exceeds the " +
                              std::to_string(obj.size()) + " grid nodes at this density");
}

}  // namespace

double log_abs_product(double x, std::span<const double> nodes) noexcept {
    double s = 0.0;
    for (double xj : nodes) {
        const double d = std::abs(x - xj);
        if (d == 0.0) return kNegInf;
        s += std::log(d);
    }
    return s;
}

PointSequence leja_sequence(const CompactSet& k, std::size_t n, X0Policy x0, double grid_density) {
    GridObjective obj(k, grid_density);
    check_request(obj, n);

    PointSequence seq;
    seq.tau = 1.0;
    seq.grid_density = grid_density;
    seq.points.reserve(n);
    seq.points.push_back(resolve_x0(k, x0));
    seq.achieved_ratios.push_back(1.0);
    seq.log_step_max.push_back(0.0);
    obj.add_node(seq.points.back());

    for (std::size_t step = 1; step < n; ++step) {
        const auto m = obj.maximum();
        seq.points.push_back(m.x);
        seq.achieved_ratios.push_back(1.0);
        seq.log_step_max.push_back(m.value);
        obj.add_node(m.x);
    }
    return seq;
}

PointSequence quasi_leja_sequence(const CompactSet& k, std::size_t n, double tau,
                                  std::uint64_t rng_seed, double grid_density, X0Policy x0) {
    if (!(tau > 0.0 && tau <= 1.0)) throw ValidationError("quasi_leja: tau must lie in (0, 1]");
    if (tau == 1.0) {
        auto seq = leja_sequence(k, n, x0, grid_density);
        seq.rng_seed = rng_seed;
        return seq;
    }
    GridObjective obj(k, grid_density);
    check_request(obj, n);

    PointSequence seq;
    seq.tau = tau;
    seq.grid_density = grid_density;
    seq.rng_seed = rng_seed;
    seq.points.push_back(resolve_x0(k, x0));
    seq.achieved_ratios.push_back(1.0);
    seq.log_step_max.push_back(0.0);
    obj.add_node(seq.points.back());

    std::mt19937_64 rng(rng_seed);
    const double log_tau = std::log(tau);
    std::vector<std::size_t> eligible;
    for (std::size_t step = 1; step < n; ++step) {
        const auto m = obj.maximum();
        const double threshold = m.value + log_tau;
        eligible.clear();
        for (std::size_t i = 0; i < obj.size(); ++i) {
            if (obj.value(i) >= threshold) eligible.push_back(i);
        }
        // The refined maximizer is a candidate in its own right.
        const std::size_t count = eligible.size() + (m.refined ? 1 : 0);
        std::uniform_int_distribution<std::size_t> pick(0, count - 1);
        const std::size_t c = pick(rng);
        double x, v;
        if (c < eligible.size()) {
            x = obj.x(eligible[c]);
            v = obj.value(eligible[c]);
        } else {
            x = m.x;
            v = m.value;
        }
        seq.points.push_back(x);
        seq.achieved_ratios.push_back(std::exp(v - m.value));
        seq.log_step_max.push_back(m.value);
        obj.add_node(x);
    }
    return seq;
}

QuasiLejaAudit verify_quasi_leja(const PointSequence& seq, const CompactSet& k, double tau,
                                 double audit_density, double slack) {
    QuasiLejaAudit out;
    if (seq.points.empty()) return out;
    GridObjective obj(k, audit_density);
    obj.add_node(seq.points[0]);
    for (std::size_t step = 1; step < seq.points.size(); ++step) {
        const auto m = obj.maximum();
        const double achieved = log_abs_product(seq.points[step], obj.nodes());
        const double ratio = std::exp(achieved - m.value);
        if (step == 1 || ratio < out.worst_ratio) {
            out.worst_ratio = ratio;
            out.worst_k = step;
        }
        obj.add_node(seq.points[step]);
    }
    out.ok = out.worst_ratio >= tau * (1.0 - slack);
    return out;
}

double min_separation(std::span<const double> points) {
    if (points.size() < 2) throw ValidationError("min_separation: need at least two points");
    std::vector<double> s(points.begin(), points.end());
    std::sort(s.begin(), s.end());
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < s.size(); ++i) best = std::min(best, s[i] - s[i - 1]);
    return best;
}

SeparationReport check_separation(const PointSequence& seq, std::span<const double> deltas,
                                  std::span<const double> g_values, double slack) {
    if (deltas.size() != g_values.size())
        throw ValidationError("check_separation: deltas and G values differ in length");
    SeparationReport rep;
    rep.min_separation = min_separation(seq);
    rep.worst_margin = std::numeric_limits<double>::infinity();
    const double n = static_cast<double>(seq.size());
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        const double lower = seq.tau * deltas[i] * std::exp(-n * g_values[i]);
        const double margin = rep.min_separation - lower;
        if (margin < rep.worst_margin) {
            rep.worst_margin = margin;
            rep.worst_delta = deltas[i];
        }
    }
    rep.ok = rep.worst_margin >= -slack;
    return rep;
}

}  // namespace leja
