// SPDX-License-Identifier: MIT
#include "leja/keylemma.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "leja/bounds.hpp"
#include "leja/errors.hpp"

namespace leja {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_ratio(double ref, double x) { return std::log(std::abs(ref - x)) - std::log(std::abs(x)); }

std::vector<std::size_t> breakpoints_from_switches(std::vector<std::size_t> switches, std::size_t q) {
    std::vector<std::size_t> bp{0};
    std::sort(switches.begin(), switches.end());
    bp.insert(bp.end(), switches.begin(), switches.end());
    bp.push_back(q);
    return bp;
}

// Fills reference/ratios/log_value from the switch set, which fully determines the path.
void finish_trace(StrategyTrace& tr, double tau) {
    const auto& x = tr.xs;
    const std::size_t q = x.size() - 1;
    std::vector<bool> sw(q + 1, false);
    for (std::size_t j : tr.switches) sw[j] = true;
    tr.reference.assign(q, 0.0);
    tr.ratios.assign(q > 0 ? q - 1 : 0, 0.0);
    double ref = x[q];
    double lv = std::log(1.0 / tau) - std::log(std::abs(x[q]));
    for (std::size_t j = q - 1;; --j) {
        tr.reference[j] = ref;
        if (j == 0) {
            lv += std::log(std::abs(ref));
            break;
        }
        tr.ratios[j - 1] = std::abs(ref - x[j]) / std::abs(x[j]);
        lv += log_ratio(ref, x[j]);
        if (sw[j]) {
            ref = x[j];
            lv += std::log(1.0 / tau);
        }
    }
    tr.log_value = lv;
    tr.breakpoints = breakpoints_from_switches(tr.switches, q);
    tr.m = tr.breakpoints.size() - 1;
}

}  // namespace

ITauInstance::ITauInstance(std::vector<double> xs, double tau) : xs_(std::move(xs)), tau_(tau) {
    if (xs_.size() < 2) throw ValidationError("itau: need q >= 1 (at least two points)");
    if (!(tau > 0.0 && tau <= 1.0)) throw ValidationError("itau: tau must lie in (0, 1]");
    for (double x : xs_) {
        if (!std::isfinite(x)) throw ValidationError("itau: non-finite point");
    }
    std::vector<double> s = xs_;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw ValidationError("itau: points must be pairwise distinct");
}

double ITauResult::value() const { return std::exp(log_value); }
double StrategyTrace::value() const { return std::exp(log_value); }

double i_tau_log_objective(const ITauInstance& inst, std::span<const std::size_t> bp) {
    const auto x = inst.xs();
    const std::size_t q = inst.q();
    if (bp.size() < 2 || bp.front() != 0 || bp.back() != q)
        throw ValidationError("itau: breakpoints must start at 0 and end at q");
    double lv = 0.0;
    for (std::size_t l = 0; l + 1 < bp.size(); ++l) {
        if (bp[l] >= bp[l + 1]) throw ValidationError("itau: breakpoints must be strictly increasing");
        lv += std::log(1.0 / inst.tau());
        for (std::size_t j = bp[l]; j < bp[l + 1]; ++j) lv += std::log(std::abs(x[bp[l + 1]] - x[j]));
    }
    for (std::size_t j = 1; j <= q; ++j) lv -= std::log(std::abs(x[0] - x[j]));
    return lv;
}

ITauResult i_tau_exact(const ITauInstance& inst) {
    const auto x = inst.xs();
    const std::size_t q = inst.q();
    const double pen = std::log(1.0 / inst.tau());
    std::vector<double> dist(q + 1, kInf);
    std::vector<std::size_t> pred(q + 1, 0);
    dist[0] = 0.0;
    for (std::size_t b = 1; b <= q; ++b) {
        double seg = 0.0;  // sum_{j=a}^{b-1} log|x_b - x_j|
        for (std::size_t a = b; a-- > 0;) {
            seg += std::log(std::abs(x[b] - x[a]));
            const double c = dist[a] + pen + seg;
            if (c < dist[b]) {
                dist[b] = c;
                pred[b] = a;
            }
        }
    }
    ITauResult r;
    for (std::size_t b = q;; b = pred[b]) {
        r.breakpoints.push_back(b);
        if (b == 0) break;
    }
    std::reverse(r.breakpoints.begin(), r.breakpoints.end());
    r.m = r.breakpoints.size() - 1;
    r.log_value = dist[q];
    for (std::size_t j = 1; j <= q; ++j) r.log_value -= std::log(std::abs(x[0] - x[j]));
    return r;
}

double worst_case_ratio(double tau) {
    if (!(tau > 0.0 && tau <= 1.0)) throw ValidationError("worst_case: tau must lie in (0, 1]");
    const double l = 1.0 + 1.0 / tau;
    // Positive root of L^2 - (1/tau) L - (1 + 1/tau) = 0.
    const double c = 1.0 / tau;
    const double root = 0.5 * (c + std::sqrt(c * c + 4.0 * (1.0 + c)));
    if (std::abs(root - l) > 1e-12 * l) throw InternalError("worst_case: root mismatch");
    return l;
}

ITauInstance worst_case_sequence(double tau, std::size_t q) {
    if (q < 1) throw ValidationError("worst_case: q must be >= 1");
    const double l = worst_case_ratio(tau);
    std::vector<double> xs{0.0};
    double p = 1.0;
    for (std::size_t j = 1; j <= q; ++j) {
        xs.push_back(p);
        p *= -l;
    }
    return ITauInstance(std::move(xs), tau);
}

double worst_case_switch_value(double tau, std::size_t q) {
    if (!(tau > 0.0 && tau <= 1.0)) throw ValidationError("worst_case: tau must lie in (0, 1]");
    if (q < 1) throw ValidationError("worst_case: q must be >= 1");
    return (1.0 / tau) * std::pow(1.0 / tau + 1.0 / (tau + 1.0), static_cast<double>(q - 1));
}

std::vector<double> normalize_instance(std::span<const double> xs) {
    std::vector<double> out(xs.begin(), xs.end());
    const double x0 = xs.front();
    for (double& v : out) v -= x0;
    if (out.back() < 0.0) {
        for (double& v : out) v = -v;
    }
    out.front() = 0.0;
    return out;
}

StrategyTrace strategy_naive(const ITauInstance& inst) {
    StrategyTrace tr;
    tr.xs = normalize_instance(inst.xs());
    const std::size_t q = inst.q();
    double ref = tr.xs[q];
    for (std::size_t j = q - 1; j >= 1; --j) {
        if (std::abs(tr.xs[j]) < std::abs(ref)) {
            tr.switches.push_back(j);
            ref = tr.xs[j];
        }
    }
    finish_trace(tr, inst.tau());
    return tr;
}

StrategyTrace strategy_lambda_family(const ITauInstance& inst) {
    return strategy_lambda_family(inst, lambda_constant());
}

StrategyTrace strategy_lambda_family(const ITauInstance& inst, double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ValidationError("lambda_family: lambda must be positive");
    StrategyTrace tr;
    tr.xs = normalize_instance(inst.xs());
    const auto& x = tr.xs;
    const std::size_t q = inst.q();
    const double shrink = std::exp(-lambda);
    const double pen = std::log(1.0 / inst.tau());

    std::size_t qp = 0;
    for (std::size_t j = q; j >= 1; --j) {
        if (x[j] < 0.0) {
            qp = j;
            break;
        }
    }
    tr.q_prime = qp;

    // Positive tail: one track.
    double ref = x[q];
    double tail_cost = pen - std::log(x[q]);
    for (std::size_t j = q - 1; j > qp; --j) {
        tail_cost += log_ratio(ref, x[j]);
        if (x[j] < shrink * ref) {
            tr.switches.push_back(j);
            ref = x[j];
            tail_cost += pen;
        }
    }
    if (qp == 0) {
        finish_trace(tr, inst.tau());
        return tr;
    }

    // Two tracks below q'. Track 0 has reference -a_s, track 1 has b_s.
    // cost[t] is the best log-cost with X_{j-1} on track t; from[j][t] is the
    // track of X_j on that best path.
    double a = -x[qp], b = ref;
    const double r_qp = log_ratio(b, x[qp]);
    std::array<double, 2> cost{r_qp + pen, r_qp};
    std::vector<std::array<int, 2>> from(qp + 1, {1, 1});
    std::vector<int> created(qp + 1, -1);  // track taking x_j as its new reference
    created[qp] = 0;

    std::vector<LambdaStage> stages;
    LambdaStage stage{a, b, 0.0, 0.0, qp, 0, false, 0.0, 0.0};
    for (std::size_t j = qp - 1; j >= 1; --j) {
        const std::array<double, 2> r{log_ratio(-a, x[j]), log_ratio(b, x[j])};
        const std::array<double, 2> c{cost[0] + r[0], cost[1] + r[1]};
        stage.log_p += r[0];
        stage.log_q += r[1];
        from[j] = {0, 1};
        cost = c;
        if (x[j] > -shrink * a && x[j] < shrink * b) {
            // The created track is forced to switch; the other may switch into it.
            const int t = x[j] > 0.0 ? 1 : 0;
            const int o = 1 - t;
            cost[t] = c[t] + pen;
            if (c[o] + pen < cost[t]) {
                cost[t] = c[o] + pen;
                from[j][t] = o;
            }
            created[j] = t;
            stage.end = j;
            stage.new_negative = t == 0;
            stages.push_back(stage);
            if (t == 1) b = x[j]; else a = -x[j];
            stage = LambdaStage{a, b, 0.0, 0.0, j, 0, false, 0.0, 0.0};
        }
    }
    const std::array<double, 2> last{std::log(a), std::log(b)};
    stage.log_p += last[0];
    stage.log_q += last[1];
    stages.push_back(stage);
    for (auto& s : stages) {
        s.alpha = s.b / (s.a + s.b);
        s.beta = s.a / (s.a + s.b);
    }
    tr.stages = std::move(stages);

    int track = cost[0] + last[0] < cost[1] + last[1] ? 0 : 1;
    const double dp_value = tail_cost + cost[track] + last[track];
    for (std::size_t j = 1; j <= qp; ++j) {
        if (created[j] == track) tr.switches.push_back(j);
        track = from[j][track];
    }
    finish_trace(tr, inst.tau());
    if (std::abs(dp_value - tr.log_value) > 1e-9 * (1.0 + std::abs(dp_value)))
        throw InternalError("lambda_family: path reconstruction mismatch");
    return tr;
}

double key_lemma_log_bound(double d, double delta, double tau) {
    if (!(delta > 0.0) || !(d >= delta)) throw ValidationError("key_lemma: need D >= Delta > 0");
    if (!(tau > 0.0 && tau <= 1.0)) throw ValidationError("key_lemma: tau must lie in (0, 1]");
    const double e = 1.125 + 2.0 * std::log(1.0 / tau) / lambda_constant();
    return std::log(2.0 / (tau * tau)) + e * (std::log(d) - std::log(delta));
}

double key_lemma_bound(double d, double delta, double tau) {
    return std::exp(key_lemma_log_bound(d, delta, tau));
}

KeyLemmaReport check_key_lemma(const ITauInstance& inst) {
    const auto x = inst.xs();
    const std::size_t q = inst.q();
    KeyLemmaReport rep;
    rep.D = 0.0;
    rep.Delta = kInf;
    for (std::size_t j = 1; j <= q; ++j) {
        const double d = std::abs(x[0] - x[j]);
        rep.D = std::max(rep.D, d);
        if (j < q) rep.Delta = std::min(rep.Delta, d);
    }
    if (q == 1) rep.Delta = rep.D;
    // D >= Delta always holds since Delta is a min over a subset.
    const auto r = i_tau_exact(inst);
    rep.log_exact = r.log_value;
    rep.exact = r.value();
    rep.log_bound = key_lemma_log_bound(rep.D, rep.Delta, inst.tau());
    rep.bound = std::exp(rep.log_bound);
    rep.holds = rep.log_exact <= rep.log_bound + std::log1p(1e-9);
    return rep;
}

LkReport lk_via_itau(const InterpolationOperator& op, std::size_t k, double x, double tau) {
    const auto nodes = op.nodes();
    if (k >= nodes.size()) throw ValidationError("lk_via_itau: need 0 <= k < n");
    LkReport rep;
    rep.lk = std::abs(lagrange_basis(op, k, x));
    for (std::size_t j = k; j < nodes.size(); ++j) {
        if (nodes[j] == x) {
            rep.skipped = true;
            rep.itau = kInf;
            return rep;
        }
    }
    std::vector<double> sub(nodes.begin() + static_cast<std::ptrdiff_t>(k), nodes.end());
    sub.push_back(x);
    rep.itau = i_tau_exact(ITauInstance(std::move(sub), tau)).value();
    rep.ok = rep.lk <= rep.itau * (1.0 + 1e-9);
    return rep;
}

LkReport lk_via_itau(const PointSequence& nodes, std::size_t k, double x, double tau) {
    return lk_via_itau(InterpolationOperator(nodes.points), k, x, tau);
}

}  // namespace leja
