// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "leja/interp.hpp"
#include "leja/leja.hpp"

namespace leja {

/// Points x_0..x_q (q >= 1, pairwise distinct) and tau in (0, 1].
class ITauInstance {
public:
    ITauInstance(std::vector<double> xs, double tau);

    [[nodiscard]] std::span<const double> xs() const noexcept { return xs_; }
    [[nodiscard]] double tau() const noexcept { return tau_; }
    [[nodiscard]] std::size_t q() const noexcept { return xs_.size() - 1; }

private:
    std::vector<double> xs_;
    double tau_;
};

/// Minimizer of
///   tau^{-m} prod_l prod_{n_l <= j < n_{l+1}} |x_{n_{l+1}} - x_j| / prod_{j=1..q} |x_0 - x_j|
/// over 0 = n_0 < ... < n_m = q.
struct ITauResult {
    double log_value = 0.0;
    std::vector<std::size_t> breakpoints;
    std::size_t m = 0;

    [[nodiscard]] double value() const;
};

/// The objective above (in log form) for one breakpoint sequence.
[[nodiscard]] double i_tau_log_objective(const ITauInstance& inst,
                                         std::span<const std::size_t> breakpoints);

/// Exact I_tau as a shortest path over indices 0..q with segment costs
/// log(1/tau) + sum_{j=a}^{b-1} log|x_b - x_j|. O(q^2) edges.
[[nodiscard]] ITauResult i_tau_exact(const ITauInstance& inst);

/// Lambda = 1 + 1/tau, the positive root of L^2 - 1 = (L + 1)/tau.
[[nodiscard]] double worst_case_ratio(double tau);

/// x_0 = 0, x_j = (-Lambda)^{j-1}.
[[nodiscard]] ITauInstance worst_case_sequence(double tau, std::size_t q);

/// (1/tau)(1/tau + 1/(tau + 1))^{q-1}, the value of switching at every step
/// on the worst-case sequence.
[[nodiscard]] double worst_case_switch_value(double tau, std::size_t q);

/// One stage s of the two-track phase: the reference is either -a or b.
struct LambdaStage {
    double a = 0.0;
    double b = 0.0;
    double alpha = 0.0;  // b / (a + b)
    double beta = 0.0;   // a / (a + b)
    std::size_t start = 0;  // q_s: stage s covers q_{s+1} <= j < q_s
    std::size_t end = 0;    // q_{s+1} (0 for the last stage)
    bool new_negative = false;  // x_{q_{s+1}} = -a_{s+1} (otherwise b_{s+1})
    double log_p = 0.0;  // log P_s, ratios with reference -a_s (times |X_0| on the last stage)
    double log_q = 0.0;  // log Q_s, ratios with reference b_s
};

/// A switching strategy evaluated in the normalized frame (x_0 = 0, x_q > 0).
struct StrategyTrace {
    std::vector<double> xs;              // normalized points
    std::vector<double> reference;       // X_0..X_{q-1}
    std::vector<std::size_t> switches;   // j with X_{j-1} = x_j
    std::vector<double> ratios;          // |X_j - x_j| / |x_j| for j = 1..q-1
    std::vector<std::size_t> breakpoints;
    std::size_t m = 0;
    double log_value = 0.0;

    std::size_t q_prime = 0;
    std::vector<LambdaStage> stages;

    [[nodiscard]] double value() const;
};

/// Recenter to x_0 = 0 and flip signs so that x_q > 0.
[[nodiscard]] std::vector<double> normalize_instance(std::span<const double> xs);

/// Switch whenever |x_j| < |X_j|.
[[nodiscard]] StrategyTrace strategy_naive(const ITauInstance& inst);

/// The e^{-lambda} switching family: a one-track pass over the positive tail
/// followed by the two-track (-a_s, b_s) phase; the value is the exact minimum
/// over all admissible paths of the family.
[[nodiscard]] StrategyTrace strategy_lambda_family(const ITauInstance& inst, double lambda);
[[nodiscard]] StrategyTrace strategy_lambda_family(const ITauInstance& inst);

/// (2/tau^2) (D/Delta)^{9/8 + 2 log(1/tau)/lambda}.
[[nodiscard]] double key_lemma_log_bound(double d, double delta, double tau);
[[nodiscard]] double key_lemma_bound(double d, double delta, double tau);

struct KeyLemmaReport {
    bool holds = true;
    double exact = 0.0;
    double bound = 0.0;
    double log_exact = 0.0;
    double log_bound = 0.0;
    double D = 0.0;
    double Delta = 0.0;
};

/// D = max_{1<=j<=q} |x_0 - x_j|, Delta = min_{1<=j<=q-1} |x_0 - x_j| (Delta = D if q = 1).
[[nodiscard]] KeyLemmaReport check_key_lemma(const ITauInstance& inst);

struct LkReport {
    double lk = 0.0;
    double itau = 0.0;
    bool ok = true;
    bool skipped = false;  // x coincides with one of x_k..x_{n-1}
};

/// |L_{k,n}(x)| against I_tau(x_k, ..., x_{n-1}, x).
[[nodiscard]] LkReport lk_via_itau(const InterpolationOperator& op, std::size_t k, double x, double tau);
[[nodiscard]] LkReport lk_via_itau(const PointSequence& nodes, std::size_t k, double x, double tau);

}  // namespace leja
