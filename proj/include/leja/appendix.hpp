// SPDX-License-Identifier: MIT
#pragma once

namespace leja {

/// lhs/rhs as stated; margin is log(rhs) - log(lhs), except for ineq4 where it
/// is rhs - lhs. holds iff margin >= -1e-12.
struct IneqReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool holds = true;
};

inline constexpr double kIneqSlack = 1e-12;

/// (|x+a|/|x|)^{b/(a+b)} (|x-b|/|x|)^{a/(a+b)} <= 1 for x outside (-e^{-l} a, e^{-l} b).
[[nodiscard]] IneqReport ineq1(double a, double b, double x, double lambda);

/// ((A-a)/a)^{B/(A+B)} ((B+a)/a)^{A/(A+B)} <= (A/a) (min(A,B)/min(a,B))^{1/8} for 0 < a < A.
[[nodiscard]] IneqReport ineq2(double A, double B, double a);

/// (a+b) / (a^{a/(a+b)} b^{b/(a+b)}) <= 2.
[[nodiscard]] IneqReport ineq3(double a, double b);

/// lambda > 1/5.
[[nodiscard]] IneqReport ineq4();

/// f(l) = e^{e^l}(e^l - 1) - 1.
[[nodiscard]] double lambda_equation_value(double l);

struct TightnessScan {
    double max_value = 0.0;
    double argmax = 0.0;
};

/// max over B in (1, b_max] of (B-1)/(B+1)^2: a uniform scan, then Brent refinement.
[[nodiscard]] TightnessScan ineq2_tightness_scan(double b_max = 100.0, int samples = 100000);

}  // namespace leja
