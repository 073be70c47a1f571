// SPDX-License-Identifier: MIT
#include "leja/appendix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "leja/bounds.hpp"
#include "leja/errors.hpp"
#include "leja/optimize.hpp"

namespace leja {
namespace {

IneqReport from_logs(double log_lhs, double log_rhs) {
    IneqReport r;
    r.lhs = std::exp(log_lhs);
    r.rhs = std::exp(log_rhs);
    r.margin = log_rhs - log_lhs;
    r.holds = r.margin >= -kIneqSlack;
    return r;
}

bool positive(double v) { return v > 0.0 && std::isfinite(v); }

}  // namespace

IneqReport ineq1(double a, double b, double x, double lambda) {
    if (!positive(a) || !positive(b) || !positive(lambda) || !std::isfinite(x))
        throw ValidationError("ineq1: need a, b, lambda > 0 and finite x");
    const double s = std::exp(-lambda);
    if (x == 0.0 || (x > -s * a && x < s * b))
        throw ValidationError("ineq1: x must lie outside (-e^{-lambda} a, e^{-lambda} b)");
    const double w = a + b;
    const double lx = std::log(std::abs(x));
    const double t1 = std::log(std::abs(x + a)) - lx;
    const double t2 = std::log(std::abs(x - b)) - lx;  // -inf at x = b
    const double log_lhs = (b / w) * t1 + (a / w) * t2;
    return from_logs(log_lhs, 0.0);
}

IneqReport ineq2(double A, double B, double a) {
    if (!positive(A) || !positive(B) || !positive(a)) throw ValidationError("ineq2: need A, B, a > 0");
    if (!(a < A)) throw ValidationError("ineq2: need a < A");
    const double w = A + B;
    const double log_lhs = (B / w) * (std::log(A - a) - std::log(a)) + (A / w) * (std::log(B + a) - std::log(a));
    const double log_rhs = std::log(A) - std::log(a) +
                           0.125 * (std::log(std::min(A, B)) - std::log(std::min(a, B)));
    return from_logs(log_lhs, log_rhs);
}

IneqReport ineq3(double a, double b) {
    if (!positive(a) || !positive(b)) throw ValidationError("ineq3: need a, b > 0");
    const double w = a + b;
    const double log_lhs = std::log(w) - (a / w) * std::log(a) - (b / w) * std::log(b);
    return from_logs(log_lhs, std::log(2.0));
}

IneqReport ineq4() {
    IneqReport r;
    r.lhs = 0.2;
    r.rhs = lambda_const(1e-10);
    r.margin = r.rhs - r.lhs;
    r.holds = r.rhs > r.lhs;
    return r;
}

double lambda_equation_value(double l) { return std::exp(std::exp(l)) * (std::exp(l) - 1.0) - 1.0; }

TightnessScan ineq2_tightness_scan(double b_max, int samples) {
    if (!(b_max > 1.0) || samples < 3) throw ValidationError("tightness_scan: need b_max > 1, samples >= 3");
    auto f = [](double B) { return (B - 1.0) / ((B + 1.0) * (B + 1.0)); };
    const double h = (b_max - 1.0) / samples;
    TightnessScan s;
    int arg = 1;
    s.max_value = -std::numeric_limits<double>::infinity();
    for (int i = 1; i <= samples; ++i) {
        const double v = f(1.0 + h * i);
        if (v > s.max_value) {
            s.max_value = v;
            arg = i;
        }
    }
    s.argmax = 1.0 + h * arg;
    const auto [bx, bv] = refine_max(f, 1.0 + h * (arg - 1), std::min(b_max, 1.0 + h * (arg + 1)));
    if (bv >= s.max_value) {
        s.max_value = bv;
        s.argmax = bx;
    }
    return s;
}

}  // namespace leja
