// SPDX-License-Identifier: MIT
// Acceptance suite: one PASS/FAIL line per criterion, with wall-clock limits.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "leja/appendix.hpp"
#include "leja/bounds.hpp"
#include "leja/compact_set.hpp"
#include "leja/green.hpp"
#include "leja/interp.hpp"
#include "leja/keylemma.hpp"
#include "leja/leja.hpp"
#include "random_instances.hpp"

using namespace leja;
using leja::testing::brute_force_log_itau;
using leja::testing::random_points;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Notes a failure and appends the first few reasons to the detail text.
struct Tally {
    long checks = 0;
    long failures = 0;
    std::ostringstream first;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (failures < 3) first << (failures ? "; " : "") << what;
        ++failures;
    }
    [[nodiscard]] Outcome outcome(const std::string& summary) const {
        std::ostringstream os;
        os << summary << " (" << checks - failures << "/" << checks << " checks)";
        if (failures) os << " first failures: " << first.str();
        return {failures == 0, os.str()};
    }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Sequences generated by criteria 5, 6 and 11, rechecked by criterion 7.
struct Generated {
    CompactSet set;
    PointSequence seq;
};
std::vector<Generated> generated;

const CompactSet& interval() {
    static const CompactSet k = make_union({{-1.0, 1.0}});
    return k;
}

Outcome c1_lambda() {
    Tally t;
    const double l = lambda_const(1e-10);
    t.expect(std::abs(l - 0.24565978) <= 1e-8, "lambda = " + num(l));
    t.expect(l > 0.2, "lambda <= 1/5");
    t.expect(ineq4().holds, "ineq4");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12f", l);
    return t.outcome(std::string("lambda = ") + buf);
}

Outcome c2_green_oracle() {
    Tally t;
    const auto m = build_green_model(interval());
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    double worst = 0.0;
    for (int n = 0; n < 100;) {
        const Complex z{u(rng), u(rng)};
        if (std::abs(z) > 10.0 || dist_to_set(z, interval()) < 0.01) continue;
        ++n;
        const double err = std::abs(green_value(m, z) - green_interval_analytic(-1, 1, z));
        worst = std::max(worst, err);
        t.expect(err <= 1e-6, "g error " + num(err));
    }
    const double c1 = capacity(m);
    const double c2 = capacity(build_green_model(make_union({{0.0, 1.0}})));
    t.expect(std::abs(c1 - 0.5) <= 1e-6, "cap[-1,1] = " + num(c1));
    t.expect(std::abs(c2 - 0.25) <= 1e-6, "cap[0,1] = " + num(c2));
    return t.outcome("max |g - analytic| = " + num(worst) + ", cap = " + num(c1) + ", " + num(c2));
}

Outcome c3_two_interval_density() {
    Tally t;
    const double a = 0.3;
    const auto m = build_green_model(make_union({{-1.0, -a}, {a, 1.0}}));
    double worst = 0.0;
    // 25 Chebyshev-interior nodes per component.
    for (double sign : {-1.0, 1.0}) {
        for (int i = 0; i < 25; ++i) {
            const double c = std::cos(M_PI * (i + 0.5) / 25.0);
            const double tt = sign * (0.5 * (1 + a) + 0.5 * (1 - a) * c);
            const double want = std::abs(tt) / std::sqrt((tt * tt - a * a) * (1 - tt * tt)) / M_PI;
            const double rel = std::abs(m.density(tt) - want) / want;
            worst = std::max(worst, rel);
            t.expect(rel <= 1e-6, "density rel err " + num(rel) + " at " + num(tt));
        }
    }
    return t.outcome("max rel err = " + num(worst));
}

Outcome c4_beta() {
    Tally t;
    std::string summary;
    for (const auto& k : {interval(), make_union({{0.0, 1.0}, {2.0, 3.0}})}) {
        const auto m = build_green_model(k);
        std::vector<double> ds, gs;
        for (int i = 0; i <= 16; ++i) {
            ds.push_back(1e-4 * std::pow(10.0, i / 8.0));
            gs.push_back(g_of_delta(m, ds.back()));
        }
        const double s = log_log_slope(ds, gs);
        t.expect(std::abs(s - 0.5) <= 0.1, "slope " + num(s));
        summary += (summary.empty() ? "slopes = " : ", ") + num(s);
    }
    return t.outcome(summary);
}

Outcome c5_theorem1() {
    Tally t;
    double worst_ratio = 0.0;
    for (const auto& k : {interval(), make_union({{0.0, 1.0}, {2.0, 3.0}})}) {
        const auto m = build_green_model(k);
        GTable g(m);
        const auto s = leja_sequence(k, 100);
        generated.push_back({k, s});
        for (std::size_t n = 1; n <= 100; ++n) {
            const InterpolationOperator op(std::vector<double>(s.points.begin(), s.points.begin() + n));
            const double lam = lebesgue_constant(op, k).lambda_n;
            const double bound = theorem1_bound_opt(k, g, n).best_bound;
            worst_ratio = std::max(worst_ratio, lam / bound);
            t.expect(lam <= bound, "n=" + std::to_string(n) + " Lambda " + num(lam) + " > " + num(bound));
        }
    }
    return t.outcome("max Lambda_n / bound = " + num(worst_ratio));
}

Outcome c6_theorem2() {
    Tally t;
    const auto& k = interval();
    const auto m = build_green_model(k);
    GTable g(m);
    double worst_ratio = 0.0;
    for (double tau : {0.99, 0.9, 0.7}) {
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            const auto s = quasi_leja_sequence(k, 60, tau, seed);
            generated.push_back({k, s});
            for (std::size_t n = 1; n <= 60; ++n) {
                const InterpolationOperator op(std::vector<double>(s.points.begin(), s.points.begin() + n));
                const double lam = lebesgue_constant(op, k).lambda_n;
                const double bound = theorem2_bound_opt(k, g, n, tau).best_bound;
                worst_ratio = std::max(worst_ratio, lam / bound);
                t.expect(lam <= bound, "tau=" + num(tau) + " n=" + std::to_string(n));
            }
        }
    }
    for (std::size_t n : {1u, 7u, 30u, 60u, 100u}) {
        for (int i = 0; i < 20; ++i) {
            const double d = 1e-4 * std::pow(2e4, i / 19.0);
            t.expect(theorem2_bound(k, g, n, 1.0, d) == theorem1_bound(k, g, n, d), "tau = 1 reduction");
        }
    }
    return t.outcome("max Lambda_n / bound = " + num(worst_ratio));
}

Outcome c7_separation() {
    Tally t;
    double worst = INFINITY;
    for (const auto& gen : generated) {
        const auto m = build_green_model(gen.set);
        GTable g(m);
        const double d = diam(gen.set);
        std::vector<double> ds, gs;
        for (int i = 0; i < 20; ++i) {
            ds.push_back(1e-4 * std::pow(d / 1e-4, i / 19.0));
            gs.push_back(g(ds.back()));
        }
        // Every prefix x_0..x_{n-1} is itself a (quasi) Leja sequence.
        for (std::size_t n = 2; n <= gen.seq.size(); ++n) {
            PointSequence prefix = gen.seq;
            prefix.points.resize(n);
            const auto rep = check_separation(prefix, ds, gs, 1e-12);
            worst = std::min(worst, rep.worst_margin);
            t.expect(rep.ok, "margin " + num(rep.worst_margin));
        }
    }
    return t.outcome(std::to_string(generated.size()) + " sequences, worst margin = " + num(worst));
}

Outcome c8_dp_vs_brute() {
    Tally t;
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> qd(1, 8);
    std::uniform_real_distribution<double> td(0.05, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        const ITauInstance inst(random_points(rng, qd(rng), 1e-6), td(rng));
        const double err = std::abs(i_tau_exact(inst).log_value - brute_force_log_itau(inst));
        worst = std::max(worst, err);
        t.expect(err <= 1e-10, "log error " + num(err));
    }
    return t.outcome("max |log DP - log brute| = " + num(worst));
}

Outcome c9_worst_case() {
    Tally t;
    long strict = 0;
    for (double tau : {1.0, 0.9, 0.5}) {
        for (std::size_t q = 1; q <= 15; ++q) {
            const auto inst = worst_case_sequence(tau, q);
            std::vector<std::size_t> every(q + 1);
            for (std::size_t j = 0; j <= q; ++j) every[j] = j;
            const double want = worst_case_switch_value(tau, q);
            const double got = std::exp(i_tau_log_objective(inst, every));
            t.expect(std::abs(got - want) <= 1e-12 * want, "every-step value q=" + std::to_string(q));
            const double ex = i_tau_exact(inst).log_value;
            t.expect(ex <= std::log(want) + 1e-12, "DP above every-step value");
            if (ex < std::log(want) - 1e-12) ++strict;
        }
    }
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> qd(1, 25);
    std::uniform_real_distribution<double> td(0.05, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const ITauInstance inst(random_points(rng, qd(rng), 1e-6), td(rng));
        const double q = static_cast<double>(inst.q());
        const double lv = strategy_naive(inst).log_value;
        t.expect(lv <= -q * std::log(inst.tau()) + (q - 1) * std::log(2.0) + 1e-9, "naive above tau^-q 2^(q-1)");
    }
    return t.outcome("worst-case instances where the DP is strictly below the every-step value: " +
                     std::to_string(strict));
}

Outcome c10_key_lemma() {
    Tally t;
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<int> qd(1, 25);
    const double taus[] = {1.0, 0.9, 0.5};
    double worst = -INFINITY;
    for (int i = 0; i < 10000; ++i) {
        const ITauInstance inst(random_points(rng, qd(rng), 1e-3), taus[i % 3]);
        const auto rep = check_key_lemma(inst);
        worst = std::max(worst, rep.log_exact - rep.log_bound);
        t.expect(rep.holds, "I_tau " + num(rep.exact) + " > bound " + num(rep.bound));
    }
    return t.outcome("max log(I_tau / bound) = " + num(worst));
}

Outcome c11_chain() {
    Tally t;
    const auto& k = interval();
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const auto exact = leja_sequence(k, 20);
    const auto quasi = quasi_leja_sequence(k, 20, 0.9, 11);
    generated.push_back({k, exact});
    generated.push_back({k, quasi});
    double worst = 0.0;
    long skipped = 0;
    for (const auto* s : {&exact, &quasi}) {
        for (int i = 0; i < 100; ++i) {
            const double x = u(rng);
            for (std::size_t kk = 0; kk < 20; ++kk) {
                const auto r = lk_via_itau(*s, kk, x, s->tau);
                if (r.skipped) {
                    ++skipped;
                    continue;
                }
                worst = std::max(worst, r.lk / r.itau);
                t.expect(r.ok, "|L| " + num(r.lk) + " > I_tau " + num(r.itau));
            }
        }
    }
    return t.outcome("max |L_k,n| / I_tau = " + num(worst) + ", skipped " + std::to_string(skipped));
}

Outcome c12_appendix() {
    Tally t;
    const double lam = lambda_constant();
    const double s = std::exp(-lam);
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> lu(std::log(1e-3), std::log(1e3)), u(0.0, 1.0);
    std::uniform_real_distribution<double> spread(0.0, std::log(1e3));
    double m1 = INFINITY, m2 = INFINITY, m3 = INFINITY;
    for (int i = 0; i < 100000; ++i) {
        const double a = std::exp(lu(rng)), b = std::exp(lu(rng));
        // Outside (-e^-l a, e^-l b): a multiplicative spread beyond either end.
        const double f = std::exp(spread(rng));
        const double x = u(rng) < 0.5 ? -s * a * f : s * b * f;
        const auto r = ineq1(a, b, x, lam);
        m1 = std::min(m1, r.margin);
        t.expect(r.holds, "ineq1 margin " + num(r.margin));
    }
    for (int i = 0; i < 100000; ++i) {
        const double A = std::exp(lu(rng)), B = std::exp(lu(rng));
        double w = u(rng);
        while (w == 0.0) w = u(rng);
        const auto r = ineq2(A, B, w * A);
        m2 = std::min(m2, r.margin);
        t.expect(r.holds, "ineq2 margin " + num(r.margin));
    }
    for (int i = 0; i < 100000; ++i) {
        const auto r = ineq3(std::exp(lu(rng)), std::exp(lu(rng)));
        m3 = std::min(m3, r.margin);
        t.expect(r.holds, "ineq3 margin " + num(r.margin));
    }
    t.expect(ineq4().holds, "ineq4");
    const auto scan = ineq2_tightness_scan();
    t.expect(std::abs(scan.max_value - 0.125) <= 1e-9, "scan max " + num(scan.max_value));
    t.expect(std::abs(scan.argmax - 3.0) <= 1e-3, "scan argmax " + num(scan.argmax));
    return t.outcome("min margins " + num(m1) + ", " + num(m2) + ", " + num(m3) + "; scan max " +
                     num(scan.max_value) + " at B = " + num(scan.argmax));
}

struct Criterion {
    const char* name;
    double limit_s;  // <= 0: no runtime limit
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"lambda constant", 1e-3, c1_lambda},
        {"Green oracle", 1.0, c2_green_oracle},
        {"two-interval density", 1.0, c3_two_interval_density},
        {"beta exponent", 10.0, c4_beta},
        {"diameter bound end-to-end", 120.0, c5_theorem1},
        {"quasi-Leja bound end-to-end", 180.0, c6_theorem2},
        {"I_tau DP vs exhaustive", 5.0, c8_dp_vs_brute},
        {"worst case and naive bound", 0.0, c9_worst_case},
        {"I_tau bound", 60.0, c10_key_lemma},
        {"|L_k,n| <= I_tau chain", 0.0, c11_chain},
        {"point separation", 0.0, c7_separation},
        {"elementary inequalities", 0.0, c12_appendix},
    };
    // Separation runs after criterion 11 so it sees every generated sequence;
    // lines are still printed in criterion order.
    const int number[] = {1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 7, 12};
    std::vector<std::string> lines(13);
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = c.limit_s <= 0.0 || secs < c.limit_s;
        const bool pass = o.pass && in_time;
        if (!pass) ++failed;
        char head[160];
        std::snprintf(head, sizeof head, "[%s] criterion %2d %-28s %9.3f s", pass ? "PASS" : "FAIL", number[i],
                      c.name, secs);
        std::string line = head;
        if (c.limit_s > 0.0) line += " (limit " + num(c.limit_s) + " s" + (in_time ? ")" : ", exceeded)");
        line += " : " + o.detail;
        lines[number[i]] = line;
    }
    for (int i = 1; i <= 12; ++i) std::printf("%s\n", lines[i].c_str());
    std::printf("%d/12 criteria passed\n", 12 - failed);
    return failed == 0 ? 0 : 1;
}
