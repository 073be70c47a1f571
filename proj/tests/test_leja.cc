// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "leja/bounds.hpp"
#include "leja/compact_set.hpp"
#include "leja/errors.hpp"
#include "leja/green.hpp"
#include "leja/leja.hpp"

using namespace leja;

namespace {

double brute_max_log_product(const CompactSet& k, std::span<const double> nodes, double density) {
    double best = -INFINITY;
    for (double x : grid(k, density)) best = std::max(best, log_abs_product(x, nodes));
    return best;
}

}  // namespace

TEST_CASE("first Leja points on [-1, 1]") {
    const auto k = make_union({{-1.0, 1.0}});
    const auto s2 = leja_sequence(k, 2);
    CHECK(s2.points == std::vector<double>{1.0, -1.0});
    const auto s4 = leja_sequence(k, 4);
    CHECK(s4.points[2] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(s4.points[2]) < 1e-9);
    CHECK(s4.points[3] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-7));
    CHECK(s4.tau == 1.0);
    CHECK(s4.rng_seed == 0);

    const auto left = leja_sequence(k, 2, X0Policy::left_end());
    CHECK(left.points == std::vector<double>{-1.0, 1.0});
    const auto given = leja_sequence(k, 2, X0Policy::given(0.25));
    CHECK(given.points[0] == 0.25);
    CHECK(given.points[1] == -1.0);
}

TEST_CASE("errors") {
    const auto k = make_union({{-1.0, 1.0}});
    CHECK_THROWS_AS((void)leja_sequence(k, 2, X0Policy::given(3.0)), ValidationError);
    CHECK_THROWS_AS((void)leja_sequence(k, 0), ValidationError);
    CHECK_THROWS_AS((void)leja_sequence(k, 50, X0Policy::right_end(), 10.0), ValidationError);
    CHECK_THROWS_AS((void)quasi_leja_sequence(k, 5, 0.0, 1), ValidationError);
    CHECK_THROWS_AS((void)quasi_leja_sequence(k, 5, 1.5, 1), ValidationError);
    CHECK_THROWS_AS((void)min_separation(std::vector<double>{1.0}), ValidationError);
}

TEST_CASE("each step attains the brute-force grid maximum") {
    const auto k = make_union({{0.0, 1.0}, {2.0, 3.0}});
    const auto s = leja_sequence(k, 8);
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        CHECK(k.contains(s.points[i]));
        for (std::size_t j = 0; j < i; ++j) CHECK(s.points[i] != s.points[j]);
    }
    for (std::size_t kk = 1; kk < s.points.size(); ++kk) {
        const std::span<const double> prev(s.points.data(), kk);
        const double got = log_abs_product(s.points[kk], prev);
        const double want = brute_max_log_product(k, prev, 2.0 * kDefaultLejaDensity);
        CHECK(got >= want + std::log1p(-1e-9));
        CHECK(s.achieved_ratios[kk] >= 1.0 - 1e-12);
    }
}

TEST_CASE("earlier grid points never beat the recorded maximum") {
    const auto k = make_union({{-1.0, 1.0}});
    const auto s = leja_sequence(k, 30, X0Policy::right_end(), 2e4);
    for (std::size_t kk = 1; kk < s.points.size(); ++kk) {
        const std::span<const double> prev(s.points.data(), kk);
        const double got = log_abs_product(s.points[kk], prev);
        for (double x : grid(k, 2e4)) CHECK_FALSE(log_abs_product(x, prev) > got + std::log1p(1e-9));
    }
}

TEST_CASE("determinism") {
    const auto k = cantor_approx(3, 1.0 / 3.0);
    CHECK(leja_sequence(k, 20).points == leja_sequence(k, 20).points);
    CHECK(quasi_leja_sequence(k, 20, 0.8, 42).points == quasi_leja_sequence(k, 20, 0.8, 42).points);
}

TEST_CASE("tau = 1 quasi sequence is the Leja sequence") {
    const auto k = make_union({{0.0, 1.0}, {2.0, 3.0}});
    CHECK(quasi_leja_sequence(k, 15, 1.0, 99).points == leja_sequence(k, 15).points);
}

TEST_CASE("quasi-Leja eligibility") {
    const auto k = make_union({{-1.0, 1.0}});
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto s = quasi_leja_sequence(k, 2, 0.5, seed);
        CHECK(s.points[0] == 1.0);
        CHECK(s.points[1] >= -1.0);
        CHECK(s.points[1] <= 0.0);
    }
    const auto q = quasi_leja_sequence(k, 30, 0.9, 7);
    for (std::size_t i = 1; i < q.points.size(); ++i) CHECK(q.achieved_ratios[i] >= 0.9);
    const auto audit = verify_quasi_leja(q, k, 0.9, 2.0 * kDefaultLejaDensity);
    CHECK(audit.ok);
    CHECK(verify_quasi_leja(q, k, 0.89, 3e5).ok);
    const auto strict = verify_quasi_leja(q, k, std::min(1.0, audit.worst_ratio + 1e-3), 2.0 * kDefaultLejaDensity, 0.0);
    CHECK_FALSE(strict.ok);
}

TEST_CASE("exact sequences pass a unit audit") {
    const auto k = make_union({{-1.0, 1.0}});
    const auto s = leja_sequence(k, 25);
    const auto a = verify_quasi_leja(s, k, 1.0, 4e5);
    CHECK(a.ok);
    CHECK(a.worst_ratio >= 1.0 - 1e-6);
}

TEST_CASE("min_separation lower bound") {
    CHECK(min_separation(std::vector<double>{1.0, -1.0, 0.0}) == 1.0);
    const auto k = make_union({{-1.0, 1.0}});
    const auto model = build_green_model(k);
    GTable g(model);
    std::vector<double> ds, gs;
    for (int i = 0; i < 20; ++i) {
        ds.push_back(1e-4 * std::pow(2.0 / 1e-4, i / 19.0));
        gs.push_back(g(ds.back()));
    }
    const auto exact = leja_sequence(k, 50);
    double best = 0.0;
    for (std::size_t i = 0; i < ds.size(); ++i) best = std::max(best, ds[i] * std::exp(-50.0 * gs[i]));
    CHECK(min_separation(exact) >= best);
    CHECK(check_separation(exact, ds, gs).ok);

    const auto quasi = quasi_leja_sequence(k, 50, 0.9, 3);
    CHECK(check_separation(quasi, ds, gs).ok);
    CHECK(check_separation(quasi, ds, gs).worst_margin >= -1e-12);
}

TEST_CASE("step maxima approach the capacity") {
    const auto k = make_union({{-1.0, 1.0}});
    const auto s = leja_sequence(k, 100);
    const double k100 = std::exp(s.log_step_max[99] / 99.0);
    CHECK(std::abs(k100 - 0.5) <= 0.05 * 0.5);
    for (std::size_t kk = 20; kk < 100; ++kk) {
        const double r = std::exp(s.log_step_max[kk] / static_cast<double>(kk));
        CHECK(r >= 0.5 * 0.95);
        CHECK(r <= 0.5 * 1.3);
    }
}
