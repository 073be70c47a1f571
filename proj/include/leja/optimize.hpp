// SPDX-License-Identifier: MIT
#pragma once

#include <boost/math/tools/minima.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>

namespace leja {

/// Local maximum of f on [lo, hi] by Brent's method (golden section with
/// parabolic steps). Returns (argmax, value). Infinite values of f are clamped
/// so that logarithmic poles inside the bracket do not derail the search.
template <class F>
[[nodiscard]] std::pair<double, double> refine_max(F&& f, double lo, double hi,
                                                   int bits = std::numeric_limits<double>::digits / 2,
                                                   std::uintmax_t max_iter = 200) {
    if (!(lo < hi)) return {lo, f(lo)};
    auto neg = [&](double x) {
        const double v = f(x);
        return std::isfinite(v) ? -v : (v > 0 ? -std::numeric_limits<double>::max()
                                              : std::numeric_limits<double>::max());
    };
    std::uintmax_t iters = max_iter;
    const auto [x, v] = boost::math::tools::brent_find_minima(neg, lo, hi, bits, iters);
    return {x, f(x)};
}

}  // namespace leja
