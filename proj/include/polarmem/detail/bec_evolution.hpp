// Level-by-level erasure-probability evolution shared by construction and the lab.
#pragma once

#include <cmath>
#include <deque>
#include <vector>

#include "polarmem/geometry.hpp"

namespace polarmem::detail {

/// Erasure probabilities stored directly.
struct LinearBecAlgebra {
    using value_type = double;
    static double from_eps(double eps) { return eps; }
    static double plus(double a, double b) { return a * b; }
    static double minus(double a, double b) { return a + b - a * b; }
};

/// Erasure probabilities stored as log2 z so doubly-exponentially small values survive.
struct Log2BecAlgebra {
    using value_type = double;
    static double from_eps(double eps) { return std::log2(eps); }
    static double plus(double a, double b) { return a + b; }
    // log2(za + zb - za zb) = log2(1 - (1-za)(1-zb))
    static double minus(double a, double b) {
        constexpr double ln2 = 0.69314718055994530942;
        if (a == -INFINITY) return b;
        if (b == -INFINITY) return a;
        if (std::max(a, b) < -1.0) {
            // za + zb (1 - za), computed as a log-sum.
            const double c = b + std::log2(-std::expm1(a * ln2));
            const double hi = std::max(a, c);
            const double lo = std::min(a, c);
            return hi + std::log1p(std::exp2(lo - hi)) / ln2;
        }
        const double u1 = -std::expm1(a * ln2);  // 1 - za
        const double u2 = -std::expm1(b * ln2);
        return std::log1p(-u1 * u2) / ln2;
    }
};

/// Evolves the base value through levels 1..n. Element j of the result is channel j+1.
template <class Algebra>
std::vector<typename Algebra::value_type> evolve_levels(int n, unsigned m, typename Algebra::value_type base) {
    using V = typename Algebra::value_type;
    const CodeLengths len(n, m);
    // window holds levels max(l-m, ...)..l-1; levels <= 0 are the single base value.
    std::deque<std::vector<V>> window;
    for (unsigned k = 0; k < m; ++k) window.push_back({base});
    for (int l = 1; l <= n; ++l) {
        const auto& a = window.back();
        const auto& b = window.front();
        const std::size_t na = len(l - 1);
        const std::size_t nb = len(l - static_cast<int>(m));
        std::vector<V> cur(na + nb);
        for (std::size_t j = 0; j < nb; ++j) {
            cur[j] = Algebra::plus(a[j], b[j]);
            cur[na + j] = Algebra::minus(a[j], b[j]);
        }
        for (std::size_t j = nb; j < na; ++j) cur[j] = a[j];
        window.pop_front();
        window.push_back(std::move(cur));
    }
    return window.back();
}

}  // namespace polarmem::detail
