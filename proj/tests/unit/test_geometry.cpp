#include <cmath>
#include <cstdint>

#include "doctest.h"
#include "polarmem/errors.hpp"
#include "polarmem/geometry.hpp"

using namespace polarmem;

namespace {
double F(unsigned m, double r) { return std::pow(r, m) - std::pow(r, m - 1.0) - 1.0; }
}  // namespace

TEST_CASE("code lengths") {
    for (unsigned m = 1; m <= 9; ++m) CHECK(code_length(0, m) == 1);
    for (int k = -2; k <= 0; ++k) CHECK(code_length(k, 3) == 1);
    CHECK_THROWS_AS(code_length(-3, 3), DomainError);
    CHECK(code_length(10, 1) == 1024);
    const std::uint64_t fib[] = {2, 3, 5, 8, 13, 21};
    for (int n = 1; n <= 6; ++n) CHECK(code_length(n, 2) == fib[n - 1]);
    CHECK(code_length(20, 2) == 17711);
    CHECK(code_length(63, 1) == (std::uint64_t{1} << 63));
    CHECK_THROWS_AS(code_length(64, 1), OverflowError);
    CHECK_THROWS_AS(code_length(200, 2), OverflowError);

    const CodeLengths table(30, 3);
    for (int k = -2; k <= 30; ++k) CHECK(table(k) == code_length(k, 3));
}

TEST_CASE("memory params validation") {
    CHECK_THROWS_AS((MemoryParams{0, 3}.validate()), DomainError);
    CHECK_THROWS_AS((MemoryParams{2, -1}.validate()), DomainError);
    CHECK_NOTHROW((MemoryParams{2, 0}.validate()));
}

TEST_CASE("dominant root") {
    CHECK(dominant_root(1) == 2.0);
    CHECK(std::fabs(dominant_root(2) - 1.618033988749895) < 1e-9);
    const double r3 = dominant_root(3);
    CHECK(std::fabs(F(3, r3)) <= 1e-12);
    CHECK(r3 < dominant_root(2));
    // high-precision reference values
    CHECK(std::fabs(r3 - 1.4655712318767680267) < 1e-13);
    CHECK(std::fabs(dominant_root(12) - 1.1729507500239802071) < 1e-13);
    CHECK(std::fabs(dominant_root(50) - 1.0593370542783374816) < 1e-13);
    double prev = 3.0;
    for (unsigned m = 1; m <= 50; ++m) {
        const double r = dominant_root(m);
        CHECK(r > 1.0);
        CHECK(r <= 2.0);
        CHECK(r < prev);
        CHECK(std::fabs(F(m, r)) <= 1e-12);
        prev = r;
    }
}

TEST_CASE("single sign change on (1, 2]") {
    for (unsigned m = 1; m <= 20; ++m) {
        int changes = 0;
        double last = F(m, 1.0 + 1e-9);
        for (int k = 1; k <= 20000; ++k) {
            const double v = F(m, 1.0 + 1e-9 + k * (1.0 - 1e-9) / 20000.0);
            if ((v > 0) != (last > 0)) ++changes;
            last = v;
        }
        CHECK(changes == (m == 1 ? 0 : 1));  // F(1, r) = r - 2 touches zero only at r = 2
    }
}

TEST_CASE("typical frequencies") {
    auto f = typical_frequencies(1);
    CHECK(f.p_plus == 0.5);
    CHECK(f.p_minus == 0.5);
    CHECK(f.p_star == 0.0);
    f = typical_frequencies(2);
    CHECK(std::fabs(f.p_plus - 0.4472136) < 1e-6);
    CHECK(std::fabs(f.p_minus - 0.2763932) < 1e-6);
    CHECK(std::fabs(f.p_star - 0.2763932) < 1e-6);
    for (unsigned m = 1; m <= 60; ++m) {
        f = typical_frequencies(m);
        CHECK(std::fabs(f.p_plus + f.p_minus + f.p_star - 1.0) < 1e-12);
        CHECK(std::fabs(f.p_star - (m - 1.0) * f.p_minus) < 1e-12);
        CHECK(achievable_exponent(m) == f.p_plus);
    }
}

TEST_CASE("achievable exponent ordering") {
    CHECK(achievable_exponent(1) == 0.5);
    CHECK(std::fabs(achievable_exponent(2) - 0.4472136) < 1e-6);
    CHECK(achievable_exponent(50) < achievable_exponent(12));
    CHECK(achievable_exponent(12) < achievable_exponent(2));
    for (unsigned m = 1; m < 80; ++m) CHECK(achievable_exponent(m + 1) < achievable_exponent(m));
}

TEST_CASE("growth function") {
    for (unsigned m = 1; m <= 6; ++m) {
        CHECK(growth_function(m, 0.0) == 0.0);
        CHECK(std::fabs(growth_function(m, 1.0 / m)) < 1e-14);
        CHECK_THROWS_AS(growth_function(m, -0.01), DomainError);
        CHECK_THROWS_AS(growth_function(m, 1.0 / m + 1e-6), DomainError);
    }
    CHECK(growth_function(1, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
    const double pm2 = typical_frequencies(2).p_minus;
    CHECK(std::fabs(growth_function(2, pm2) - std::log2(1.6180339887)) < 1e-6);
    CHECK(std::fabs(growth_function(2, pm2) - std::log2(dominant_root(2))) < 1e-12);
    CHECK(std::fabs(growth_function(2, 0.1) - 0.45293250129808112662) < 1e-13);
    CHECK(std::fabs(growth_function(3, 0.2) - 0.55097750043269370887) < 1e-13);
}

TEST_CASE("growth function is concave") {
    for (unsigned m = 1; m <= 8; ++m) {
        const double top = 1.0 / m;
        for (int a = 0; a <= 40; ++a)
            for (int b = a + 2; b <= 40; b += 3) {
                const double qa = top * a / 40.0, qb = top * b / 40.0;
                const double mid = growth_function(m, 0.5 * (qa + qb));
                CHECK(mid >= 0.5 * (growth_function(m, qa) + growth_function(m, qb)) - 1e-14);
            }
    }
}

TEST_CASE("divergence") {
    for (unsigned m = 1; m <= 10; ++m) CHECK(std::fabs(divergence(m, typical_frequencies(m).p_minus)) < 1e-12);
    CHECK(divergence(1, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::fabs(divergence(2, 0.1) - 0.24130941233253617512) < 1e-12);
    for (unsigned m = 1; m <= 6; ++m)
        for (int k = 0; k <= 50; ++k) CHECK(divergence(m, k / (50.0 * m)) >= 0.0);
    CHECK_THROWS_AS(divergence(2, 0.7), DomainError);
}

TEST_CASE("complexities") {
    CHECK(decoding_complexity(3, 1) == 24);
    CHECK(encoding_complexity(3, 1) == 12);
    CHECK(encoding_complexity(3, 2) == 5);
    CHECK(decoding_complexity(3, 2) == 10);
    CHECK(encoding_complexity(1, 4) == 1);
    CHECK(decoding_complexity(1, 4) == 2);
    for (int n = 1; n <= 40; ++n) {
        CHECK(decoding_complexity(n, 1) == static_cast<std::uint64_t>(n) << n);
        CHECK(encoding_complexity(n, 1) == static_cast<std::uint64_t>(n) << (n - 1));
    }
    for (unsigned m = 2; m <= 5; ++m)
        for (int n = 1; n <= 30; ++n) CHECK(decoding_complexity(n, m) == 2 * encoding_complexity(n, m));
    CHECK_THROWS_AS(decoding_complexity(0, 1), DomainError);
    CHECK_THROWS_AS(decoding_complexity(62, 1), OverflowError);
}

TEST_CASE("complexity ratios") {
    for (int n = 2; n <= 40; ++n) {
        CHECK(complexity_ratio(n, 1, ComplexityKind::Decoding) == 1.0);
        CHECK(complexity_ratio(n, 1, ComplexityKind::Encoding) == 0.5);
    }
    int best = 1;
    for (int n = 1; n < 200; ++n)
        if (std::fabs(double(code_length(n, 12)) - 1e4) < std::fabs(double(code_length(best, 12)) - 1e4)) best = n;
    const double eta = complexity_ratio(best, 12, ComplexityKind::Decoding);
    CHECK(eta >= 0.4);
    CHECK(eta <= 0.6);
}

TEST_CASE("length grows like phi^n") {
    for (unsigned m = 1; m <= 8; ++m) {
        const double lp = std::log2(dominant_root(m));
        double prev_dev = 0;
        for (int n = 0; n <= 60; ++n) {
            const double dev = std::log2(double(code_length(n, m))) - n * lp;
            CHECK(std::fabs(dev) < 4.0);
            if (n == 60) CHECK(std::fabs(dev - prev_dev) < 1e-3);
            prev_dev = dev;
        }
    }
}

TEST_CASE("geometry report") {
    const auto r = geometry_report(2, 5);
    CHECK(r.m == 2);
    CHECK(r.levels.size() == 6);
    CHECK(r.levels[3].length == 5);
    CHECK(r.levels[3].chi_enc == 5);
    CHECK(r.levels[3].chi_dec == 10);
    CHECK(r.exponent == r.p_plus);
    CHECK(r.phi > 1.0);
    CHECK(r.phi <= 2.0);
}
