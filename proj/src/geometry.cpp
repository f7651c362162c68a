#include "polarmem/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polarmem/errors.hpp"

namespace polarmem {

namespace {

void check_memory(unsigned m) {
    if (m < 1) throw DomainError("memory order m must be at least 1");
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const char* what) {
    std::uint64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw OverflowError(std::string(what) + " does not fit in 64 bits");
    return out;
}

// Evaluates x(k) = x(k-1) + x(k-m) + c * N(k-m) for k = 1..n with x(k <= 0) = 0.
std::uint64_t complexity_recursion(int n, unsigned m, std::uint64_t c, const char* what) {
    check_memory(m);
    if (n < 1) throw DomainError("complexity recursions need n >= 1");
    const CodeLengths lengths(n, m);
    std::vector<std::uint64_t> chi(static_cast<std::size_t>(n) + 1, 0);
    auto at = [&](int k) { return k <= 0 ? std::uint64_t{0} : chi[static_cast<std::size_t>(k)]; };
    for (int k = 1; k <= n; ++k) {
        const int b = k - static_cast<int>(m);
        std::uint64_t extra;
        if (__builtin_mul_overflow(c, lengths(b), &extra))
            throw OverflowError(std::string(what) + " does not fit in 64 bits");
        chi[static_cast<std::size_t>(k)] = checked_add(checked_add(at(k - 1), at(b), what), extra, what);
    }
    return chi[static_cast<std::size_t>(n)];
}

}  // namespace

void MemoryParams::validate() const {
    check_memory(m);
    if (n < 0) throw DomainError("combining level n must be non-negative");
}

CodeLengths::CodeLengths(int n, unsigned m) : n_(std::max(n, 0)), m_(m) {
    check_memory(m);
    table_.assign(static_cast<std::size_t>(n_) + 1, 1);
    for (int k = 1; k <= n_; ++k)
        table_[static_cast<std::size_t>(k)] = checked_add((*this)(k - 1), (*this)(k - static_cast<int>(m)), "code length");
}

std::uint64_t code_length(int n, unsigned m) {
    check_memory(m);
    if (n < 1 - static_cast<int>(m)) throw DomainError("code_length needs n >= 1 - m");
    return CodeLengths(n, m)(n);
}

double dominant_root(unsigned m) {
    check_memory(m);
    const double dm = static_cast<double>(m);
    auto f = [dm](double r) { return std::pow(r, dm) - std::pow(r, dm - 1.0) - 1.0; };
    double lo = 1.0 + 1e-9;
    double hi = 2.0;
    if (f(hi) == 0.0) return hi;
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return std::abs(f(lo)) < std::abs(f(hi)) ? lo : hi;
}

TypicalFrequencies typical_frequencies(unsigned m) {
    const double phi = dominant_root(m);
    const double pm = (phi - 1.0) / (1.0 + m * (phi - 1.0));
    return {1.0 - m * pm, pm, (m - 1.0) * pm};
}

double achievable_exponent(unsigned m) { return typical_frequencies(m).p_plus; }

double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double growth_function(unsigned m, double q) {
    check_memory(m);
    const double upper = 1.0 / m;
    if (!(q >= 0.0 && q <= upper + 1e-15))
        throw DomainError("growth_function needs q in [0, 1/m]");
    const double scale = 1.0 - (m - 1.0) * q;
    if (scale <= 0.0) return 0.0;
    return scale * binary_entropy(std::min(q / scale, 1.0));
}

double divergence(unsigned m, double q) {
    const double g = growth_function(m, q);
    return std::max(0.0, std::log2(dominant_root(m)) - g);
}

std::uint64_t encoding_complexity(int n, unsigned m) { return complexity_recursion(n, m, 1, "encoding complexity"); }

std::uint64_t decoding_complexity(int n, unsigned m) { return complexity_recursion(n, m, 2, "decoding complexity"); }

double complexity_ratio(int n, unsigned m, ComplexityKind kind) {
    const auto len = static_cast<double>(code_length(n, m));
    if (len <= 1.0) throw DomainError("complexity_ratio needs N > 1");
    const auto chi = static_cast<double>(kind == ComplexityKind::Encoding ? encoding_complexity(n, m)
                                                                          : decoding_complexity(n, m));
    return chi / (len * std::log2(len));
}

GeometryReport geometry_report(unsigned m, int n_max) {
    MemoryParams{m, n_max}.validate();
    const auto freq = typical_frequencies(m);
    GeometryReport r{m, dominant_root(m), freq.p_plus, freq.p_minus, freq.p_star, freq.p_plus, {}};
    const CodeLengths lengths(n_max, m);
    for (int k = 0; k <= n_max; ++k) {
        r.levels.push_back({k, lengths(k), k >= 1 ? encoding_complexity(k, m) : 0,
                            k >= 1 ? decoding_complexity(k, m) : 0});
    }
    return r;
}

}  // namespace polarmem
