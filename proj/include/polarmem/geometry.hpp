// Code-length recursion, the characteristic root and the quantities derived from it.
#pragma once

#include <cstdint>
#include <vector>

namespace polarmem {

/// Memory order m (>= 1) and combining level n (>= 0).
struct MemoryParams {
    unsigned m = 1;
    int n = 0;

    void validate() const;  ///< throws DomainError
};

/// N(n, m) = N(n-1, m) + N(n-m, m), N(k) = 1 for k <= 0.
/// Throws OverflowError if the result does not fit in 64 bits.
std::uint64_t code_length(int n, unsigned m);

/// Table of N(k, m) for k in [1-m, n]; index with operator() using the level itself.
class CodeLengths {
public:
    CodeLengths(int n, unsigned m);

    std::uint64_t operator()(int level) const { return level <= 0 ? 1 : table_[static_cast<std::size_t>(level)]; }
    int max_level() const noexcept { return n_; }
    unsigned memory() const noexcept { return m_; }

private:
    int n_;
    unsigned m_;
    std::vector<std::uint64_t> table_;  // table_[k] = N(k) for k = 0..n
};

/// Largest real root of rho^m - rho^(m-1) - 1, found by bisection on (1, 2].
double dominant_root(unsigned m);

struct TypicalFrequencies {
    double p_plus;
    double p_minus;
    double p_star;
};

TypicalFrequencies typical_frequencies(unsigned m);

/// Supremum of the achievable error exponent; equals p_plus.
double achievable_exponent(unsigned m);

/// Binary entropy in bits.
double binary_entropy(double p);

/// G(m, q) = (1 - (m-1) q) H(q / (1 - (m-1) q)), q in [0, 1/m].
double growth_function(unsigned m, double q);

/// log2(phi) - G(m, q), clamped at 0.
double divergence(unsigned m, double q);

/// XOR count of the recursive encoder, chi_E(n) = chi_E(n-1) + chi_E(n-m) + N(n-m).
std::uint64_t encoding_complexity(int n, unsigned m);

/// Pair-LLR evaluations of the SC decoder, chi_D(n) = chi_D(n-1) + chi_D(n-m) + 2 N(n-m).
std::uint64_t decoding_complexity(int n, unsigned m);

enum class ComplexityKind { Encoding, Decoding };

/// chi / (N log2 N). Requires N > 1.
double complexity_ratio(int n, unsigned m, ComplexityKind kind);

struct GeometryLevel {
    int n;
    std::uint64_t length;
    std::uint64_t chi_enc;
    std::uint64_t chi_dec;
};

struct GeometryReport {
    unsigned m;
    double phi;
    double p_plus;
    double p_minus;
    double p_star;
    double exponent;
    std::vector<GeometryLevel> levels;  ///< n = 0..n_max
};

GeometryReport geometry_report(unsigned m, int n_max);

}  // namespace polarmem
