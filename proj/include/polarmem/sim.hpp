// Monte Carlo block-error simulation and the table generators behind the figures.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polarmem/dmc.hpp"
#include "polarmem/encoder.hpp"
#include "polarmem/rng.hpp"

namespace polarmem {

struct Interval {
    double low;
    double high;
};

inline constexpr double kZ95 = 1.959963984540054;

/// Wilson score interval for `successes` out of `trials` at normal quantile z.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kZ95);

struct TrialReport {
    std::uint64_t trials = 0;
    std::uint64_t block_errors = 0;
    double bler = 0.0;
    double wilson_95_low = 0.0;
    double wilson_95_high = 0.0;
    std::uint64_t seed = 0;
    double elapsed_seconds = 0.0;
    std::string rng = kRngName;
};

/// Random messages are encoded, sent through `noise` and SC-decoded. A block error is any
/// info-bit mismatch. Trial t uses Philox stream (seed, t), so the counts depend only on seed.
TrialReport simulate_bler(const CodeSpec& spec, const NoiseModel& noise, std::uint64_t trials, std::uint64_t seed,
                          unsigned threads = 0);

/// Chooses n with N(n, m) nearest to target; ties go to the larger N.
int nearest_level(unsigned m, double target);

struct ComplexityRow {
    unsigned m;
    double target;
    int n;
    std::uint64_t N;
    double eta_enc;
    double eta_dec;
};

std::vector<ComplexityRow> complexity_figure(const std::vector<unsigned>& m_values, const std::vector<double>& targets);

struct ExponentRow {
    unsigned m;
    double p_plus;
};

/// Throws DomainError for m outside 1..200.
std::vector<ExponentRow> exponent_figure(const std::vector<unsigned>& m_values);

/// m_lo, m_lo+1, ..., m_hi.
std::vector<unsigned> memory_range(unsigned m_lo, unsigned m_hi);

}  // namespace polarmem
