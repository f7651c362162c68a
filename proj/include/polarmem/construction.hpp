// Bit-channel reliabilities and information-set selection.
#pragma once

#include <cstdint>
#include <vector>

#include "polarmem/dmc.hpp"
#include "polarmem/encoder.hpp"

namespace polarmem {

/// Bhattacharyya value per channel; entry i-1 belongs to channel i.
struct ReliabilityVector {
    std::vector<double> z;

    std::size_t size() const noexcept { return z.size(); }
};

/// Exact erasure probabilities of all bit channels when the design channel is BEC(eps).
ReliabilityVector bec_reliabilities(int n, unsigned m, double eps);

/// The K channels (1-based, sorted ascending) with the smallest z; ties go to the lower index.
std::vector<std::uint64_t> select_info_set(const ReliabilityVector& r, std::size_t K);

/// Genie-aided per-channel bit-error frequencies over `trials` random inputs sent through
/// `channel`. Trial t draws from its own counter-based stream, so the result depends only on
/// the seed. `threads` = 0 picks the default worker count.
std::vector<double> mc_reliability_estimate(const CodeSpec& spec, const NoiseModel& channel, std::uint64_t trials,
                                            std::uint64_t seed, unsigned threads = 0);

inline constexpr std::uint64_t kExhaustiveWorkBudget = std::uint64_t{1} << 30;

/// Transition table of bit channel i (1-based) obtained by summing over the later bits.
/// Output index = y_index * 2^B + prior_index where y_index reads y_1 as the most significant
/// digit in base |Y| and prior_index packs the B earlier-decoded bits, first-decoded bit as
/// the most significant. Requires N <= 13.
DiscreteChannel exhaustive_bitchannel(int n, unsigned m, std::uint64_t i, const DiscreteChannel& w,
                                      std::uint64_t work_budget = kExhaustiveWorkBudget);

/// All bit channels built by iterating transform_pair along the level recursion.
std::vector<DiscreteChannel> recursive_bitchannels(int n, unsigned m, const DiscreteChannel& w,
                                                   std::size_t output_cap = kDefaultOutputCap);

}  // namespace polarmem
