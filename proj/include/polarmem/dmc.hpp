// Binary-input discrete memoryless channels and the single-step pair transforms.
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace polarmem {

/// Default cap on the output alphabet produced by transform_pair (2^20 symbols).
inline constexpr std::size_t kDefaultOutputCap = std::size_t{1} << 20;

/// Row-sum tolerance used when validating transition tables.
inline constexpr double kRowSumTolerance = 1e-12;

/// Binary-input channel W(y|x) over a finite output alphabet {0, ..., outputs-1}.
///
/// Immutable after construction; the constructor validates that both rows are
/// probability vectors.
class DiscreteChannel {
public:
    DiscreteChannel(std::vector<double> row0, std::vector<double> row1);

    std::size_t outputs() const noexcept { return row0_.size(); }

    /// W(y|x)
    double prob(unsigned x, std::size_t y) const noexcept { return x == 0 ? row0_[y] : row1_[y]; }

    const std::vector<double>& row(unsigned x) const noexcept { return x == 0 ? row0_ : row1_; }

    /// Noiseless channel y = x.
    static DiscreteChannel identity();
    /// Channel whose output is independent of the input (both rows equal `row`).
    static DiscreteChannel useless(std::vector<double> row = {1.0});
    static DiscreteChannel bsc(double p);

private:
    std::vector<double> row0_;
    std::vector<double> row1_;
};

/// Binary erasure channel; converts to a three-output DiscreteChannel with
/// outputs {0, 1, erasure}.
struct ErasureChannel {
    double eps;

    explicit ErasureChannel(double erasure_probability);

    DiscreteChannel to_discrete() const;
    double capacity() const noexcept { return 1.0 - eps; }
    double bhattacharyya() const noexcept { return eps; }
};

/// Symmetric capacity I(W) in bits, uniform input. 0 log 0 terms vanish.
double symmetric_capacity(const DiscreteChannel& w);

/// Bhattacharyya parameter Z(W) = sum_y sqrt(W(y|0) W(y|1)).
double bhattacharyya(const DiscreteChannel& w);

/// Symmetric cut-off rate J(W) = log2(2 / (1 + Z(W))).
double cutoff_rate(const DiscreteChannel& w);
double cutoff_rate_from_z(double z);

struct ChannelPair {
    DiscreteChannel minus;
    DiscreteChannel plus;
};

/// Combine W'(y1|x1 ^ x2) W''(y2|x2) and split.
///
/// minus: input x1, output (y1, y2) at index y1*|Y2| + y2.
/// plus:  input x2, output (y1, y2, x1) at index 2*(y1*|Y2| + y2) + x1.
/// Output alphabets are never merged. Throws BudgetError when the plus alphabet
/// would exceed `output_cap`.
ChannelPair transform_pair(const DiscreteChannel& w1, const DiscreteChannel& w2,
                           std::size_t output_cap = kDefaultOutputCap);

struct ErasurePair {
    ErasureChannel minus;
    ErasureChannel plus;
};

/// BEC closure of the pair transform: minus eps = a + b - ab, plus eps = ab.
ErasurePair bec_transform(const ErasureChannel& a, const ErasureChannel& b);

/// Channel family used to describe noise and design channels.
enum class ChannelKind { Bec, Bsc };

struct NoiseModel {
    ChannelKind kind = ChannelKind::Bec;
    double parameter = 0.0;  ///< erasure probability (BEC) or crossover probability (BSC)

    static NoiseModel bec(double eps);
    static NoiseModel bsc(double p);

    DiscreteChannel to_discrete() const;
    std::string name() const;  ///< "BEC" or "BSC"
};

/// Parses "bec:0.3" / "bsc:0.1" (case-insensitive kind).
NoiseModel parse_noise_model(const std::string& text);

}  // namespace polarmem
