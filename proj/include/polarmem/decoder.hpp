// Successive-cancellation decoding over the memory-m recursion.
//
// A DecoderPlan holds the immutable node topology and per-level orders for one (n, m);
// it can be shared across threads. A workspace owns the mutable per-node state for one
// decode pass and must be reset before it is reused.
#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "polarmem/dmc.hpp"
#include "polarmem/encoder.hpp"

namespace polarmem {

struct DecoderOptions {
    /// Replace the exact soft combination by sign * min. Off by default.
    bool min_sum = false;
};

/// Channel symbol for the erasure fast path.
enum class ErasureSymbol : std::uint8_t { Zero, One, Erased };

class DecoderPlan {
public:
    struct Node {
        int level;
        std::uint32_t offset;  ///< first channel output covered by this node
        std::int32_t a = -1;   ///< child at level-1 (top block); -1 for leaves
        std::int32_t b = -1;   ///< child at level-m (bottom block)
        std::uint32_t na = 0;  ///< N(level-1)
        std::uint32_t nb = 0;  ///< N(level-m)
    };

    DecoderPlan(int n, unsigned m);

    /// Process-wide cache keyed by (n, m).
    static std::shared_ptr<const DecoderPlan> shared(int n, unsigned m);

    int level() const noexcept { return n_; }
    unsigned memory() const noexcept { return m_; }
    std::size_t length() const noexcept { return length_; }

    /// 0-based channel slots in decode order.
    const std::vector<std::uint32_t>& sequence() const noexcept { return orders_.back(); }
    /// Decode order of level l (0-based slots), for l = 0..n.
    const std::vector<std::uint32_t>& order(int l) const noexcept { return orders_[static_cast<std::size_t>(l < 0 ? 0 : l)]; }
    const std::vector<Node>& nodes() const noexcept { return nodes_; }

private:
    std::int32_t build(int level, std::uint32_t offset);

    int n_;
    unsigned m_;
    std::size_t length_;
    std::vector<std::vector<std::uint32_t>> orders_;
    std::vector<Node> nodes_;  // nodes_[0] is the root
};

/// Per-decode mutable state. V is double (natural-log LLR) or int8_t (erasure algebra:
/// +1 means bit 0 known, -1 means bit 1 known, 0 means erased).
template <class V>
class BasicWorkspace {
public:
    explicit BasicWorkspace(std::shared_ptr<const DecoderPlan> plan);

    const DecoderPlan& plan() const noexcept { return *plan_; }

    /// Clears all partial sums and counters so the workspace can decode again.
    void reset();

    /// Starts a pass. Throws StateError when the workspace was used and not reset.
    void begin(std::span<const V> channel, const DecoderOptions& options = {});

    /// Decision value for the next bit in decode order; call commit() before asking again.
    V next_value();

    /// Feeds back the decided (or genie) bit for the bit returned by next_value().
    void commit(std::uint8_t bit);

    /// Channel slot (0-based) of the next bit to decide.
    std::uint32_t next_slot() const { return plan_->sequence()[position_]; }
    std::size_t position() const noexcept { return position_; }
    bool finished() const noexcept { return position_ == plan_->length(); }

    /// Pair evaluations performed since the last reset.
    std::uint64_t op_counter() const noexcept { return ops_; }

private:
    V value_at(std::int32_t node);
    void commit_at(std::int32_t node, std::uint8_t bit);

    struct NodeState {
        std::uint32_t a_pos = 0;
        std::uint8_t minus_done = 0;
        std::uint8_t u_minus = 0;
        V la{};
        V lb{};
    };

    std::shared_ptr<const DecoderPlan> plan_;
    std::vector<NodeState> state_;
    std::span<const V> channel_;
    DecoderOptions options_;
    std::uint64_t ops_ = 0;
    std::size_t position_ = 0;
    bool started_ = false;
    bool pending_ = false;
};

using DecoderWorkspace = BasicWorkspace<double>;
using ErasureWorkspace = BasicWorkspace<std::int8_t>;

struct DecodeResult {
    BitVector u_hat;               ///< entry i-1 is the decision for channel i
    std::vector<double> bit_llrs;  ///< decision LLR for channel i at entry i-1
    std::uint64_t ops = 0;
};

/// Exact log-domain soft combination 2 atanh(tanh(a/2) tanh(b/2)), safe for infinities.
double boxplus(double a, double b);
double boxplus_min_sum(double a, double b);

DecodeResult decode(std::span<const double> llr, const CodeSpec& spec, DecoderWorkspace& ws,
                    const DecoderOptions& options = {});
DecodeResult decode(std::span<const double> llr, const CodeSpec& spec, const DecoderOptions& options = {});

DecodeResult decode_bec(std::span<const ErasureSymbol> y, const CodeSpec& spec, ErasureWorkspace& ws);
DecodeResult decode_bec(std::span<const ErasureSymbol> y, const CodeSpec& spec);

/// LLR of every bit when the true earlier bits are fed back; entry i-1 belongs to channel i.
std::vector<double> genie_llrs(int n, unsigned m, std::span<const double> llr, std::span<const std::uint8_t> true_u,
                               std::uint64_t* ops = nullptr);

/// Erasure-algebra version of genie_llrs on a caller-owned workspace (reset by the caller).
std::vector<std::int8_t> genie_erasure_values(std::span<const ErasureSymbol> y, std::span<const std::uint8_t> true_u,
                                              ErasureWorkspace& ws);

/// log(W(y|0) / W(y|1)) per observation; impossible symbols map to 0.
std::vector<double> channel_llrs(const DiscreteChannel& w, std::span<const std::size_t> y);

/// Genie LLR of channel i (1-based) for observation y under w.
double genie_llr(int n, unsigned m, std::uint64_t i, const DiscreteChannel& w, std::span<const std::size_t> y,
                 std::span<const std::uint8_t> true_u);

/// LLR image of an erasure symbol: +inf, -inf or 0.
double erasure_llr(ErasureSymbol s);

}  // namespace polarmem
