#include "polarmem/decoder.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include "polarmem/errors.hpp"
#include "polarmem/geometry.hpp"
#include "polarmem/states.hpp"

namespace polarmem {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sign_of(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

// Value algebras used by the engine.
double combine_pair(double a, double b, const DecoderOptions& o) { return o.min_sum ? boxplus_min_sum(a, b) : boxplus(a, b); }

double combine_plus(double la, double lb, std::uint8_t u_minus, const DecoderOptions&) {
    const double s = u_minus ? -lb : lb;
    if (std::isinf(la) && std::isinf(s) && la != s) return 0.0;  // contradictory certainties
    return la + s;
}

std::int8_t combine_pair(std::int8_t a, std::int8_t b, const DecoderOptions&) { return static_cast<std::int8_t>(a * b); }

std::int8_t combine_plus(std::int8_t la, std::int8_t lb, std::uint8_t u_minus, const DecoderOptions&) {
    const auto s = static_cast<std::int8_t>(u_minus ? -lb : lb);
    if (la == 0) return s;
    if (s == 0 || s == la) return la;
    return 0;
}

std::uint8_t decide(double v) { return v < 0 ? 1 : 0; }
std::uint8_t decide(std::int8_t v) { return v < 0 ? 1 : 0; }

double to_llr(double v) { return v; }
double to_llr(std::int8_t v) { return v > 0 ? kInf : (v < 0 ? -kInf : 0.0); }

std::int8_t erasure_value(ErasureSymbol s) {
    return s == ErasureSymbol::Zero ? 1 : (s == ErasureSymbol::One ? -1 : 0);
}

void check_spec_matches(const CodeSpec& spec, const DecoderPlan& plan, std::size_t input) {
    if (spec.n != plan.level() || spec.m != plan.memory())
        throw DimensionError("workspace plan does not match the code spec");
    if (input != plan.length()) throw DimensionError("observation length does not equal N");
}

template <class V>
DecodeResult run_decode(std::span<const V> input, const CodeSpec& spec, BasicWorkspace<V>& ws,
                        const DecoderOptions& options) {
    check_spec_matches(spec, ws.plan(), input.size());
    const auto mask = spec.info_mask();
    ws.begin(input, options);
    DecodeResult r{BitVector(spec.N, 0), std::vector<double>(spec.N, 0.0), 0};
    while (!ws.finished()) {
        const auto slot = ws.next_slot();
        const V v = ws.next_value();
        const std::uint8_t bit = mask[slot] ? decide(v) : spec.frozen[slot];
        r.u_hat[slot] = bit;
        r.bit_llrs[slot] = to_llr(v);
        ws.commit(bit);
    }
    r.ops = ws.op_counter();
    return r;
}

}  // namespace

double boxplus(double a, double b) {
    if (a == 0.0 || b == 0.0) return 0.0;
    const double s = sign_of(a) * sign_of(b);
    const double aa = std::abs(a);
    const double ab = std::abs(b);
    if (std::isinf(aa) || std::isinf(ab)) return s * std::min(aa, ab);
    return s * std::min(aa, ab) + std::log1p(std::exp(-std::abs(a + b))) - std::log1p(std::exp(-std::abs(a - b)));
}

double boxplus_min_sum(double a, double b) { return sign_of(a) * sign_of(b) * std::min(std::abs(a), std::abs(b)); }

double erasure_llr(ErasureSymbol s) { return to_llr(erasure_value(s)); }

// ---- plan ----

DecoderPlan::DecoderPlan(int n, unsigned m) : n_(n), m_(m) {
    MemoryParams{m, n}.validate();
    orders_ = detail::level_orders(n, m);
    length_ = orders_.back().size();
    nodes_.reserve(2 * length_);
    build(n, 0);
}

std::int32_t DecoderPlan::build(int level, std::uint32_t offset) {
    const auto id = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back({level, offset});
    if (level <= 0) return id;
    const int mm = static_cast<int>(m_);
    const auto na = static_cast<std::uint32_t>(orders_[static_cast<std::size_t>(std::max(level - 1, 0))].size());
    const auto nb = static_cast<std::uint32_t>(orders_[static_cast<std::size_t>(std::max(level - mm, 0))].size());
    const auto a = build(level - 1, offset);
    const auto b = build(level - mm, offset + na);
    auto& node = nodes_[static_cast<std::size_t>(id)];
    node.a = a;
    node.b = b;
    node.na = na;
    node.nb = nb;
    return id;
}

std::shared_ptr<const DecoderPlan> DecoderPlan::shared(int n, unsigned m) {
    static std::mutex mutex;
    static std::map<std::pair<int, unsigned>, std::weak_ptr<const DecoderPlan>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{n, m}];
    if (auto p = slot.lock()) return p;
    auto p = std::make_shared<const DecoderPlan>(n, m);
    slot = p;
    return p;
}

// ---- workspace ----

template <class V>
BasicWorkspace<V>::BasicWorkspace(std::shared_ptr<const DecoderPlan> plan)
    : plan_(std::move(plan)), state_(plan_->nodes().size()) {}

template <class V>
void BasicWorkspace<V>::reset() {
    std::fill(state_.begin(), state_.end(), NodeState{});
    channel_ = {};
    ops_ = 0;
    position_ = 0;
    started_ = false;
    pending_ = false;
}

template <class V>
void BasicWorkspace<V>::begin(std::span<const V> channel, const DecoderOptions& options) {
    if (started_) throw StateError("decoder workspace reused without reset");
    if (channel.size() != plan_->length()) throw DimensionError("observation length does not equal N");
    channel_ = channel;
    options_ = options;
    started_ = true;
}

template <class V>
V BasicWorkspace<V>::next_value() {
    if (!started_) throw StateError("begin() must be called before decoding");
    if (pending_) throw StateError("previous bit was not committed");
    if (finished()) throw StateError("all bits have been decoded");
    pending_ = true;
    return value_at(0);
}

template <class V>
void BasicWorkspace<V>::commit(std::uint8_t bit) {
    if (!pending_) throw StateError("commit() without a pending bit");
    commit_at(0, bit & 1u);
    pending_ = false;
    ++position_;
}

template <class V>
V BasicWorkspace<V>::value_at(std::int32_t id) {
    const auto& node = plan_->nodes()[static_cast<std::size_t>(id)];
    if (node.a < 0) return channel_[node.offset];
    auto& st = state_[static_cast<std::size_t>(id)];
    const std::uint32_t j = plan_->order(node.level - 1)[st.a_pos];
    if (j >= node.nb) return value_at(node.a);  // pass-through copy
    ++ops_;
    if (st.minus_done) return combine_plus(st.la, st.lb, st.u_minus, options_);
    st.la = value_at(node.a);
    st.lb = value_at(node.b);
    return combine_pair(st.la, st.lb, options_);
}

template <class V>
void BasicWorkspace<V>::commit_at(std::int32_t id, std::uint8_t bit) {
    const auto& node = plan_->nodes()[static_cast<std::size_t>(id)];
    if (node.a < 0) return;
    auto& st = state_[static_cast<std::size_t>(id)];
    const std::uint32_t j = plan_->order(node.level - 1)[st.a_pos];
    if (j >= node.nb) {
        commit_at(node.a, bit);
        ++st.a_pos;
        return;
    }
    if (!st.minus_done) {
        st.u_minus = bit;
        st.minus_done = 1;
        return;
    }
    commit_at(node.a, bit);
    commit_at(node.b, static_cast<std::uint8_t>(bit ^ st.u_minus));
    st.minus_done = 0;
    ++st.a_pos;
}

template class BasicWorkspace<double>;
template class BasicWorkspace<std::int8_t>;

// ---- entry points ----

DecodeResult decode(std::span<const double> llr, const CodeSpec& spec, DecoderWorkspace& ws,
                    const DecoderOptions& options) {
    for (double v : llr)
        if (std::isnan(v)) throw ValidationError("LLR input contains NaN");
    return run_decode(llr, spec, ws, options);
}

DecodeResult decode(std::span<const double> llr, const CodeSpec& spec, const DecoderOptions& options) {
    spec.validate();
    DecoderWorkspace ws(DecoderPlan::shared(spec.n, spec.m));
    return decode(llr, spec, ws, options);
}

DecodeResult decode_bec(std::span<const ErasureSymbol> y, const CodeSpec& spec, ErasureWorkspace& ws) {
    std::vector<std::int8_t> values(y.size());
    for (std::size_t k = 0; k < y.size(); ++k) {
        if (static_cast<unsigned>(y[k]) > 2) throw ValidationError("invalid erasure symbol");
        values[k] = erasure_value(y[k]);
    }
    return run_decode<std::int8_t>(values, spec, ws, {});
}

DecodeResult decode_bec(std::span<const ErasureSymbol> y, const CodeSpec& spec) {
    spec.validate();
    ErasureWorkspace ws(DecoderPlan::shared(spec.n, spec.m));
    return decode_bec(y, spec, ws);
}

std::vector<double> genie_llrs(int n, unsigned m, std::span<const double> llr, std::span<const std::uint8_t> true_u,
                               std::uint64_t* ops) {
    DecoderWorkspace ws(DecoderPlan::shared(n, m));
    if (true_u.size() != ws.plan().length()) throw DimensionError("true_u length does not equal N");
    ws.begin(llr);
    std::vector<double> out(ws.plan().length());
    while (!ws.finished()) {
        const auto slot = ws.next_slot();
        out[slot] = ws.next_value();
        ws.commit(true_u[slot]);
    }
    if (ops) *ops = ws.op_counter();
    return out;
}

std::vector<std::int8_t> genie_erasure_values(std::span<const ErasureSymbol> y, std::span<const std::uint8_t> true_u,
                                              ErasureWorkspace& ws) {
    const std::size_t len = ws.plan().length();
    if (y.size() != len || true_u.size() != len) throw DimensionError("input length does not equal N");
    std::vector<std::int8_t> values(len);
    for (std::size_t k = 0; k < len; ++k) values[k] = erasure_value(y[k]);
    ws.begin(values);
    std::vector<std::int8_t> out(len);
    while (!ws.finished()) {
        const auto slot = ws.next_slot();
        out[slot] = ws.next_value();
        ws.commit(true_u[slot]);
    }
    return out;
}

std::vector<double> channel_llrs(const DiscreteChannel& w, std::span<const std::size_t> y) {
    std::vector<double> table(w.outputs());
    for (std::size_t s = 0; s < w.outputs(); ++s) {
        const double p0 = w.prob(0, s);
        const double p1 = w.prob(1, s);
        if (p0 == 0.0 && p1 == 0.0)
            table[s] = 0.0;
        else if (p1 == 0.0)
            table[s] = kInf;
        else if (p0 == 0.0)
            table[s] = -kInf;
        else
            table[s] = std::log(p0 / p1);
    }
    std::vector<double> out(y.size());
    for (std::size_t k = 0; k < y.size(); ++k) {
        if (y[k] >= w.outputs()) throw ValidationError("observation symbol outside the output alphabet");
        out[k] = table[y[k]];
    }
    return out;
}

double genie_llr(int n, unsigned m, std::uint64_t i, const DiscreteChannel& w, std::span<const std::size_t> y,
                 std::span<const std::uint8_t> true_u) {
    const auto len = code_length(n, m);
    if (i < 1 || i > len) throw DomainError("channel index out of range");
    if (y.size() != len) throw DimensionError("observation length does not equal N");
    const auto llr = channel_llrs(w, y);
    return genie_llrs(n, m, llr, true_u)[i - 1];
}

}  // namespace polarmem
