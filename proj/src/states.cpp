#include "polarmem/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polarmem/errors.hpp"
#include "polarmem/geometry.hpp"

namespace polarmem {

namespace {

void check_level(int n, unsigned m) {
    if (m < 1) throw DomainError("memory order m must be at least 1");
    if (n < 1) throw DomainError("state vectors need n >= 1");
}

}  // namespace

std::string to_string(const StateVector& s) {
    std::string out;
    out.reserve(s.size());
    for (auto sym : s) out.push_back(sym == StateSymbol::Plus ? '+' : sym == StateSymbol::Minus ? '-' : '*');
    return out;
}

StateVector parse_state_vector(const std::string& text) {
    StateVector s;
    s.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '+': s.push_back(StateSymbol::Plus); break;
            case '-': s.push_back(StateSymbol::Minus); break;
            case '*': s.push_back(StateSymbol::Star); break;
            default: throw ValidationError(std::string("unknown state symbol '") + c + "'");
        }
    }
    return s;
}

std::vector<StateVector> assign_states(int n, unsigned m, std::uint64_t symbol_budget) {
    check_level(n, m);
    const CodeLengths len(n, m);
    if (len(n) > symbol_budget / static_cast<std::uint64_t>(n))
        throw BudgetError("assign_states would exceed the symbol budget");

    std::vector<StateVector> prev{StateVector{}};
    for (int l = 1; l <= n; ++l) {
        const std::size_t na = len(l - 1);
        const std::size_t nb = len(l - static_cast<int>(m));
        std::vector<StateVector> cur(na + nb);
        for (std::size_t j = 0; j < nb; ++j) {
            cur[na + j] = prev[j];
            cur[na + j].push_back(StateSymbol::Minus);
        }
        for (std::size_t j = 0; j < na; ++j) {
            cur[j] = std::move(prev[j]);
            cur[j].push_back(j < nb ? StateSymbol::Plus : StateSymbol::Star);
        }
        prev = std::move(cur);
    }
    return prev;
}

StateVector state_vector_of(int n, unsigned m, std::uint64_t channel_index) {
    check_level(n, m);
    const CodeLengths len(n, m);
    if (channel_index < 1 || channel_index > len(n)) throw DomainError("channel index out of range");
    StateVector s(static_cast<std::size_t>(n));
    std::uint64_t j = channel_index - 1;
    for (int l = n; l >= 1; --l) {
        const std::uint64_t na = len(l - 1);
        const std::uint64_t nb = len(l - static_cast<int>(m));
        StateSymbol sym;
        if (j >= na) {
            sym = StateSymbol::Minus;
            j -= na;
        } else {
            sym = j < nb ? StateSymbol::Plus : StateSymbol::Star;
        }
        s[static_cast<std::size_t>(l - 1)] = sym;
    }
    return s;
}

bool validate_state_vector(const StateVector& s, unsigned m) {
    if (m < 1 || s.empty()) return false;
    if (s.front() == StateSymbol::Star) return false;
    unsigned stars_due = 0;
    for (auto sym : s) {
        if (stars_due > 0) {
            if (sym != StateSymbol::Star) return false;
            --stars_due;
        } else if (sym == StateSymbol::Star) {
            return false;
        } else if (sym == StateSymbol::Minus) {
            stars_due = m - 1;
        }
    }
    return true;
}

std::vector<std::uint8_t> to_binary(const StateVector& s) {
    std::vector<std::uint8_t> b(s.size());
    std::transform(s.begin(), s.end(), b.begin(), [](StateSymbol x) { return x == StateSymbol::Plus ? 1 : 0; });
    return b;
}

namespace detail {

std::vector<std::vector<std::uint32_t>> level_orders(int n, unsigned m) {
    if (m < 1) throw DomainError("memory order m must be at least 1");
    if (n < 0) throw DomainError("level must be non-negative");
    const CodeLengths len(n, m);
    if (len(n) > std::numeric_limits<std::uint32_t>::max() / 2)
        throw BudgetError("decode order too large for 32-bit indexing");
    std::vector<std::vector<std::uint32_t>> orders(static_cast<std::size_t>(n) + 1);
    orders[0] = {0};
    for (int l = 1; l <= n; ++l) {
        const auto na = static_cast<std::uint32_t>(len(l - 1));
        const auto nb = static_cast<std::uint32_t>(len(l - static_cast<int>(m)));
        auto& cur = orders[static_cast<std::size_t>(l)];
        cur.reserve(na + nb);
        for (std::uint32_t j : orders[static_cast<std::size_t>(l - 1)]) {
            if (j < nb) cur.push_back(j + na);  // the minus partner is decided first
            cur.push_back(j);
        }
    }
    return orders;
}

}  // namespace detail

std::vector<std::uint64_t> decode_sequence(int n, unsigned m) {
    auto orders = detail::level_orders(n, m);
    const auto& last = orders.back();
    std::vector<std::uint64_t> seq(last.size());
    std::transform(last.begin(), last.end(), seq.begin(), [](std::uint32_t j) { return std::uint64_t{j} + 1; });
    return seq;
}

std::vector<std::uint64_t> bit_reversed_order(int n, unsigned m) {
    const auto seq = decode_sequence(n, m);
    std::vector<std::uint64_t> pi(seq.size());
    for (std::size_t pos = 0; pos < seq.size(); ++pos) pi[seq[pos] - 1] = pos + 1;
    return pi;
}

std::vector<OrderedCodeIndex> ordered_indices(int n, unsigned m) {
    const auto states = assign_states(n, m);
    const auto pi = bit_reversed_order(n, m);
    std::vector<OrderedCodeIndex> out;
    out.reserve(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) out.push_back({i + 1, to_binary(states[i]), pi[i]});
    return out;
}

double big_log2(const BigCount& x) {
    if (x <= 0) return -std::numeric_limits<double>::infinity();
    const auto msb = static_cast<long>(boost::multiprecision::msb(x));
    if (msb < 63) return std::log2(static_cast<double>(x.convert_to<std::uint64_t>()));
    const long shift = msb - 62;
    const BigCount top = x >> shift;
    return std::log2(static_cast<double>(top.convert_to<std::uint64_t>())) + static_cast<double>(shift);
}

BigCount TypeClassTable::total() const {
    BigCount sum = 0;
    for (const auto& c : counts) sum += c;
    return sum;
}

TypeClassTable count_type_classes(int n, unsigned m) {
    check_level(n, m);
    const std::size_t kmax = static_cast<std::size_t>(n) / m + 1;
    // dp[s][k]: s = 0 means the next symbol is free, s > 0 means s stars are still owed.
    std::vector<std::vector<BigCount>> dp(m, std::vector<BigCount>(kmax + 1, 0));
    dp[0][0] = 1;
    for (int step = 0; step < n; ++step) {
        std::vector<std::vector<BigCount>> next(m, std::vector<BigCount>(kmax + 1, 0));
        for (std::size_t k = 0; k <= kmax; ++k) {
            const BigCount& free = dp[0][k];
            if (free != 0) {
                next[0][k] += free;
                if (k + 1 <= kmax) next[m - 1][k + 1] += free;  // m = 1 lands back in the free state
            }
            for (unsigned s = 1; s < m; ++s)
                if (dp[s][k] != 0) next[s - 1][k] += dp[s][k];
        }
        dp = std::move(next);
    }
    TypeClassTable table{m, n, std::vector<BigCount>(kmax + 1, 0)};
    for (unsigned s = 0; s < m; ++s)
        for (std::size_t k = 0; k <= kmax; ++k) table.counts[k] += dp[s][k];
    return table;
}

double typical_mass(const TypeClassTable& table, double eps) {
    if (!(eps > 0.0)) throw DomainError("typical_mass needs eps > 0");
    const double pm = typical_frequencies(table.m).p_minus;
    BigCount inside = 0;
    for (std::size_t k = 0; k < table.counts.size(); ++k)
        if (std::abs(static_cast<double>(k) / table.n - pm) <= eps) inside += table.counts[k];
    const BigCount total = table.total();
    if (inside == total) return 1.0;
    if (inside == 0) return 0.0;
    return std::exp2(big_log2(inside) - big_log2(total));
}

double typical_mass(int n, unsigned m, double eps) { return typical_mass(count_type_classes(n, m), eps); }

}  // namespace polarmem
