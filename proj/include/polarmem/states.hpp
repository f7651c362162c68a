// State vectors over {+, -, *}, the decode order derived from them, and type-class counting.
//
// Channel indices are 1-based wherever they appear as values (decode positions,
// index lists). Containers indexed by channel use slot i-1 for channel i.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace polarmem {

enum class StateSymbol : std::uint8_t { Plus, Minus, Star };

using StateVector = std::vector<StateSymbol>;

/// Renders a vector as e.g. "+-*" (ASCII '*' for the pass-through symbol).
std::string to_string(const StateVector& s);

/// Inverse of to_string; accepts '+', '-', '*'. Throws ValidationError otherwise.
StateVector parse_state_vector(const std::string& text);

/// Default cap on the total number of symbols materialized by assign_states.
inline constexpr std::uint64_t kDefaultStateBudget = std::uint64_t{1} << 27;

/// All N(n, m) state vectors; element i-1 belongs to channel i. Throws BudgetError if N * n
/// exceeds `symbol_budget`.
std::vector<StateVector> assign_states(int n, unsigned m, std::uint64_t symbol_budget = kDefaultStateBudget);

/// State vector of a single channel (1-based index) without enumerating the others.
StateVector state_vector_of(int n, unsigned m, std::uint64_t channel_index);

bool validate_state_vector(const StateVector& s, unsigned m);

/// b_k = 1 iff s_k is Plus.
std::vector<std::uint8_t> to_binary(const StateVector& s);

/// Channel indices (1-based) in the order they are decoded.
std::vector<std::uint64_t> decode_sequence(int n, unsigned m);

/// pi: element i-1 holds the decode position (1..N) of channel i.
std::vector<std::uint64_t> bit_reversed_order(int n, unsigned m);

struct OrderedCodeIndex {
    std::uint64_t channel_index;        ///< 1..N
    std::vector<std::uint8_t> binary;   ///< b_1..b_n, b_1 most significant
    std::uint64_t pi;                   ///< decode position 1..N
};

std::vector<OrderedCodeIndex> ordered_indices(int n, unsigned m);

namespace detail {
/// 0-based decode orders for every level 0..n; element l lists level-l channel slots.
std::vector<std::vector<std::uint32_t>> level_orders(int n, unsigned m);
}  // namespace detail

using BigCount = boost::multiprecision::cpp_int;

/// log2 of a positive big integer, accurate to double precision. Returns -inf for 0.
double big_log2(const BigCount& x);

struct TypeClassTable {
    unsigned m;
    int n;
    std::vector<BigCount> counts;  ///< counts[k] = number of state vectors with k Minus symbols

    BigCount total() const;
};

/// Exact type-class sizes by dynamic programming over the transition automaton.
TypeClassTable count_type_classes(int n, unsigned m);

/// Exact fraction of state vectors whose Minus frequency is within eps of p_minus.
double typical_mass(int n, unsigned m, double eps);
double typical_mass(const TypeClassTable& table, double eps);

}  // namespace polarmem
