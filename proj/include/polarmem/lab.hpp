// Exact and sampled analysis of the state, Bhattacharyya and cut-off-rate processes
// on the binary erasure channel.
#pragma once

#include <cstdint>
#include <vector>

#include "polarmem/states.hpp"

namespace polarmem {

inline constexpr std::uint64_t kDefaultBranchBudget = std::uint64_t{1} << 24;

/// All N(n, m) branches with their erasure probability, keyed in channel-index order.
/// Values are stored as log2 z so that doubly-exponentially small values remain exact
/// enough for threshold tests. Every branch has probability 1/N.
struct BranchEnsemble {
    unsigned m;
    int n;
    std::vector<double> log2_z;

    std::size_t size() const noexcept { return log2_z.size(); }
    double probability() const noexcept { return 1.0 / static_cast<double>(log2_z.size()); }
    double z(std::size_t slot) const;
};

BranchEnsemble evolve_ensemble(int n, unsigned m, double eps, std::uint64_t branch_budget = kDefaultBranchBudget);

struct TraceRow {
    int n;
    std::uint64_t length;   ///< N(n)
    double mean_j;          ///< E[J_n]
    double mean_i;          ///< E[I_n]
    double total_i;         ///< sum of I over the N(n) branches
    double high_fraction;   ///< fraction with I > 1 - delta
    double low_fraction;    ///< fraction with I < delta
};

/// Per-level statistics for levels 0..n_max.
struct ProcessTrace {
    unsigned m;
    double eps;
    double delta;
    std::vector<TraceRow> rows;
};

/// Walks every state path once (depth first), so memory stays O(n_max) while all levels
/// are summarized. Throws BudgetError when the total number of visited nodes exceeds
/// `node_budget`.
ProcessTrace cutoff_sequence(int n_max, unsigned m, double eps, double delta = 1e-3,
                             std::uint64_t node_budget = std::uint64_t{1} << 31);

/// Element k-1 is min over i in 0..m-1 of E[J_{km-i}], for k = 1..floor(n_max/m).
/// The blocks of m levels do not overlap.
std::vector<double> decimated_cutoff(const ProcessTrace& trace);

struct PolarizedFractions {
    double high;  ///< fraction with I = 1 - z > 1 - delta
    double low;   ///< fraction with I < delta
};

PolarizedFractions polarized_fractions(const BranchEnsemble& ensemble, double delta);

/// Fraction of branches with z <= 2^(-phi^(n beta)).
double exponent_experiment(int n, unsigned m, double eps, double beta);
double exponent_experiment(const BranchEnsemble& ensemble, double beta);

struct WorstCaseResult {
    double zhat_log;   ///< log2 of the evolved value
    double bound_log;  ///< -phi^((gamma - slack) (n - n0))
    bool holds;        ///< zhat_log <= bound_log
};

/// Evolves the extremal path (-, *^(m-1)) ... then + ... from zeta over n - n0 steps.
/// Throws DomainError when zeta > 1 - phi^(-slack/2) or the arguments are out of range.
WorstCaseResult zhat_worst_case(int n0, int n, unsigned m, double gamma, double zeta, double eps_slack);

struct SampledBranch {
    StateVector path;
    double log2_z;
};

/// Draws `count` state vectors uniformly from all valid length-n vectors and evolves
/// log2 z along each one from BEC(eps).
std::vector<SampledBranch> sample_state_paths(unsigned m, int n, std::uint64_t count, std::uint64_t seed,
                                              double eps = 0.5);

}  // namespace polarmem
