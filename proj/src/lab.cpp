#include "polarmem/lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polarmem/detail/bec_evolution.hpp"
#include "polarmem/dmc.hpp"
#include "polarmem/errors.hpp"
#include "polarmem/geometry.hpp"
#include "polarmem/rng.hpp"

namespace polarmem {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

double cutoff_of(double z) { return 1.0 - std::log1p(z) / kLn2; }

struct LevelSums {
    long double j = 0;
    long double i = 0;
    std::uint64_t high = 0;
    std::uint64_t low = 0;
};

// Depth-first walk over all valid state paths; z[k] holds the value after k symbols.
class PathWalker {
public:
    PathWalker(int n_max, unsigned m, double eps, double delta)
        : n_max_(n_max), m_(static_cast<int>(m)), eps_(eps), delta_(delta),
          z_(static_cast<std::size_t>(n_max) + 1, eps), sums_(static_cast<std::size_t>(n_max) + 1) {}

    std::vector<LevelSums> run() {
        record(0);
        walk(0, 0);
        return sums_;
    }

private:
    double partner(int level) const { return level - m_ <= 0 ? eps_ : z_[static_cast<std::size_t>(level - m_)]; }

    void record(int k) {
        const double z = z_[static_cast<std::size_t>(k)];
        auto& s = sums_[static_cast<std::size_t>(k)];
        s.j += cutoff_of(z);
        s.i += 1.0 - z;
        s.high += z < delta_;
        s.low += 1.0 - z < delta_;
    }

    void step(int k, double value, int stars_due) {
        z_[static_cast<std::size_t>(k + 1)] = value;
        record(k + 1);
        walk(k + 1, stars_due);
    }

    void walk(int k, int stars_due) {
        if (k == n_max_) return;
        const double prev = z_[static_cast<std::size_t>(k)];
        if (stars_due > 0) {
            step(k, prev, stars_due - 1);
            return;
        }
        const double b = partner(k + 1);
        step(k, prev * b, 0);
        step(k, prev + b - prev * b, m_ - 1);
    }

    int n_max_;
    int m_;
    double eps_;
    double delta_;
    std::vector<double> z_;
    std::vector<LevelSums> sums_;
};

}  // namespace

double BranchEnsemble::z(std::size_t slot) const { return std::exp2(log2_z[slot]); }

BranchEnsemble evolve_ensemble(int n, unsigned m, double eps, std::uint64_t branch_budget) {
    MemoryParams{m, n}.validate();
    const ErasureChannel checked(eps);
    if (code_length(n, m) > branch_budget) throw BudgetError("ensemble exceeds the branch budget");
    return {m, n, detail::evolve_levels<detail::Log2BecAlgebra>(n, m, detail::Log2BecAlgebra::from_eps(checked.eps))};
}

ProcessTrace cutoff_sequence(int n_max, unsigned m, double eps, double delta, std::uint64_t node_budget) {
    MemoryParams{m, n_max}.validate();
    const ErasureChannel checked(eps);
    if (!(delta > 0.0 && delta < 0.5)) throw DomainError("delta must lie in (0, 0.5)");
    const CodeLengths len(n_max, m);
    std::uint64_t nodes = 0;
    for (int k = 0; k <= n_max; ++k) nodes += len(k);
    if (nodes > node_budget) throw BudgetError("cutoff_sequence exceeds the node budget");

    const auto sums = PathWalker(n_max, m, checked.eps, delta).run();
    ProcessTrace trace{m, eps, delta, {}};
    for (int k = 0; k <= n_max; ++k) {
        const auto& s = sums[static_cast<std::size_t>(k)];
        const auto count = static_cast<long double>(len(k));
        trace.rows.push_back({k, len(k), static_cast<double>(s.j / count), static_cast<double>(s.i / count),
                              static_cast<double>(s.i), static_cast<double>(s.high / count),
                              static_cast<double>(s.low / count)});
    }
    return trace;
}

std::vector<double> decimated_cutoff(const ProcessTrace& trace) {
    const int m = static_cast<int>(trace.m);
    const int n_max = trace.rows.empty() ? 0 : trace.rows.back().n;
    std::vector<double> out;
    for (int k = 1; k * m <= n_max; ++k) {
        double best = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) best = std::min(best, trace.rows[static_cast<std::size_t>(k * m - i)].mean_j);
        out.push_back(best);
    }
    return out;
}

PolarizedFractions polarized_fractions(const BranchEnsemble& ensemble, double delta) {
    if (!(delta > 0.0 && delta < 0.5)) throw DomainError("delta must lie in (0, 0.5)");
    const double lo = std::log2(delta);
    const double hi = std::log2(1.0 - delta);
    std::uint64_t high = 0, low = 0;
    for (double v : ensemble.log2_z) {
        high += v < lo;
        low += v > hi;
    }
    const auto n = static_cast<double>(ensemble.size());
    return {static_cast<double>(high) / n, static_cast<double>(low) / n};
}

double exponent_experiment(const BranchEnsemble& ensemble, double beta) {
    if (!(beta > 0.0 && beta < 1.0)) throw DomainError("beta must lie in (0, 1)");
    const double phi = dominant_root(ensemble.m);
    const double threshold = -std::pow(phi, ensemble.n * beta);
    const auto hits = std::count_if(ensemble.log2_z.begin(), ensemble.log2_z.end(),
                                    [threshold](double v) { return v <= threshold; });
    return static_cast<double>(hits) / static_cast<double>(ensemble.size());
}

double exponent_experiment(int n, unsigned m, double eps, double beta) {
    return exponent_experiment(evolve_ensemble(n, m, eps), beta);
}

WorstCaseResult zhat_worst_case(int n0, int n, unsigned m, double gamma, double zeta, double eps_slack) {
    if (m < 1) throw DomainError("memory order m must be at least 1");
    if (n0 < 0 || n <= n0) throw DomainError("need 0 <= n0 < n");
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw DomainError("gamma must lie in [0, 1]");
    if (!(eps_slack > 0.0)) throw DomainError("slack must be positive");
    const double phi = dominant_root(m);
    const double zeta_max = 1.0 - std::pow(phi, -eps_slack / 2.0);
    if (!(zeta >= 0.0 && zeta <= zeta_max + 1e-15))
        throw DomainError("zeta must lie in [0, 1 - phi^(-slack/2)]");

    const int span = n - n0;
    const auto blocks = static_cast<int>(std::floor((1.0 - gamma) * span / m + 1e-9));
    const auto pluses = static_cast<int>(std::floor(gamma * span + 1e-9));

    using Alg = detail::Log2BecAlgebra;
    std::vector<double> hist(m, zeta == 0.0 ? -std::numeric_limits<double>::infinity() : std::log2(zeta));
    auto push = [&](StateSymbol s) {
        const double prev = hist.back();
        const double partner = hist[hist.size() - m];
        hist.push_back(s == StateSymbol::Plus ? Alg::plus(prev, partner)
                                              : s == StateSymbol::Minus ? Alg::minus(prev, partner) : prev);
    };
    for (int b = 0; b < blocks; ++b) {
        push(StateSymbol::Minus);
        for (unsigned s = 1; s < m; ++s) push(StateSymbol::Star);
    }
    for (int p = 0; p < pluses; ++p) push(StateSymbol::Plus);

    const double zhat_log = hist.back();
    const double bound_log = -std::pow(phi, (gamma - eps_slack) * span);
    return {zhat_log, bound_log, zhat_log <= bound_log};
}

std::vector<SampledBranch> sample_state_paths(unsigned m, int n, std::uint64_t count, std::uint64_t seed, double eps) {
    MemoryParams{m, n}.validate();
    const ErasureChannel checked(eps);
    std::vector<SampledBranch> out;
    if (count == 0) return out;

    // Number of completions from a free state with r symbols left is N(r), exact in big integers.
    const int mm = static_cast<int>(m);
    std::vector<BigCount> big(static_cast<std::size_t>(n) + 1, 1);
    for (int r = 1; r <= n; ++r)
        big[static_cast<std::size_t>(r)] = big[static_cast<std::size_t>(r - 1)] + big[static_cast<std::size_t>(std::max(r - mm, 0))];
    std::vector<double> p_plus(static_cast<std::size_t>(n) + 1, 0.0);
    for (int r = 1; r <= n; ++r)
        p_plus[static_cast<std::size_t>(r)] =
            std::exp2(big_log2(big[static_cast<std::size_t>(r - 1)]) - big_log2(big[static_cast<std::size_t>(r)]));

    using Alg = detail::Log2BecAlgebra;
    const double base = Alg::from_eps(checked.eps);
    out.reserve(count);
    std::vector<double> z(static_cast<std::size_t>(n) + 1);
    for (std::uint64_t t = 0; t < count; ++t) {
        PhiloxStream rng(seed, t);
        SampledBranch br{StateVector(static_cast<std::size_t>(n)), 0.0};
        z[0] = base;
        int stars_due = 0;
        for (int k = 1; k <= n; ++k) {
            StateSymbol s;
            if (stars_due > 0) {
                s = StateSymbol::Star;
                --stars_due;
            } else if (rng.uniform() < p_plus[static_cast<std::size_t>(n - k + 1)]) {
                s = StateSymbol::Plus;
            } else {
                s = StateSymbol::Minus;
                stars_due = mm - 1;
            }
            br.path[static_cast<std::size_t>(k - 1)] = s;
            const double prev = z[static_cast<std::size_t>(k - 1)];
            const double partner = k - mm <= 0 ? base : z[static_cast<std::size_t>(k - mm)];
            z[static_cast<std::size_t>(k)] = s == StateSymbol::Plus    ? Alg::plus(prev, partner)
                                             : s == StateSymbol::Minus ? Alg::minus(prev, partner)
                                                                       : prev;
        }
        br.log2_z = z[static_cast<std::size_t>(n)];
        out.push_back(std::move(br));
    }
    return out;
}

}  // namespace polarmem
