#include "polarmem/construction.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "polarmem/decoder.hpp"
#include "polarmem/detail/bec_evolution.hpp"
#include "polarmem/detail/parallel.hpp"
#include "polarmem/detail/transmit.hpp"
#include "polarmem/errors.hpp"
#include "polarmem/geometry.hpp"
#include "polarmem/states.hpp"

namespace polarmem {

ReliabilityVector bec_reliabilities(int n, unsigned m, double eps) {
    MemoryParams{m, n}.validate();
    const ErasureChannel checked(eps);
    return {detail::evolve_levels<detail::LinearBecAlgebra>(n, m, checked.eps)};
}

std::vector<std::uint64_t> select_info_set(const ReliabilityVector& r, std::size_t K) {
    if (K > r.size()) throw DomainError("K exceeds the number of channels");
    std::vector<std::uint64_t> idx(r.size());
    std::iota(idx.begin(), idx.end(), std::uint64_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::uint64_t a, std::uint64_t b) { return r.z[a] < r.z[b]; });
    idx.resize(K);
    for (auto& i : idx) ++i;
    std::sort(idx.begin(), idx.end());
    return idx;
}

std::vector<double> mc_reliability_estimate(const CodeSpec& spec, const NoiseModel& channel, std::uint64_t trials,
                                            std::uint64_t seed, unsigned threads) {
    spec.validate();
    if (trials < 1) throw DomainError("trials must be at least 1");
    const auto plan = DecoderPlan::shared(spec.n, spec.m);
    const std::size_t len = spec.N;
    if (threads == 0) threads = detail::default_thread_count();
    std::vector<std::vector<std::uint64_t>> errors(threads, std::vector<std::uint64_t>(len, 0));

    detail::parallel_chunks(trials, threads, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
        auto& err = errors[worker];
        BitVector u(len);
        std::vector<ErasureSymbol> y;
        std::vector<double> llr;
        ErasureWorkspace ews(plan);
        for (std::uint64_t t = begin; t < end; ++t) {
            PhiloxStream rng(seed, t);
            for (auto& b : u) b = rng.bit();
            const auto x = encode(u, spec.n, spec.m);
            if (channel.kind == ChannelKind::Bec) {
                detail::transmit_bec(x, channel.parameter, rng, y);
                ews.reset();
                const auto v = genie_erasure_values(y, u, ews);
                for (std::size_t k = 0; k < len; ++k) err[k] += (v[k] < 0 ? 1u : 0u) != u[k];
            } else {
                detail::transmit_bsc(x, channel.parameter, rng, llr);
                const auto v = genie_llrs(spec.n, spec.m, llr, u);
                for (std::size_t k = 0; k < len; ++k) err[k] += (v[k] < 0 ? 1u : 0u) != u[k];
            }
        }
    });

    std::vector<double> rate(len, 0.0);
    for (std::size_t k = 0; k < len; ++k) {
        std::uint64_t total = 0;
        for (const auto& e : errors) total += e[k];
        rate[k] = static_cast<double>(total) / static_cast<double>(trials);
    }
    return rate;
}

DiscreteChannel exhaustive_bitchannel(int n, unsigned m, std::uint64_t i, const DiscreteChannel& w,
                                      std::uint64_t work_budget) {
    MemoryParams{m, n}.validate();
    const std::uint64_t len = code_length(n, m);
    if (len > 13) throw BudgetError("exhaustive enumeration needs N <= 13");
    if (i < 1 || i > len) throw DomainError("channel index out of range");
    const std::uint64_t q = w.outputs();
    std::uint64_t ny = 1;
    for (std::uint64_t k = 0; k < len; ++k) {
        if (ny > work_budget / q) throw BudgetError("output alphabet too large for exhaustive enumeration");
        ny *= q;
    }
    if ((ny << len) > work_budget) throw BudgetError("exhaustive enumeration exceeds the work budget");

    const auto seq = decode_sequence(n, m);
    std::vector<std::size_t> prior;  // 0-based slots decided before channel i, in decode order
    for (auto c : seq) {
        if (c == i) break;
        prior.push_back(c - 1);
    }
    const std::size_t nprior = prior.size();
    const std::uint64_t outputs = ny << nprior;
    std::vector<double> row0(outputs, 0.0), row1(outputs, 0.0);
    const double weight = 1.0 / static_cast<double>(std::uint64_t{1} << (len - 1));

    BitVector u(len);
    std::vector<double> py(ny), next(ny);
    for (std::uint64_t word = 0; word < (std::uint64_t{1} << len); ++word) {
        for (std::uint64_t k = 0; k < len; ++k) u[k] = (word >> k) & 1u;
        const auto x = encode(u, n, m);
        // Joint probability of every observation vector, y_1 most significant.
        std::size_t size = 1;
        py[0] = 1.0;
        for (std::uint64_t k = 0; k < len; ++k) {
            for (std::size_t a = 0; a < size; ++a)
                for (std::uint64_t s = 0; s < q; ++s) next[a * q + s] = py[a] * w.prob(x[k], s);
            size *= q;
            std::swap(py, next);
        }
        std::uint64_t prior_index = 0;
        for (auto slot : prior) prior_index = (prior_index << 1) | u[slot];
        auto& row = u[i - 1] ? row1 : row0;
        for (std::uint64_t y = 0; y < ny; ++y) row[(y << nprior) | prior_index] += weight * py[y];
    }
    // Row sums equal 1 up to rounding; renormalize so validation tolerance holds.
    for (auto* row : {&row0, &row1}) {
        const double s = std::accumulate(row->begin(), row->end(), 0.0);
        for (auto& v : *row) v /= s;
    }
    return DiscreteChannel(std::move(row0), std::move(row1));
}

std::vector<DiscreteChannel> recursive_bitchannels(int n, unsigned m, const DiscreteChannel& w, std::size_t output_cap) {
    MemoryParams{m, n}.validate();
    const CodeLengths len(n, m);
    std::deque<std::vector<DiscreteChannel>> window;
    for (unsigned k = 0; k < m; ++k) window.push_back({w});
    for (int l = 1; l <= n; ++l) {
        const auto& a = window.back();
        const auto& b = window.front();
        const std::size_t na = len(l - 1);
        const std::size_t nb = len(l - static_cast<int>(m));
        std::vector<DiscreteChannel> plus, minus;
        plus.reserve(na + nb);
        minus.reserve(nb);
        for (std::size_t j = 0; j < nb; ++j) {
            // The bottom block sees the minus bit XORed with the plus bit, the top block the plus bit.
            auto pair = transform_pair(b[j], a[j], output_cap);
            plus.push_back(std::move(pair.plus));
            minus.push_back(std::move(pair.minus));
        }
        for (std::size_t j = nb; j < na; ++j) plus.push_back(a[j]);
        for (auto& c : minus) plus.push_back(std::move(c));
        window.pop_front();
        window.push_back(std::move(plus));
    }
    return window.back();
}

}  // namespace polarmem
