#include "polarmem/sim.hpp"

#include <chrono>
#include <cmath>

#include "polarmem/decoder.hpp"
#include "polarmem/detail/parallel.hpp"
#include "polarmem/detail/transmit.hpp"
#include "polarmem/errors.hpp"
#include "polarmem/geometry.hpp"
#include "polarmem/rng.hpp"

namespace polarmem {

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
    if (trials == 0) throw DomainError("wilson_interval needs at least one trial");
    if (successes > trials) throw DomainError("successes exceed trials");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double centre = (p + z2 / (2 * n)) / (1 + z2 / n);
    const double half = z / (1 + z2 / n) * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

TrialReport simulate_bler(const CodeSpec& spec, const NoiseModel& noise, std::uint64_t trials, std::uint64_t seed,
                          unsigned threads) {
    spec.validate();
    if (trials < 1) throw DomainError("trials must be at least 1");
    const auto start = std::chrono::steady_clock::now();
    const auto plan = DecoderPlan::shared(spec.n, spec.m);
    if (threads == 0) threads = detail::default_thread_count();
    std::vector<std::uint64_t> errors(threads, 0);

    detail::parallel_chunks(trials, threads, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
        DecoderWorkspace ws(plan);
        ErasureWorkspace ews(plan);
        BitVector msg(spec.K());
        std::vector<ErasureSymbol> y;
        std::vector<double> llr;
        for (std::uint64_t t = begin; t < end; ++t) {
            PhiloxStream rng(seed, t);
            for (auto& b : msg) b = rng.bit();
            const auto x = encode_message(msg, spec);
            DecodeResult r;
            if (noise.kind == ChannelKind::Bec) {
                detail::transmit_bec(x, noise.parameter, rng, y);
                ews.reset();
                r = decode_bec(y, spec, ews);
            } else {
                detail::transmit_bsc(x, noise.parameter, rng, llr);
                ws.reset();
                r = decode(llr, spec, ws);
            }
            if (extract_message(r.u_hat, spec) != msg) ++errors[worker];
        }
    });

    TrialReport report;
    report.trials = trials;
    for (auto e : errors) report.block_errors += e;
    report.bler = static_cast<double>(report.block_errors) / static_cast<double>(trials);
    const auto ci = wilson_interval(report.block_errors, trials);
    report.wilson_95_low = ci.low;
    report.wilson_95_high = ci.high;
    report.seed = seed;
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

int nearest_level(unsigned m, double target) {
    if (!(target >= 1.0)) throw DomainError("target length must be at least 1");
    int n = 0;
    while (static_cast<double>(code_length(n + 1, m)) <= target) ++n;
    // N(n) <= target < N(n+1)
    const double below = target - static_cast<double>(code_length(n, m));
    const double above = static_cast<double>(code_length(n + 1, m)) - target;
    return above <= below ? n + 1 : n;
}

std::vector<ComplexityRow> complexity_figure(const std::vector<unsigned>& m_values, const std::vector<double>& targets) {
    std::vector<ComplexityRow> rows;
    for (double target : targets) {
        for (unsigned m : m_values) {
            const int n = std::max(nearest_level(m, target), 1);
            rows.push_back({m, target, n, code_length(n, m), complexity_ratio(n, m, ComplexityKind::Encoding),
                            complexity_ratio(n, m, ComplexityKind::Decoding)});
        }
    }
    return rows;
}

std::vector<ExponentRow> exponent_figure(const std::vector<unsigned>& m_values) {
    std::vector<ExponentRow> rows;
    for (unsigned m : m_values) {
        if (m < 1 || m > 200) throw DomainError("exponent_figure supports m in 1..200");
        rows.push_back({m, achievable_exponent(m)});
    }
    return rows;
}

std::vector<unsigned> memory_range(unsigned m_lo, unsigned m_hi) {
    std::vector<unsigned> out;
    for (unsigned m = m_lo; m <= m_hi; ++m) out.push_back(m);
    return out;
}

}  // namespace polarmem
