// Classical recursive SC decoder for x = w * Fa^{(x)n}, Fa = [[1,0],[1,1]], decoding w in
// natural order. Written independently of the library's node-tree engine.
//
// For m = 1 the library's generator is [[1,1],[0,1]]^{(x)n}, which equals R Fa^{(x)n} R with R
// the index reversal. Because Fa^{(x)n} commutes with the bit-reversal permutation B,
// x[N-1-rev(i)] = (w Fa^{(x)n})[i] where w[k] = u[N-1-rev(k)].
#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

inline double f_exact(double a, double b) {
    if (a == 0.0 || b == 0.0) return 0.0;
    const double s = (a > 0 ? 1.0 : -1.0) * (b > 0 ? 1.0 : -1.0);
    const double aa = std::fabs(a), ab = std::fabs(b);
    if (std::isinf(aa) || std::isinf(ab)) return s * std::fmin(aa, ab);
    return s * std::fmin(aa, ab) + std::log1p(std::exp(-std::fabs(a + b))) - std::log1p(std::exp(-std::fabs(a - b)));
}

inline unsigned bit_reverse(unsigned x, int bits) {
    unsigned r = 0;
    for (int k = 0; k < bits; ++k) r |= ((x >> k) & 1u) << (bits - 1 - k);
    return r;
}

struct TextbookSc {
    const std::vector<std::uint8_t>* frozen_mask;  // 1 = frozen, in w indexing
    const std::vector<std::uint8_t>* frozen_val;
    std::vector<std::uint8_t> w_hat;

    // Returns the re-encoded codeword of the decoded segment starting at w index `base`.
    std::vector<std::uint8_t> run(const std::vector<double>& llr, std::size_t base) {
        const std::size_t n = llr.size();
        if (n == 1) {
            const std::uint8_t bit = (*frozen_mask)[base] ? (*frozen_val)[base] : (llr[0] < 0 ? 1 : 0);
            w_hat[base] = bit;
            return {bit};
        }
        const std::size_t h = n / 2;
        std::vector<double> left(h), right(h);
        for (std::size_t i = 0; i < h; ++i) left[i] = f_exact(llr[i], llr[i + h]);
        const auto c1 = run(left, base);
        for (std::size_t i = 0; i < h; ++i) {
            const double top = c1[i] ? -llr[i] : llr[i];
            const double bot = llr[i + h];
            right[i] = (std::isinf(top) && std::isinf(bot) && top != bot) ? 0.0 : bot + top;
        }
        const auto c2 = run(right, base + h);
        std::vector<std::uint8_t> c(n);
        for (std::size_t i = 0; i < h; ++i) {
            c[i] = c1[i] ^ c2[i];
            c[i + h] = c2[i];
        }
        return c;
    }
};

/// Decodes u (library indexing, m = 1) from channel LLRs in library indexing.
inline std::vector<std::uint8_t> textbook_decode_m1(const std::vector<double>& llr, int n,
                                                    const std::vector<std::uint8_t>& info_mask,
                                                    const std::vector<std::uint8_t>& frozen) {
    const std::size_t len = llr.size();
    auto perm = [&](std::size_t k) { return len - 1 - bit_reverse(static_cast<unsigned>(k), n); };
    std::vector<double> l2(len);
    std::vector<std::uint8_t> fm(len), fv(len);
    for (std::size_t k = 0; k < len; ++k) {
        l2[k] = llr[perm(k)];
        fm[k] = info_mask[perm(k)] ? 0 : 1;
        fv[k] = frozen[perm(k)];
    }
    TextbookSc sc{&fm, &fv, std::vector<std::uint8_t>(len)};
    sc.run(l2, 0);
    std::vector<std::uint8_t> u(len);
    for (std::size_t k = 0; k < len; ++k) u[perm(k)] = sc.w_hat[k];
    return u;
}

}  // namespace oracle
