// n-fold Kronecker power of [[1,1],[0,1]] and a plain GF(2) vector-matrix product.
#pragma once

#include <cstdint>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<std::uint8_t>>;

inline Matrix kronecker_power(int n) {
    Matrix g{{1}};
    for (int k = 0; k < n; ++k) {
        const std::size_t s = g.size();
        Matrix next(2 * s, std::vector<std::uint8_t>(2 * s, 0));
        for (std::size_t r = 0; r < s; ++r)
            for (std::size_t c = 0; c < s; ++c) {
                next[r][c] = g[r][c];          // F[0][0] = 1
                next[r][c + s] = g[r][c];      // F[0][1] = 1
                next[r + s][c + s] = g[r][c];  // F[1][1] = 1
            }
        g = std::move(next);
    }
    return g;
}

inline std::vector<std::uint8_t> multiply(const std::vector<std::uint8_t>& u, const Matrix& g) {
    std::vector<std::uint8_t> x(g.size(), 0);
    for (std::size_t r = 0; r < g.size(); ++r)
        if (u[r])
            for (std::size_t c = 0; c < g.size(); ++c) x[c] ^= g[r][c];
    return x;
}

}  // namespace oracle
