// Passing a codeword through a noise model using a Philox stream.
#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "polarmem/decoder.hpp"
#include "polarmem/dmc.hpp"
#include "polarmem/rng.hpp"

namespace polarmem::detail {

inline void transmit_bec(const BitVector& x, double eps, PhiloxStream& rng, std::vector<ErasureSymbol>& y) {
    y.resize(x.size());
    for (std::size_t k = 0; k < x.size(); ++k)
        y[k] = rng.uniform() < eps ? ErasureSymbol::Erased : (x[k] ? ErasureSymbol::One : ErasureSymbol::Zero);
}

inline double bsc_llr_magnitude(double p) {
    if (p == 0.0) return std::numeric_limits<double>::infinity();
    if (p == 1.0) return -std::numeric_limits<double>::infinity();
    return std::log((1.0 - p) / p);
}

inline void transmit_bsc(const BitVector& x, double p, PhiloxStream& rng, std::vector<double>& llr) {
    const double mag = bsc_llr_magnitude(p);
    llr.resize(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        const unsigned y = x[k] ^ (rng.uniform() < p ? 1u : 0u);
        llr[k] = y ? -mag : mag;
    }
}

}  // namespace polarmem::detail
