#include "polarmem/encoder.hpp"

#include <algorithm>
#include <string>

#include "polarmem/errors.hpp"
#include "polarmem/geometry.hpp"

namespace polarmem {

GeneratorMatrix::GeneratorMatrix(int n, unsigned m, std::size_t size)
    : n_(n), m_(m), size_(size), words_((size + 63) / 64), rows_(size * words_, 0) {}

BitVector GeneratorMatrix::multiply(std::span<const std::uint8_t> u) const {
    if (u.size() != size_) throw DimensionError("message length does not match the generator size");
    std::vector<std::uint64_t> acc(words_, 0);
    for (std::size_t r = 0; r < size_; ++r) {
        if (!u[r]) continue;
        const auto* row = row_words(r);
        for (std::size_t w = 0; w < words_; ++w) acc[w] ^= row[w];
    }
    BitVector x(size_);
    for (std::size_t c = 0; c < size_; ++c) x[c] = (acc[c / 64] >> (c % 64)) & 1u;
    return x;
}

std::size_t GeneratorMatrix::rank() const {
    std::vector<std::uint64_t> a = rows_;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < size_ && rank < size_; ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        std::size_t pivot = rank;
        while (pivot < size_ && !(a[pivot * words_ + w] & bit)) ++pivot;
        if (pivot == size_) continue;
        if (pivot != rank)
            std::swap_ranges(a.begin() + pivot * words_, a.begin() + (pivot + 1) * words_, a.begin() + rank * words_);
        for (std::size_t r = 0; r < size_; ++r) {
            if (r != rank && (a[r * words_ + w] & bit))
                for (std::size_t k = 0; k < words_; ++k) a[r * words_ + k] ^= a[rank * words_ + k];
        }
        ++rank;
    }
    return rank;
}

namespace {

// Writes G_level into g at block offset (off, off).
void fill_block(GeneratorMatrix& g, const CodeLengths& len, int level, std::size_t off) {
    if (level <= 0) {
        g.set(off, off, true);
        return;
    }
    const int mm = static_cast<int>(g.memory());
    const std::size_t na = len(level - 1);
    const std::size_t nb = len(level - mm);
    fill_block(g, len, level - 1, off);
    fill_block(g, len, level - mm, off + na);
    // Upper-right block: G_{l-m} stacked on zeros, i.e. rows 0..nb-1 copy the bottom-right block.
    for (std::size_t r = 0; r < nb; ++r)
        for (std::size_t c = 0; c < nb; ++c)
            if (g.get(off + na + r, off + na + c)) g.set(off + r, off + na + c, true);
}

std::uint64_t encode_block(std::uint8_t* x, const CodeLengths& len, int level, unsigned m) {
    if (level <= 0) return 0;
    const std::size_t na = len(level - 1);
    const int lb = level - static_cast<int>(m);
    const std::size_t nb = len(lb);
    for (std::size_t j = 0; j < nb; ++j) x[na + j] ^= x[j];
    return nb + encode_block(x, len, level - 1, m) + encode_block(x + na, len, lb, m);
}

}  // namespace

GeneratorMatrix build_generator(int n, unsigned m, std::uint64_t max_size) {
    MemoryParams{m, n}.validate();
    const CodeLengths len(n, m);
    if (len(n) > max_size) throw BudgetError("generator matrix exceeds the size budget");
    GeneratorMatrix g(n, m, len(n));
    fill_block(g, len, n, 0);
    return g;
}

std::uint64_t encode_in_place(std::span<std::uint8_t> x, int n, unsigned m) {
    MemoryParams{m, n}.validate();
    const CodeLengths len(n, m);
    if (x.size() != len(n)) throw DimensionError("input length does not equal N");
    return encode_block(x.data(), len, n, m);
}

BitVector encode(std::span<const std::uint8_t> u, int n, unsigned m, EncodeStats* stats) {
    BitVector x(u.begin(), u.end());
    const auto xors = encode_in_place(x, n, m);
    if (stats) stats->xors = xors;
    return x;
}

CodeSpec CodeSpec::make(unsigned m, int n, NoiseModel design, std::vector<std::uint64_t> info_set) {
    CodeSpec spec;
    spec.m = m;
    spec.n = n;
    spec.N = code_length(n, m);
    spec.design_channel = design;
    std::sort(info_set.begin(), info_set.end());
    spec.info_set = std::move(info_set);
    spec.frozen.assign(spec.N, 0);
    spec.validate();
    return spec;
}

BitVector CodeSpec::info_mask() const {
    BitVector mask(N, 0);
    for (auto i : info_set) mask[i - 1] = 1;
    return mask;
}

void CodeSpec::validate() const {
    try {
        MemoryParams{m, n}.validate();
        if (N != code_length(n, m)) throw ValidationError("N does not match code_length(n, m)");
    } catch (const DomainError& e) {
        throw ValidationError(e.what());
    } catch (const OverflowError& e) {
        throw ValidationError(e.what());
    }
    if (frozen.size() != N) throw ValidationError("frozen vector must have N entries");
    if (info_set.size() > N) throw ValidationError("K exceeds N");
    for (std::size_t k = 0; k < info_set.size(); ++k) {
        if (info_set[k] < 1 || info_set[k] > N)
            throw ValidationError("info-set index " + std::to_string(info_set[k]) + " outside 1..N");
        if (k > 0 && info_set[k] <= info_set[k - 1]) throw ValidationError("info set must be sorted and unique");
        if (frozen[info_set[k] - 1] != 0) throw ValidationError("frozen entries at info positions must be 0");
    }
    for (auto b : frozen)
        if (b > 1) throw ValidationError("frozen values must be bits");
}

BitVector place_message(std::span<const std::uint8_t> msg, const CodeSpec& spec) {
    if (msg.size() != spec.K()) throw DimensionError("message length does not equal K");
    BitVector u = spec.frozen;
    for (std::size_t k = 0; k < msg.size(); ++k) u[spec.info_set[k] - 1] = msg[k] & 1u;
    return u;
}

BitVector extract_message(std::span<const std::uint8_t> u, const CodeSpec& spec) {
    if (u.size() != spec.N) throw DimensionError("input length does not equal N");
    BitVector msg(spec.K());
    for (std::size_t k = 0; k < msg.size(); ++k) msg[k] = u[spec.info_set[k] - 1];
    return msg;
}

BitVector encode_message(std::span<const std::uint8_t> msg, const CodeSpec& spec) {
    return encode(place_message(msg, spec), spec.n, spec.m);
}

}  // namespace polarmem
