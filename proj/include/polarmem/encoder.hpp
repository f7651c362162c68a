// Generator matrix and the recursive XOR-network encoder.
//
// Index contract: at level l the top block (inputs 0..N(l-1)-1) feeds the level-(l-1)
// encoder with u_j unchanged; the bottom block feeds the level-(l-m) encoder with
// u_j ^ u_{j+N(l-1)} for j < N(l-m). The decoder's partial sums rely on this layout.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polarmem/dmc.hpp"

namespace polarmem {

using BitVector = std::vector<std::uint8_t>;

inline constexpr std::uint64_t kDefaultMatrixBudget = std::uint64_t{1} << 14;

/// Dense N x N matrix over GF(2) with rows packed into 64-bit words.
class GeneratorMatrix {
public:
    GeneratorMatrix(int n, unsigned m, std::size_t size);

    int level() const noexcept { return n_; }
    unsigned memory() const noexcept { return m_; }
    std::size_t size() const noexcept { return size_; }

    bool get(std::size_t r, std::size_t c) const noexcept {
        return (rows_[r * words_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) noexcept {
        auto& w = rows_[r * words_ + c / 64];
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        w = v ? (w | bit) : (w & ~bit);
    }
    const std::uint64_t* row_words(std::size_t r) const noexcept { return rows_.data() + r * words_; }
    std::size_t words_per_row() const noexcept { return words_; }

    /// u * G over GF(2).
    BitVector multiply(std::span<const std::uint8_t> u) const;

    /// Rank over GF(2) by Gaussian elimination.
    std::size_t rank() const;

    bool operator==(const GeneratorMatrix& other) const = default;

private:
    int n_;
    unsigned m_;
    std::size_t size_;
    std::size_t words_;
    std::vector<std::uint64_t> rows_;
};

/// Block-recursive construction G_n = [[G_{n-1}, [G_{n-m}; 0]], [0, G_{n-m}]], G_k = [1] for k <= 0.
/// Throws BudgetError when N exceeds `max_size`.
GeneratorMatrix build_generator(int n, unsigned m, std::uint64_t max_size = kDefaultMatrixBudget);

struct EncodeStats {
    std::uint64_t xors = 0;
};

/// In-place network encoding of x (holding u on entry). Returns the number of XORs applied.
std::uint64_t encode_in_place(std::span<std::uint8_t> x, int n, unsigned m);

/// x = u G_N computed by the network. Throws DimensionError if |u| != N.
BitVector encode(std::span<const std::uint8_t> u, int n, unsigned m, EncodeStats* stats = nullptr);

/// Identity of one code instance. Channel indices in `info_set` are 1-based and sorted.
struct CodeSpec {
    unsigned m = 1;
    int n = 0;
    std::uint64_t N = 1;
    NoiseModel design_channel;
    std::vector<std::uint64_t> info_set;
    BitVector frozen;  ///< length N; entry i-1 is the value of channel i when frozen (0 at info positions)

    std::size_t K() const noexcept { return info_set.size(); }
    double rate() const noexcept { return static_cast<double>(info_set.size()) / static_cast<double>(N); }

    /// Builds a spec with the given info set (any order) and all frozen values 0.
    static CodeSpec make(unsigned m, int n, NoiseModel design, std::vector<std::uint64_t> info_set);

    /// Mask with entry i-1 set when channel i carries information.
    BitVector info_mask() const;

    /// Throws ValidationError if the invariants do not hold.
    void validate() const;
};

/// Places msg into the info positions and the frozen values elsewhere.
BitVector place_message(std::span<const std::uint8_t> msg, const CodeSpec& spec);

/// Reads the info positions of u back out.
BitVector extract_message(std::span<const std::uint8_t> u, const CodeSpec& spec);

BitVector encode_message(std::span<const std::uint8_t> msg, const CodeSpec& spec);

}  // namespace polarmem
