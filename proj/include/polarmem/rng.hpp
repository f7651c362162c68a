// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
//
// A stream is identified by a 64-bit key (the user seed) and a 64-bit stream id (e.g. the
// trial number). Every stream is a fixed function of (key, stream id), so work can be split
// across threads in any way without changing results.
#pragma once

#include <array>
#include <cstdint>

namespace polarmem {

inline constexpr const char* kRngName = "philox4x32-10";

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

/// One Philox4x32 block with 10 rounds.
constexpr PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key) {
    constexpr std::uint32_t M0 = 0xD2511F53u, M1 = 0xCD9E8D57u;
    constexpr std::uint32_t W0 = 0x9E3779B9u, W1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = std::uint64_t{M0} * ctr[0];
        const std::uint64_t p1 = std::uint64_t{M1} * ctr[2];
        const auto hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
        const auto hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += W0;
        key[1] += W1;
    }
    return ctr;
}

class PhiloxStream {
public:
    PhiloxStream(std::uint64_t seed, std::uint64_t stream)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          stream_lo_(static_cast<std::uint32_t>(stream)),
          stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

    std::uint32_t next_u32() {
        if (used_ == 4) refill();
        return buffer_[used_++];
    }

    std::uint64_t next_u64() {
        const std::uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    std::uint8_t bit() {
        if (bits_left_ == 0) {
            bit_pool_ = next_u32();
            bits_left_ = 32;
        }
        const auto b = static_cast<std::uint8_t>(bit_pool_ & 1u);
        bit_pool_ >>= 1;
        --bits_left_;
        return b;
    }

private:
    void refill() {
        const PhiloxCounter ctr{static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32), stream_lo_,
                                stream_hi_};
        buffer_ = philox4x32_10(ctr, key_);
        ++block_;
        used_ = 0;
    }

    PhiloxKey key_;
    std::uint32_t stream_lo_;
    std::uint32_t stream_hi_;
    std::uint64_t block_ = 0;
    PhiloxCounter buffer_{};
    int used_ = 4;
    std::uint32_t bit_pool_ = 0;
    int bits_left_ = 0;
};

}  // namespace polarmem
