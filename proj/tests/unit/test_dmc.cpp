#include <cmath>
#include <random>

#include "common/random_channels.hpp"
#include "doctest.h"
#include "polarmem/dmc.hpp"
#include "polarmem/errors.hpp"

using namespace polarmem;

TEST_CASE("capacity of reference channels") {
    CHECK(symmetric_capacity(DiscreteChannel::identity()) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(symmetric_capacity(DiscreteChannel::useless({0.2, 0.5, 0.3})) == doctest::Approx(0.0));
    CHECK(std::fabs(symmetric_capacity(ErasureChannel(0.3).to_discrete()) - 0.7) < 1e-12);
}

TEST_CASE("bhattacharyya of reference channels") {
    CHECK(bhattacharyya(DiscreteChannel::identity()) == 0.0);
    CHECK(std::fabs(bhattacharyya(DiscreteChannel::useless({0.25, 0.75})) - 1.0) < 1e-12);
    CHECK(std::fabs(bhattacharyya(ErasureChannel(0.3).to_discrete()) - 0.3) < 1e-12);
}

TEST_CASE("cutoff rate") {
    CHECK(cutoff_rate(DiscreteChannel::identity()) == 1.0);
    CHECK(std::fabs(cutoff_rate(DiscreteChannel::useless())) < 1e-15);
    CHECK(std::fabs(cutoff_rate(ErasureChannel(0.5).to_discrete()) - std::log2(4.0 / 3.0)) < 1e-12);
    CHECK(std::fabs(cutoff_rate_from_z(0.5) - 0.415037499278844) < 1e-12);
}

TEST_CASE("validation of tables") {
    CHECK_THROWS_AS(DiscreteChannel({0.5, 0.6}, {0.5, 0.5}), ValidationError);
    CHECK_THROWS_AS(DiscreteChannel({1.2, -0.2}, {0.5, 0.5}), ValidationError);
    CHECK_THROWS_AS(DiscreteChannel({1.0}, {0.5, 0.5}), ValidationError);
    CHECK_THROWS_AS(DiscreteChannel({}, {}), ValidationError);
    CHECK_THROWS_AS(ErasureChannel(1.5), ValidationError);
    CHECK_THROWS_AS(DiscreteChannel::bsc(-0.1), ValidationError);
}

TEST_CASE("pair transform of erasure channels") {
    for (double a : {0.0, 0.2, 0.5, 0.9, 1.0})
        for (double b : {0.0, 0.3, 0.7, 1.0}) {
            const auto p = transform_pair(ErasureChannel(a).to_discrete(), ErasureChannel(b).to_discrete());
            CHECK(p.minus.outputs() == 9);
            CHECK(p.plus.outputs() == 18);
            const double zm = a + b - a * b, zp = a * b;
            CHECK(std::fabs(bhattacharyya(p.minus) - zm) < 1e-12);
            CHECK(std::fabs(bhattacharyya(p.plus) - zp) < 1e-12);
            CHECK(std::fabs(symmetric_capacity(p.minus) - (1 - zm)) < 1e-12);
            CHECK(std::fabs(symmetric_capacity(p.plus) - (1 - zp)) < 1e-12);
        }
}

TEST_CASE("pair transform of noiseless channels") {
    const auto p = transform_pair(DiscreteChannel::identity(), DiscreteChannel::identity());
    CHECK(bhattacharyya(p.plus) == 0.0);
    CHECK(bhattacharyya(p.minus) == 0.0);
}

TEST_CASE("output cap") {
    const auto w = ErasureChannel(0.5).to_discrete();
    CHECK_THROWS_AS(transform_pair(w, w, 17), BudgetError);
    CHECK_NOTHROW(transform_pair(w, w, 18));
}

TEST_CASE("functional laws on random channel pairs") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 300; ++trial) {
        const auto w1 = testutil::random_channel(rng, 2 + trial % 4);
        const auto w2 = testutil::random_channel(rng, 2 + (trial / 4) % 3);
        const auto p = transform_pair(w1, w2);
        const double i1 = symmetric_capacity(w1), i2 = symmetric_capacity(w2);
        const double im = symmetric_capacity(p.minus), ip = symmetric_capacity(p.plus);
        const double z1 = bhattacharyya(w1), z2 = bhattacharyya(w2);
        CAPTURE(trial);
        CHECK(std::fabs(im + ip - i1 - i2) < 1e-10);
        CHECK(std::fabs(bhattacharyya(p.plus) - z1 * z2) < 1e-12);
        CHECK(bhattacharyya(p.minus) <= z1 + z2 - z1 * z2 + 1e-12);
        CHECK(im <= std::min(i1, i2) + 1e-12);
        CHECK(std::max(i1, i2) <= ip + 1e-12);
        const double gain = cutoff_rate(p.minus) + cutoff_rate(p.plus) - cutoff_rate(w1) - cutoff_rate(w2);
        CHECK(gain > 1e-10);  // J of random channels lies strictly inside (0, 1)
    }
}

TEST_CASE("cutoff rate equality at the extremes") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto w = testutil::random_channel(rng, 3);
        for (const auto& ext : {DiscreteChannel::identity(), DiscreteChannel::useless({0.4, 0.6})}) {
            const auto p = transform_pair(ext, w);
            const double gain = cutoff_rate(p.minus) + cutoff_rate(p.plus) - cutoff_rate(ext) - cutoff_rate(w);
            CHECK(std::fabs(gain) < 1e-10);
        }
    }
}

TEST_CASE("Z at the extremes forces I") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto row = testutil::random_channel(rng, 4).row(0);
        const auto flat = DiscreteChannel::useless(row);
        CHECK(std::fabs(bhattacharyya(flat) - 1.0) < 1e-12);
        CHECK(std::fabs(symmetric_capacity(flat)) < 1e-12);
        // disjoint supports: Z = 0 and I = 1
        std::vector<double> r0(8, 0.0), r1(8, 0.0);
        for (int k = 0; k < 4; ++k) {
            r0[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k)];
            r1[static_cast<std::size_t>(k + 4)] = row[static_cast<std::size_t>(k)];
        }
        const DiscreteChannel split(r0, r1);
        CHECK(bhattacharyya(split) == 0.0);
        CHECK(std::fabs(symmetric_capacity(split) - 1.0) < 1e-12);
    }
}

TEST_CASE("bec_transform") {
    auto p = bec_transform(ErasureChannel(0.5), ErasureChannel(0.5));
    CHECK(p.minus.eps == 0.75);
    CHECK(p.plus.eps == 0.25);
    p = bec_transform(ErasureChannel(0.0), ErasureChannel(0.37));
    CHECK(p.minus.eps == 0.37);
    CHECK(p.plus.eps == 0.0);
    p = bec_transform(ErasureChannel(1.0), ErasureChannel(1.0));
    CHECK(p.minus.eps == 1.0);
    CHECK(p.plus.eps == 1.0);
}

TEST_CASE("erasure conversion keeps the functionals") {
    for (double e : {0.0, 0.1, 0.3, 0.5, 0.77, 1.0}) {
        const ErasureChannel bec(e);
        const auto d = bec.to_discrete();
        CHECK(d.outputs() == 3);
        CHECK(std::fabs(symmetric_capacity(d) - bec.capacity()) < 1e-15);
        CHECK(std::fabs(bhattacharyya(d) - bec.bhattacharyya()) < 1e-15);
        CHECK(std::fabs(cutoff_rate(d) - cutoff_rate_from_z(e)) < 1e-15);
    }
}

TEST_CASE("noise model parsing") {
    auto nm = parse_noise_model("bec:0.3");
    CHECK(nm.kind == ChannelKind::Bec);
    CHECK(nm.parameter == 0.3);
    CHECK(nm.name() == "BEC");
    nm = parse_noise_model("BSC:0.1");
    CHECK(nm.kind == ChannelKind::Bsc);
    CHECK(nm.name() == "BSC");
    CHECK(std::fabs(bhattacharyya(nm.to_discrete()) - 2 * std::sqrt(0.09)) < 1e-12);
    CHECK_THROWS_AS(parse_noise_model("awgn:1"), ValidationError);
    CHECK_THROWS_AS(parse_noise_model("bec:2"), ValidationError);
    CHECK_THROWS_AS(parse_noise_model("bec"), ValidationError);
}
