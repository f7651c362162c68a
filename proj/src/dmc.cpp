#include "polarmem/dmc.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "polarmem/errors.hpp"

namespace polarmem {

namespace {

void validate_row(const std::vector<double>& row, const char* which) {
    double sum = 0.0;
    for (double p : row) {
        if (!(p >= 0.0) || p > 1.0)
            throw ValidationError(std::string("channel row ") + which + " has an entry outside [0,1]");
        sum += p;
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance)
        throw ValidationError(std::string("channel row ") + which + " does not sum to 1");
}

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0))
        throw ValidationError(std::string(what) + " must lie in [0,1]");
}

}  // namespace

DiscreteChannel::DiscreteChannel(std::vector<double> row0, std::vector<double> row1)
    : row0_(std::move(row0)), row1_(std::move(row1)) {
    if (row0_.empty())
        throw ValidationError("channel needs at least one output symbol");
    if (row0_.size() != row1_.size())
        throw ValidationError("channel rows have different lengths");
    validate_row(row0_, "0");
    validate_row(row1_, "1");
}

DiscreteChannel DiscreteChannel::identity() { return DiscreteChannel({1.0, 0.0}, {0.0, 1.0}); }

DiscreteChannel DiscreteChannel::useless(std::vector<double> row) {
    auto copy = row;
    return DiscreteChannel(std::move(row), std::move(copy));
}

DiscreteChannel DiscreteChannel::bsc(double p) {
    check_probability(p, "crossover probability");
    return DiscreteChannel({1.0 - p, p}, {p, 1.0 - p});
}

ErasureChannel::ErasureChannel(double erasure_probability) : eps(erasure_probability) {
    check_probability(eps, "erasure probability");
}

DiscreteChannel ErasureChannel::to_discrete() const {
    return DiscreteChannel({1.0 - eps, 0.0, eps}, {0.0, 1.0 - eps, eps});
}

double symmetric_capacity(const DiscreteChannel& w) {
    double total = 0.0;
    for (std::size_t y = 0; y < w.outputs(); ++y) {
        const double p0 = w.prob(0, y);
        const double p1 = w.prob(1, y);
        const double mix = 0.5 * p0 + 0.5 * p1;
        if (p0 > 0.0) total += 0.5 * p0 * std::log2(p0 / mix);
        if (p1 > 0.0) total += 0.5 * p1 * std::log2(p1 / mix);
    }
    return std::clamp(total, 0.0, 1.0);
}

double bhattacharyya(const DiscreteChannel& w) {
    double z = 0.0;
    for (std::size_t y = 0; y < w.outputs(); ++y)
        z += std::sqrt(w.prob(0, y) * w.prob(1, y));
    return std::clamp(z, 0.0, 1.0);
}

double cutoff_rate_from_z(double z) { return std::log2(2.0 / (1.0 + z)); }

double cutoff_rate(const DiscreteChannel& w) { return cutoff_rate_from_z(bhattacharyya(w)); }

ChannelPair transform_pair(const DiscreteChannel& w1, const DiscreteChannel& w2, std::size_t output_cap) {
    const std::size_t n1 = w1.outputs();
    const std::size_t n2 = w2.outputs();
    if (n1 > output_cap / n2 || 2 * (n1 * n2) > output_cap)
        throw BudgetError("transform_pair output alphabet exceeds the configured cap");

    const std::size_t joint = n1 * n2;
    std::vector<double> minus0(joint), minus1(joint);
    std::vector<double> plus0(2 * joint), plus1(2 * joint);
    for (std::size_t y1 = 0; y1 < n1; ++y1) {
        for (std::size_t y2 = 0; y2 < n2; ++y2) {
            const std::size_t y = y1 * n2 + y2;
            // p[x1][x2] = 1/2 W'(y1 | x1^x2) W''(y2 | x2)
            const double p00 = 0.5 * w1.prob(0, y1) * w2.prob(0, y2);
            const double p01 = 0.5 * w1.prob(1, y1) * w2.prob(1, y2);
            const double p10 = 0.5 * w1.prob(1, y1) * w2.prob(0, y2);
            const double p11 = 0.5 * w1.prob(0, y1) * w2.prob(1, y2);
            minus0[y] = p00 + p01;
            minus1[y] = p10 + p11;
            plus0[2 * y + 0] = p00;
            plus0[2 * y + 1] = p10;
            plus1[2 * y + 0] = p01;
            plus1[2 * y + 1] = p11;
        }
    }
    return {DiscreteChannel(std::move(minus0), std::move(minus1)),
            DiscreteChannel(std::move(plus0), std::move(plus1))};
}

ErasurePair bec_transform(const ErasureChannel& a, const ErasureChannel& b) {
    return {ErasureChannel(a.eps + b.eps - a.eps * b.eps), ErasureChannel(a.eps * b.eps)};
}

NoiseModel NoiseModel::bec(double eps) {
    check_probability(eps, "erasure probability");
    return {ChannelKind::Bec, eps};
}

NoiseModel NoiseModel::bsc(double p) {
    check_probability(p, "crossover probability");
    return {ChannelKind::Bsc, p};
}

DiscreteChannel NoiseModel::to_discrete() const {
    return kind == ChannelKind::Bec ? ErasureChannel(parameter).to_discrete() : DiscreteChannel::bsc(parameter);
}

std::string NoiseModel::name() const { return kind == ChannelKind::Bec ? "BEC" : "BSC"; }

NoiseModel parse_noise_model(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ValidationError("channel must be written as kind:parameter, e.g. bec:0.3");
    std::string kind = text.substr(0, colon);
    std::transform(kind.begin(), kind.end(), kind.begin(), [](unsigned char c) { return std::tolower(c); });
    double value = 0.0;
    try {
        std::size_t used = 0;
        value = std::stod(text.substr(colon + 1), &used);
        if (used != text.size() - colon - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw ValidationError("cannot parse channel parameter in '" + text + "'");
    }
    if (kind == "bec") return NoiseModel::bec(value);
    if (kind == "bsc") return NoiseModel::bsc(value);
    throw ValidationError("unknown channel kind '" + kind + "'");
}

}  // namespace polarmem
