#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "oracles/state_oracle.hpp"
#include "polarmem/csv.hpp"
#include "polarmem/errors.hpp"
#include "polarmem/geometry.hpp"
#include "polarmem/states.hpp"

using namespace polarmem;

namespace {
std::vector<std::string> as_strings(int n, unsigned m) {
    std::vector<std::string> out;
    for (const auto& s : assign_states(n, m)) out.push_back(to_string(s));
    return out;
}
}  // namespace

TEST_CASE("assign_states examples") {
    for (unsigned m = 1; m <= 4; ++m) CHECK(as_strings(1, m) == std::vector<std::string>{"+", "-"});
    CHECK(as_strings(2, 1) == std::vector<std::string>{"++", "-+", "+-", "--"});
    CHECK(as_strings(2, 2) == std::vector<std::string>{"++", "-*", "+-"});
    CHECK_THROWS_AS(assign_states(20, 1, 1000), BudgetError);
}

TEST_CASE("validator examples") {
    CHECK(validate_state_vector(parse_state_vector("+-*"), 2));
    CHECK_FALSE(validate_state_vector(parse_state_vector("-+"), 2));
    for (unsigned m = 1; m <= 4; ++m) CHECK_FALSE(validate_state_vector(parse_state_vector("*+"), m));
    CHECK_FALSE(validate_state_vector({}, 2));
    CHECK(validate_state_vector(parse_state_vector("+-"), 3));  // bare trailing minus
    CHECK(validate_state_vector(parse_state_vector("-**+-*"), 3));
    CHECK_FALSE(validate_state_vector(parse_state_vector("-*+-*"), 3));
    CHECK_FALSE(validate_state_vector(parse_state_vector("-**"), 2));
    CHECK_THROWS_AS(parse_state_vector("+x"), ValidationError);
}

TEST_CASE("validator agrees with the regular-expression reference") {
    for (unsigned m = 1; m <= 4; ++m)
        for (int n = 1; n <= 7; ++n) {
            std::string s(static_cast<std::size_t>(n), '+');
            std::size_t total = 1;
            for (int k = 0; k < n; ++k) total *= 3;
            for (std::size_t code = 0; code < total; ++code) {
                std::size_t c = code;
                for (auto& ch : s) {
                    ch = "+-*"[c % 3];
                    c /= 3;
                }
                CAPTURE(s);
                CHECK(validate_state_vector(parse_state_vector(s), m) == oracle::regex_valid(s, m));
            }
        }
}

TEST_CASE("assigned vectors are exactly the valid vectors") {
    for (unsigned m = 1; m <= 4; ++m)
        for (int n = 1; n <= 8; ++n) {
            const auto got = as_strings(n, m);
            CHECK(got.size() == code_length(n, m));
            const std::set<std::string> uniq(got.begin(), got.end());
            CHECK(uniq.size() == got.size());
            const auto all = oracle::enumerate_valid(n, m);
            CHECK(std::set<std::string>(all.begin(), all.end()) == uniq);
        }
}

TEST_CASE("to_binary") {
    using B = std::vector<std::uint8_t>;
    CHECK(to_binary(parse_state_vector("+++")) == B{1, 1, 1});
    CHECK(to_binary(parse_state_vector("+-*")) == B{1, 0, 0});
    CHECK(to_binary(parse_state_vector("-*+")) == B{0, 0, 1});
}

TEST_CASE("binary images are distinct") {
    for (unsigned m = 1; m <= 5; ++m)
        for (int n = 1; n <= 14; ++n) {
            std::set<std::vector<std::uint8_t>> seen;
            for (const auto& s : assign_states(n, m)) seen.insert(to_binary(s));
            CHECK(seen.size() == code_length(n, m));
        }
}

TEST_CASE("bit-reversed order examples") {
    CHECK(bit_reversed_order(2, 1) == std::vector<std::uint64_t>{4, 2, 3, 1});
    for (unsigned m = 1; m <= 3; ++m) CHECK(bit_reversed_order(1, m) == std::vector<std::uint64_t>{2, 1});
}

TEST_CASE("decode order matches sorting the binary images") {
    for (unsigned m = 1; m <= 4; ++m)
        for (int n = 1; n <= 12; ++n) {
            const auto states = as_strings(n, m);
            const auto sorted = oracle::order_by_sorting(states);
            const auto seq = decode_sequence(n, m);
            REQUIRE(seq.size() == sorted.size());
            for (std::size_t k = 0; k < seq.size(); ++k) CHECK(seq[k] == sorted[k] + 1);
            const auto pi = bit_reversed_order(n, m);
            for (std::size_t k = 0; k < seq.size(); ++k) CHECK(pi[seq[k] - 1] == k + 1);
        }
}

TEST_CASE("minus bits precede their plus partners") {
    for (unsigned m = 1; m <= 5; ++m)
        for (int n = 1; n <= 16; ++n) {
            const auto pi = bit_reversed_order(n, m);
            const auto na = code_length(n - 1, m), nb = code_length(n - static_cast<int>(m), m);
            for (std::uint64_t j = 1; j <= nb; ++j) CHECK(pi[j - 1] > pi[j + na - 1]);
        }
}

TEST_CASE("shared history") {
    for (unsigned m = 1; m <= 4; ++m)
        for (int n = static_cast<int>(m) + 1; n <= 14; ++n) {
            const auto upper = assign_states(n - 1, m);
            const auto lower = assign_states(n - static_cast<int>(m), m);
            for (std::size_t j = 0; j < lower.size(); ++j) {
                const StateVector prefix(upper[j].begin(), upper[j].begin() + static_cast<long>(lower[j].size()));
                CHECK(prefix == lower[j]);
            }
        }
}

TEST_CASE("induced order consistency") {
    for (unsigned m = 1; m <= 4; ++m)
        for (int n = 2; n <= 14; ++n) {
            const auto na = code_length(n - 1, m);
            std::vector<std::uint64_t> induced;
            std::set<std::uint64_t> seen;
            for (auto ch : decode_sequence(n, m)) {
                const std::uint64_t prefix = ch > na ? ch - na : ch;
                if (seen.insert(prefix).second) induced.push_back(prefix);
            }
            CHECK(induced == decode_sequence(n - 1, m));
        }
}

TEST_CASE("single vector lookup and ordered indices") {
    for (unsigned m = 1; m <= 3; ++m) {
        const auto all = assign_states(9, m);
        for (std::uint64_t i = 1; i <= all.size(); ++i) CHECK(state_vector_of(9, m, i) == all[i - 1]);
        const auto oi = ordered_indices(9, m);
        const auto pi = bit_reversed_order(9, m);
        for (std::size_t k = 0; k < oi.size(); ++k) {
            CHECK(oi[k].channel_index == k + 1);
            CHECK(oi[k].binary == to_binary(all[k]));
            CHECK(oi[k].pi == pi[k]);
        }
    }
    CHECK_THROWS_AS(state_vector_of(3, 2, 0), DomainError);
    CHECK_THROWS_AS(state_vector_of(3, 2, 6), DomainError);
}

TEST_CASE("type class counts") {
    for (int n = 1; n <= 30; ++n) {
        const auto t = count_type_classes(n, 1);
        BigCount binom = 1;
        for (int k = 0; k <= n; ++k) {
            CHECK(t.counts[static_cast<std::size_t>(k)] == binom);
            binom = binom * (n - k) / (k + 1);
        }
    }
    const auto t3 = count_type_classes(3, 2);
    REQUIRE(t3.counts.size() >= 3);
    CHECK(t3.counts[0] == 1);
    CHECK(t3.counts[1] == 3);
    CHECK(t3.counts[2] == 1);
    CHECK(t3.total() == 5);
    CHECK(count_type_classes(20, 2).total() == 17711);
    for (unsigned m = 1; m <= 6; ++m)
        for (int n = 1; n <= 60; n += 7) {
            const auto t = count_type_classes(n, m);
            CHECK(t.total() == code_length(n, m));
            for (std::size_t k = 0; k < t.counts.size(); ++k)
                if (static_cast<double>(k) > double(n) / m + 1) CHECK(t.counts[k] == 0);
        }
}

TEST_CASE("type class counts agree with enumeration") {
    for (unsigned m = 1; m <= 4; ++m)
        for (int n = 1; n <= 8; ++n) {
            std::map<std::size_t, BigCount> tally;
            for (const auto& s : oracle::enumerate_valid(n, m))
                tally[static_cast<std::size_t>(std::count(s.begin(), s.end(), '-'))] += 1;
            const auto t = count_type_classes(n, m);
            for (std::size_t k = 0; k < t.counts.size(); ++k) CHECK(t.counts[k] == tally[k]);
        }
}

TEST_CASE("counting bound and divergence decay") {
    for (unsigned m : {1u, 2u, 3u, 5u})
        for (int n : {10, 40, 120, 400}) {
            const auto t = count_type_classes(n, m);
            const double slack = m * std::log2(1.0 + n + m);
            const double log2_total = big_log2(t.total());
            for (std::size_t k = 0; k < t.counts.size(); ++k) {
                if (t.counts[k] == 0) continue;
                const double q = std::min(double(k) / n, 1.0 / m);
                const double lc = big_log2(t.counts[k]);
                CAPTURE(m);
                CAPTURE(n);
                CAPTURE(k);
                CHECK(lc <= n * growth_function(m, q) + slack);
                CHECK(lc - log2_total <= -n * divergence(m, q) + slack);
            }
        }
}

TEST_CASE("typical mass") {
    CHECK(typical_mass(30, 2, 1.0) == 1.0);
    CHECK(typical_mass(1000, 1, 0.05) >= 0.99);
    CHECK(typical_mass(400, 2, 0.05) > typical_mass(50, 2, 0.05));
    CHECK_THROWS_AS(typical_mass(10, 2, 0.0), DomainError);
}

TEST_CASE("typical mass matches the golden table") {
    std::ifstream in(std::string(POLARMEM_GOLDEN_DIR) + "/typical_mass.csv");
    REQUIRE(in);
    const auto table = read_csv(in);
    REQUIRE(!table.rows.empty());
    for (const auto& row : table.rows) {
        const auto m = static_cast<unsigned>(std::stoul(row[table.column("m")]));
        const double eps = std::stod(row[table.column("eps")]);
        const int n = std::stoi(row[table.column("n")]);
        const double want = std::stod(row[table.column("mass")]);
        CAPTURE(m);
        CAPTURE(n);
        CHECK(std::fabs(typical_mass(n, m, eps) - want) <= 1e-11);
    }
}

TEST_CASE("typical mass eventually exceeds the concentration floor") {
    // For a fixed eps the floor 1 - 2^(-n eps / 2) is met once the large-deviation rate of
    // the minus count exceeds eps / 2; eps = 0.25 satisfies this for m = 1..3.
    for (unsigned m = 1; m <= 3; ++m) {
        double prev = 0.0;
        for (int n : {100, 200, 300}) {
            const double mass = typical_mass(n, m, 0.25);
            CAPTURE(m);
            CAPTURE(n);
            CHECK(mass >= prev);
            if (n >= 200) CHECK(mass >= 1.0 - std::exp2(-n * 0.25 / 2));
            prev = mass;
        }
    }
}
