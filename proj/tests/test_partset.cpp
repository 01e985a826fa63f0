#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "alder/partset.hpp"
#include "oracles.hpp"

using namespace alder;

namespace {

void check_against(const ResidueClassSet& set, const oracle::Pred& pred, std::int64_t bound) {
    const auto expected = oracle::members(pred, bound);
    CHECK(set.members_up_to(bound) == expected);
    CHECK(set.count_up_to(bound) == static_cast<std::int64_t>(expected.size()));
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(set.element(static_cast<std::int64_t>(i) + 1) == expected[i]);
    for (std::int64_t x = -3; x <= bound; ++x) CHECK(set.contains(x) == (x >= 1 && pred(x)));
}

}  // namespace

TEST_CASE("r_of is the largest r with 2^r - 1 <= d") {
    CHECK(r_of(1) == 1);
    CHECK(r_of(2) == 1);
    CHECK(r_of(3) == 2);
    CHECK(r_of(30) == 4);
    CHECK(r_of(31) == 5);
    CHECK(r_of(63) == 6);
    CHECK(r_of(105) == 6);
    CHECK(r_of(127) == 7);
    CHECK_THROWS_AS(r_of(0), std::invalid_argument);
}

TEST_CASE("element, count and membership agree with a scan") {
    for (std::int64_t d = 1; d <= 40; ++d) {
        for (int s = 1; s <= r_of(d); ++s) check_against(t_set(s, d), oracle::t_pred(s, d), 6 * d + 7);
        for (std::int64_t N = 0; d - N + 3 >= 3; ++N) check_against(s_set(d, N), oracle::s_pred(d, N), 5 * d + 11);
        for (std::int64_t a = 1; a < d + 3; ++a) {
            check_against(q_set(a, d, QVariant::plain), oracle::q_pred(a, d, false, false), 4 * d + 9);
            check_against(q_set(a, d, QVariant::minus), oracle::q_pred(a, d, true, false), 4 * d + 9);
            check_against(q_set(a, d, QVariant::minus_minus), oracle::q_pred(a, d, true, true), 4 * d + 9);
        }
    }
}

TEST_CASE("element is strictly increasing and inverts count_up_to") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = std::uniform_int_distribution<std::int64_t>(1, 50)(rng);
        std::vector<std::int64_t> residues;
        for (std::int64_t r = 0; r < m; ++r)
            if (rng() % 3 == 0) residues.push_back(r);
        if (residues.empty()) residues.push_back(rng() % m);
        std::vector<std::int64_t> excl;
        for (int k = 0; k < 3; ++k) {
            const auto x = static_cast<std::int64_t>(rng() % 200) + 1;
            if (std::find(residues.begin(), residues.end(), x % m) != residues.end()) excl.push_back(x);
        }
        const ResidueClassSet set(m, residues, excl);
        std::int64_t prev = 0;
        for (std::int64_t i = 1; i <= 100; ++i) {
            const auto x = set.element(i);
            CHECK(x > prev);
            CHECK(set.contains(x));
            CHECK(set.count_up_to(x) == i);
            CHECK(set.count_up_to(x - 1) == i - 1);
            prev = x;
        }
    }
}

TEST_CASE("modulus 1 with residue 0 is every positive integer") {
    const ResidueClassSet all(1, {0});
    for (std::int64_t i = 1; i <= 20; ++i) CHECK(all.element(i) == i);
    CHECK(all.count_up_to(17) == 17);
}

TEST_CASE("construction is validated") {
    CHECK_THROWS_AS(ResidueClassSet(0, {0}), std::invalid_argument);
    CHECK_THROWS_AS(ResidueClassSet(5, {}), std::invalid_argument);
    CHECK_THROWS_AS(ResidueClassSet(5, {5}), std::invalid_argument);
    CHECK_THROWS_AS(ResidueClassSet(5, {-1}), std::invalid_argument);
    CHECK_THROWS_AS(ResidueClassSet(5, {1}, {2}), std::invalid_argument);
    CHECK_THROWS_AS(ResidueClassSet(5, {0}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(ResidueClassSet(5, {1}).element(0), std::invalid_argument);
}

TEST_CASE("residues and exclusions are canonicalised") {
    const ResidueClassSet a(7, {3, 1, 3}, {8, 1, 8});
    const ResidueClassSet b(7, {1, 3}, {1, 8});
    CHECK(a == b);
    CHECK(a.key() == "m=7;r=1,3;e=1,8");
    CHECK(a.element(1) == 3);
    CHECK(a.element(2) == 10);
}

TEST_CASE("T_{s,d} residues") {
    const auto t = t_set(5, 63);
    CHECK(t.modulus() == 126);
    CHECK(t.residues() == std::vector<std::int64_t>{1, 65, 67, 71, 79});
    CHECK(t.element(1) == 1);
    CHECK(t.element(2) == 65);
    CHECK(t.element(6) == 127);
    CHECK_THROWS_AS(t_set(7, 63), std::invalid_argument);
    CHECK_NOTHROW(t_set(6, 63));
    CHECK_THROWS_AS(t_set(0, 63), std::invalid_argument);
    CHECK(t_set(1, 1).element(3) == 5);
}

TEST_CASE("S_d^N drops d-N+2") {
    const auto s = s_set(63, 2);
    CHECK(s.key() == "m=64;r=1,63;e=63");
    CHECK(s.element(1) == 1);
    CHECK(s.element(2) == 65);
    CHECK(s.element(3) == 127);
    CHECK(!s.contains(63));
    CHECK(s_set(63, 3).element(2) == 64);
    CHECK_THROWS_AS(s_set(5, 6), std::invalid_argument);
}

TEST_CASE("Q-style sets") {
    CHECK(q_set(2, 3, QVariant::plain).members_up_to(10) == std::vector<std::int64_t>{2, 4, 8, 10});
    CHECK(q_set(2, 3, QVariant::minus).members_up_to(10) == std::vector<std::int64_t>{2, 8, 10});
    CHECK(q_set(2, 3, QVariant::minus_minus).members_up_to(10) == std::vector<std::int64_t>{8, 10});
    // a = (d+3)/2: the two residues coincide.
    CHECK(q_set(3, 3, QVariant::plain).members_up_to(20) == std::vector<std::int64_t>{3, 9, 15});
    CHECK(q_set(3, 3, QVariant::minus_minus).members_up_to(20) == std::vector<std::int64_t>{9, 15});
    CHECK_THROWS_AS(q_set(0, 3, QVariant::plain), std::invalid_argument);
    CHECK_THROWS_AS(q_set(6, 3, QVariant::plain), std::invalid_argument);
}

TEST_CASE("closed forms for x_i and y_i match enumeration") {
    for (std::int64_t d = 31; d <= 140; ++d) {
        const auto t = t_set(5, d);
        for (std::int64_t i = 1; i <= 80; ++i) CHECK(y_closed(d, i) == t.element(i));
        for (std::int64_t N = 0; N <= d / 2; ++N) {
            const auto s = s_set(d, N);
            for (std::int64_t i = 1; i <= 80; ++i) CHECK(x_closed(d, N, i) == s.element(i));
        }
    }
    CHECK(x_closed(63, 2, 2) == 65);
    CHECK(y_closed(63, 2) == 65);
    CHECK(y_closed(63, 6) == 127);
    CHECK_THROWS_AS(y_closed(30, 1), std::invalid_argument);
    CHECK_THROWS_AS(x_closed(63, 2, 0), std::invalid_argument);
}
