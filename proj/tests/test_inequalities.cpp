#include <doctest.h>

#include <stdexcept>

#include "alder/inequalities.hpp"
#include "oracles.hpp"

using namespace alder;

namespace {

struct Fixture {
    TableStore store;
    RunContext ctx{store, 2};
};

const Cell& find_cell(const VerificationReport& rep, const char* key, std::int64_t value) {
    for (const auto& c : rep.cells)
        if (c.params.contains(key) && c.params[key] == value) return c;
    throw std::logic_error("cell not found");
}

GridSpec grid(Axis a, Axis d, Axis N, Axis n) {
    GridSpec g;
    g.a = std::move(a);
    g.d = std::move(d);
    g.N = std::move(N);
    g.n = std::move(n);
    return g;
}

}  // namespace

TEST_CASE("Axis parsing") {
    CHECK(Axis::parse("7").values() == std::vector<std::int64_t>{7});
    CHECK(Axis::parse("1..4").values() == std::vector<std::int64_t>{1, 2, 3, 4});
    CHECK(Axis::parse("2,3,5").values() == std::vector<std::int64_t>{2, 3, 5});
    CHECK(Axis::parse("1..3,9").values() == std::vector<std::int64_t>{1, 2, 3, 9});
    CHECK(Axis::parse("-2..0").values() == std::vector<std::int64_t>{-2, -1, 0});
    CHECK(Axis::parse("5..5").max() == 5);
    CHECK_THROWS_AS(Axis::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Axis::parse("4..1"), std::invalid_argument);
    CHECK_THROWS_AS(Axis::parse("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(Axis::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Axis::parse("1..2..3"), std::invalid_argument);
}

TEST_CASE("check_shift") {
    CHECK(check_shift(63, 2, 126) >= 0);
    CHECK(check_shift(105, 4, 107) >= 0);
    CHECK(check_shift(63, 2, 1) == 0);
    CHECK(q_count(1, 63, 126) >= 32);
    CHECK_THROWS_AS(check_shift(5, 6, 10), std::invalid_argument);
}

TEST_CASE("check_shift agrees with the size of the enumeration") {
    for (auto [d, N] : {std::pair<std::int64_t, std::int64_t>{63, 2}, {63, 3}, {105, 4}})
        for (std::int64_t n = 0; n <= 700; n += 37)
            CHECK(check_shift(d, N, n) ==
                  DeltaValue(q_count(1, d, n)) - static_cast<long>(enumerate_S(d, N, n).size()));
}

TEST_CASE("shift grid labels and holds") {
    Fixture f;
    const auto rep = verify_shift_range(grid({}, Axis::parse("63,12,5"), Axis::parse("2,4,9"), Axis::parse("1..400")), f.ctx);
    CHECK(rep.cells.size() == 3 * 3 * 400);
    const auto tally = rep.tally();
    CHECK(tally.fails == 0);
    CHECK(tally.holds > 0);
    for (const auto& c : rep.cells) {
        const auto d = c.params["d"].get<std::int64_t>();
        const auto N = c.params["N"].get<std::int64_t>();
        const auto n = c.params["n"].get<std::int64_t>();
        if (d - N + 3 < 3) {
            CHECK(c.status == CellStatus::skipped);
        } else if (shift_in_hypothesis(d, N, n)) {
            CHECK(c.status == CellStatus::holds);
        } else {
            CHECK(c.status == CellStatus::out_of_hypothesis);
            CHECK(!c.value.has_value());
        }
    }
    const auto& cell = find_cell(verify_shift_range(grid({}, Axis::single(12), Axis::single(4), Axis::single(50)), f.ctx), "n", 50);
    CHECK(cell.status == CellStatus::out_of_hypothesis);
}

TEST_CASE("forced out-of-hypothesis shift cells carry values but never fail") {
    Fixture f;
    auto g = grid({}, Axis::single(12), Axis::single(4), Axis::parse("1..300"));
    g.force = true;
    const auto rep = verify_shift_range(g, f.ctx);
    for (const auto& c : rep.cells) {
        CHECK(c.status == CellStatus::out_of_hypothesis);
        CHECK(c.value.has_value());
    }
    CHECK(rep.exit_code() == 0);
}

TEST_CASE("littlelemon fixes N at 4") {
    Fixture f;
    const auto rep = verify_littlelemon(grid({}, Axis::parse("105,106"), {}, Axis::parse("100..400")), f.ctx);
    CHECK(rep.cmd == "verify.littlelemon");
    CHECK(rep.tally().fails == 0);
    CHECK(find_cell(rep, "n", 100).status == CellStatus::out_of_hypothesis);
    CHECK_THROWS_AS(verify_littlelemon(grid({}, Axis::single(105), Axis::single(3), Axis::single(200)), f.ctx),
                    std::invalid_argument);
}

TEST_CASE("Andrews premises") {
    const auto S3 = s_set(63, 3), T5 = t_set(5, 63);
    const auto p = check_andrews_premises(S3, T5, 50);
    CHECK(!p);
    CHECK(p.failing_index == 2);
    CHECK(check_andrews_premises(T5, T5, 50));
    const ResidueClassSet all(1, {0});
    CHECK(check_andrews_premises(s_set(63, 2), all, 200));
    CHECK(!check_andrews_premises(all, q_set(2, 3, QVariant::plain), 5));

    Fixture f;
    const auto rep = check_andrews(s_set(63, 2), all, 300, f.ctx);
    CHECK(rep.cells.size() == 301);
    CHECK(rep.tally().holds == 301);
    const auto same = check_andrews(T5, T5, 200, f.ctx);
    for (const auto& c : same.cells) CHECK(*c.value == "0");
    const auto bad = check_andrews(S3, T5, 200, f.ctx);
    CHECK(bad.tally().out_of_hypothesis == 201);
    CHECK(bad.exit_code() == 0);
}

TEST_CASE("T_{s,d} counts grow with s") {
    Fixture f;
    const auto rep = verify_t_monotone(Axis::parse("7,31,63"), 400, f.ctx);
    CHECK(rep.tally().fails == 0);
    CHECK(rep.cells.size() == 6 + 15 + 21);
}

TEST_CASE("ceiling reduction") {
    CHECK(q_count(2, 5, 9) == 2);
    CHECK(q_count(1, 3, 5) == 2);
    CHECK(check_ceiling(2, 5, 9));
    for (std::int64_t n = 1; n <= 60; ++n) CHECK(check_ceiling(1, 7, n));
    Fixture f;
    const auto rep = verify_ceiling(grid(Axis::parse("1..4"), Axis::parse("1..40"), {}, Axis::parse("1..300")), f.ctx);
    CHECK(rep.tally().fails == 0);
    CHECK(rep.tally().holds > 0);
    CHECK(find_cell(rep, "n", 1).status == CellStatus::out_of_hypothesis);
}

TEST_CASE("a-to-1 reduction") {
    CHECK(big_q_minus(2, 5, 10) == 2);
    CHECK(big_q_minus(1, 1, 5) == 2);
    CHECK(check_a_to_1(2, 5, 5));
    CHECK(check_a_to_1(1, 9, 40));
    CHECK_THROWS_AS(check_a_to_1(2, 4, 5), std::invalid_argument);
    // (d+3)/a = 2: the right-hand side set is {3, 5, 7, ...}.
    CHECK(check_a_to_1(3, 3, 30));
    CHECK(big_q_minus(1, 1, 5) == oracle::restricted_partitions(5, oracle::q_pred(1, 1, true, false)));

    Fixture f;
    std::vector<std::int64_t> ds;
    for (std::int64_t a = 2; a <= 4; ++a)
        for (std::int64_t k = 2; k <= 30; ++k) ds.push_back(a * k - 3);
    const auto rep = verify_a_to_1(grid(Axis::parse("2..4"), Axis(ds), {}, Axis::parse("0..200")), f.ctx);
    const auto t = rep.tally();
    CHECK(t.fails == 0);
    CHECK(t.holds > 0);
    CHECK(t.skipped > 0);  // pairs with a not dividing d+3
}

TEST_CASE("n_hat") {
    CHECK(n_hat(4, 7) == 1);
    CHECK(n_hat(1, 12345) == 0);
    CHECK(n_hat(5, 10) == 0);
    CHECK(n_hat(3, 0) == 0);
    CHECK(n_hat(3, 1) == 2);
    CHECK_THROWS_AS(n_hat(0, 1), std::invalid_argument);
}

TEST_CASE("modified comparison on the general-a pair") {
    const auto [S, T] = gen_kp_sets(4, 417);
    CHECK(S.element(1) == 4);
    CHECK(T.element(1) == 4);
    for (std::int64_t i = 1; i <= 40; ++i) {
        CHECK(S.element(2 * i) == i * 420 + 4);
        CHECK(T.element(2 * i) == i * 416 + 4);
        CHECK(T.element(i) % 4 == 0);
    }
    CHECK(check_modified_st_premises(4, S, T, 400));
    CHECK(!check_modified_st_premises(4, T, S, 400));
    CHECK(!check_modified_st_premises(4, S, t_set(5, 63), 3));

    for (std::int64_t n = 0; n <= 600; n += 4) CHECK(check_modified_st(4, S, T, n));
    CHECK(check_modified_st(4, S, T, 7));
    CHECK_THROWS_AS(check_modified_st(4, T, S, 10), std::invalid_argument);

    Fixture f;
    const auto rep = verify_modified_st(grid(Axis::single(4), Axis::single(417), {}, Axis::parse("0..1500")), f.ctx);
    CHECK(rep.cells.size() == 1501);
    CHECK(rep.tally().holds == 1501);
}

TEST_CASE("modified comparison over several pairs") {
    Fixture f;
    const auto rep = verify_modified_st(grid(Axis::parse("1..5"), Axis::parse("100,211,315"), {}, Axis::parse("0..400")), f.ctx);
    CHECK(rep.tally().fails == 0);
}

TEST_CASE("general-a theorem with its exempt cell") {
    Fixture f;
    const auto rep = verify_gen_kp(4, 417, 1000, f.ctx);
    CHECK(rep.cells.size() == 1000);
    CHECK(rep.tally().fails == 0);
    CHECK(rep.tally().holds == 999);
    const auto& cell = find_cell(rep, "n", 424);
    CHECK(cell.status == CellStatus::out_of_hypothesis);
    CHECK(*cell.value == "-1");
    CHECK(cell.note.has_value());
    CHECK(q_count(4, 417, 424) == 1);
    CHECK(big_q_minus(4, 417, 424) == 2);

    const auto three = verify_gen_kp(3, 315, 800, f.ctx);
    CHECK(three.tally().holds == 800);
    const auto& c321 = find_cell(three, "n", 321);
    CHECK(c321.note.has_value());
    CHECK(c321.status == CellStatus::holds);

    CHECK(verify_gen_kp(1, 105, 500, f.ctx).tally().holds == 500);
}

TEST_CASE("exempt cells: zero or one per (a, d)") {
    for (std::int64_t a = 1; a <= 6; ++a)
        for (std::int64_t d = 100; d <= 130; ++d) {
            int exempt = 0;
            for (std::int64_t n = 1; n <= d + a + 10; ++n) exempt += gen_kp_exempt(a, d, n);
            CHECK(exempt == ((d + 3) % a == 0 ? 1 : 0));
        }
    CHECK(gen_kp_exempt(4, 417, 424));
    CHECK(!gen_kp_exempt(4, 417, 423));
    CHECK(!gen_kp_exempt(4, 418, 425));
}

TEST_CASE("general-a hypothesis uses the ceiling literally") {
    CHECK(gen_in_hypothesis(1, 105));
    CHECK(!gen_in_hypothesis(1, 104));
    CHECK(gen_in_hypothesis(4, 417));
    CHECK(!gen_in_hypothesis(4, 416));
    CHECK(gen_in_hypothesis(2, 209));
    CHECK(!gen_in_hypothesis(2, 208));
}

TEST_CASE("double-minus inequality has no exempt cell") {
    Fixture f;
    const auto rep = verify_gen_dkst(4, 417, 1000, f.ctx);
    CHECK(rep.tally().holds == 1000);
    CHECK(big_q_minus_minus(4, 417, 424) == 1);
    CHECK(verify_gen_dkst(2, 212, 800, f.ctx).tally().holds == 800);
    const auto small = verify_gen_dkst(4, 417, 3, f.ctx);
    for (const auto& c : small.cells) CHECK(*c.value == "0");
}

TEST_CASE("general-a cells outside the hypothesis") {
    Fixture f;
    const auto rep = verify_gen_kp(2, 3, 50, f.ctx);
    CHECK(rep.tally().out_of_hypothesis == 50);
    CHECK(rep.exit_code() == 0);
}

TEST_CASE("small-n anchors") {
    Fixture f;
    for (auto [d, N] : {std::pair<std::int64_t, std::int64_t>{63, 2}, {105, 4}, {200, 5}}) {
        const auto rep = verify_smalln_anchors(d, N, f.ctx);
        CHECK(rep.cells.size() == 8);
        CHECK(rep.tally().holds == 8);
    }
    CHECK(big_q_minus(1, 61, 126) == 2);
    CHECK(big_q_minus(1, 61, 321) == 29);
    CHECK(big_q_minus(1, 61, 454) <= 110);
    const auto dist = largest_part_distribution(63, 2, 321, 10);
    for (std::size_t i = 0; i < dist.size(); ++i) CHECK(dist[i] == kAnchorDistribution5[i]);
    CHECK(verify_smalln_anchors(63, 4, f.ctx).tally().out_of_hypothesis == 8);
}

TEST_CASE("largest-part distribution sums to rho") {
    for (std::int64_t n : {0, 50, 200, 321, 454}) {
        const auto dist = largest_part_distribution(63, 2, n, 20);
        Count total = 0;
        for (const auto& v : dist) total += v;
        CHECK(total + (n == 0 ? 1 : 0) == rho(s_set(63, 2), n));
    }
}

TEST_CASE("x_i - y_i differences") {
    CHECK(check_xy_differences(63, 2));
    CHECK(check_xy_differences(63, 5));
    CHECK(check_xy_differences(31, 2));
    CHECK(check_xy_differences(105, 4));
    CHECK(check_xy_differences(200, 8));
    CHECK_THROWS_AS(check_xy_differences(30, 2), std::invalid_argument);
    CHECK_THROWS_AS(check_xy_differences(40, 10), std::invalid_argument);
    const auto e = xy_expected_differences(63, 2);
    CHECK(e[0] == 60);
    CHECK(e[1] == 58);
    Fixture f;
    const auto rep = verify_xy_differences(grid({}, Axis::parse("31..120"), Axis::parse("2..10"), {}), f.ctx);
    CHECK(rep.tally().fails == 0);
    CHECK(find_cell(verify_xy_differences(grid({}, Axis::single(63), Axis::single(5), {}), f.ctx), "N", 5).value == "50");
    CHECK(find_cell(verify_xy_differences(grid({}, Axis::single(63), Axis::single(2), {}), f.ctx), "N", 2).value == "58");
}

TEST_CASE("counterexample search") {
    Fixture f;
    const auto rep = search_counterexamples(SearchKind::delta, grid(Axis::single(2), Axis::parse("1..10"), {}, Axis::parse("1..100")), f.ctx);
    CHECK(rep.informational);
    CHECK(rep.exit_code() == 0);
    bool found = false;
    for (const auto& c : rep.cells) {
        CHECK(c.witness.has_value());
        CHECK(c.value->front() == '-');
        if (c.params["d"] == 3 && c.params["n"] == 6) {
            found = true;
            CHECK(*c.value == "-1");
        }
    }
    CHECK(found);
    CHECK(q_brute(2, 3, 6) == 1);

    CHECK(search_counterexamples(SearchKind::delta, grid(Axis::single(1), Axis::parse("1..3"), {}, Axis::parse("1..200")), f.ctx).cells.empty());
    CHECK(search_counterexamples(SearchKind::delta_minus, grid(Axis::single(1), Axis::parse("105..110"), {}, Axis::parse("1..500")), f.ctx).cells.empty());
    const auto shift = search_counterexamples(SearchKind::shift, grid({}, Axis::single(12), Axis::single(4), Axis::parse("1..100")), f.ctx);
    CHECK(shift.cmd == "search.shift");
}

TEST_CASE("double-minus search is empty near the threshold") {
    Fixture f;
    for (std::int64_t a = 1; a <= 4; ++a) {
        std::vector<std::int64_t> ds;
        for (std::int64_t d = 1; d <= 500; ++d) {
            const auto c = (d + a - 1) / a;
            if (c >= 105 && c <= 107) ds.push_back(d);
        }
        const auto rep = search_counterexamples(SearchKind::delta_minus_minus,
                                                grid(Axis::single(a), Axis(ds), {}, Axis::parse("1..1200")), f.ctx);
        CHECK(rep.cells.empty());
    }
}

TEST_CASE("search kinds") {
    CHECK(parse_search_kind("delta") == SearchKind::delta);
    CHECK(parse_search_kind("delta-m") == SearchKind::delta_minus);
    CHECK(parse_search_kind("delta_mm") == SearchKind::delta_minus_minus);
    CHECK(parse_search_kind("shift") == SearchKind::shift);
    CHECK(to_string(SearchKind::delta_minus) == "delta-m");
    CHECK_THROWS_AS(parse_search_kind("nope"), std::invalid_argument);
}

TEST_CASE("reports do not depend on the number of workers") {
    const auto g = grid({}, Axis::parse("63..65"), Axis::parse("2,3"), Axis::parse("1..800"));
    TableStore s1, s8;
    RunContext one{s1, 1}, eight{s8, 8};
    CHECK(render(verify_shift_range(g, one), {}) == render(verify_shift_range(g, eight), {}));
    const auto kp = grid(Axis::parse("3,4"), Axis::parse("315,417"), {}, Axis::parse("1..600"));
    CHECK(render(verify_gen_kp(kp, one), {}) == render(verify_gen_kp(kp, eight), {}));
}
