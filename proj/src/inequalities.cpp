#include "alder/inequalities.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "alder/executor.hpp"

namespace alder {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ceil_div(std::int64_t x, std::int64_t y) { return (x + y - 1) / y; }

std::int64_t to_i64(std::string_view s) {
    std::int64_t v = 0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || s.empty())
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    return v;
}

std::string str(const Count& c) { return c.str(); }

/// Evaluates eval(i) for every cell, in parallel, and restores the order.
template <class Eval>
VerificationReport run_cells(std::string cmd, std::size_t count, RunContext& ctx, Eval&& eval) {
    VerificationReport rep;
    rep.cmd = std::move(cmd);
    rep.cells = parallel_map(count, ctx.jobs, [&](std::size_t i) {
        const auto start = Clock::now();
        Cell c = eval(i);
        c.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        return c;
    });
    return rep;
}

/// Q^(a,-) style set with an arbitrary modulus: x = +-a (mod m), minus m-a.
ResidueClassSet q_minus_set_with_modulus(std::int64_t a, std::int64_t m) {
    if (a < 1 || m <= a) throw std::invalid_argument("need 1 <= a < modulus");
    return ResidueClassSet(m, {a % m, (m - a) % m}, {m - a});
}

Count lookup(RunContext& ctx, const TableRequest& r, std::int64_t n) { return ctx.store.get(r)->at(n); }

struct Triple {
    std::int64_t outer, d, n;
};

std::vector<Triple> cross(const Axis& outer, const Axis& d, const Axis& n) {
    std::vector<Triple> out;
    for (auto o : outer.values())
        for (auto dv : d.values())
            for (auto nv : n.values()) out.push_back({o, dv, nv});
    return out;
}

void require(const Axis& axis, const char* name) {
    if (axis.empty()) throw std::invalid_argument(std::string("grid axis '") + name + "' is empty");
}

}  // namespace

// ---------------------------------------------------------------------------
// Axis

Axis::Axis(std::vector<std::int64_t> values) : values_(std::move(values)) {}

Axis Axis::interval(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("empty interval " + std::to_string(lo) + ".." + std::to_string(hi));
    if (hi - lo > 50'000'000) throw std::invalid_argument("interval too large");
    std::vector<std::int64_t> v;
    v.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (auto x = lo; x <= hi; ++x) v.push_back(x);
    return Axis(std::move(v));
}

Axis Axis::parse(std::string_view text) {
    std::vector<std::int64_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        const auto piece = text.substr(start, comma - start);
        const auto dots = piece.find("..");
        if (dots == std::string_view::npos) {
            out.push_back(to_i64(piece));
        } else {
            const auto part = interval(to_i64(piece.substr(0, dots)), to_i64(piece.substr(dots + 2)));
            out.insert(out.end(), part.values().begin(), part.values().end());
        }
        start = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty range");
    return Axis(std::move(out));
}

std::int64_t Axis::min() const {
    if (values_.empty()) throw std::logic_error("empty axis");
    return *std::min_element(values_.begin(), values_.end());
}

std::int64_t Axis::max() const {
    if (values_.empty()) throw std::logic_error("empty axis");
    return *std::max_element(values_.begin(), values_.end());
}

// ---------------------------------------------------------------------------
// Shift inequality

bool shift_in_hypothesis(std::int64_t d, std::int64_t N, std::int64_t n) {
    return N >= 2 && d >= std::max<std::int64_t>(63, 46 * N - 79) && n >= d + 2;
}

DeltaValue check_shift(std::int64_t d, std::int64_t N, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("check_shift: n must be >= 0");
    const auto S = s_set(d, N);
    return DeltaValue(q_count(1, d, n)) - rho(S, n);
}

VerificationReport verify_shift_range(const GridSpec& spec, RunContext& ctx) {
    require(spec.d, "d");
    require(spec.N, "N");
    require(spec.n, "n");
    const auto horizon = std::max<std::int64_t>(0, spec.n.max());

    std::vector<TableRequest> warm;
    for (auto N : spec.N.values())
        for (auto d : spec.d.values()) {
            if (d < 1 || d - N + 3 < 3) continue;
            warm.push_back(q_request(1, d, horizon));
            warm.push_back(rho_request(s_set(d, N), horizon));
        }
    ctx.store.warm(warm, ctx.jobs);

    const auto cells = cross(spec.N, spec.d, spec.n);
    return run_cells("verify.shift", cells.size(), ctx, [&](std::size_t i) {
        const auto [N, d, n] = cells[i];
        Cell c;
        c.params["d"] = d;
        c.params["N"] = N;
        c.params["n"] = n;
        if (d < 1 || n < 0 || d - N + 3 < 3) {
            c.status = CellStatus::skipped;
            c.note = "rejected: need d >= 1, n >= 0, d-N+3 >= 3";
            return c;
        }
        const bool in_hyp = shift_in_hypothesis(d, N, n);
        if (!in_hyp && !spec.force) {
            c.status = CellStatus::out_of_hypothesis;
            return c;
        }
        const auto q = lookup(ctx, q_request(1, d, horizon), n);
        const auto Q = lookup(ctx, rho_request(s_set(d, N), horizon), n);
        const DeltaValue diff = DeltaValue(q) - Q;
        c.value = diff.str();
        if (diff < 0) c.witness = "q=" + str(q) + " Q=" + str(Q);
        c.status = !in_hyp ? CellStatus::out_of_hypothesis : (diff >= 0 ? CellStatus::holds : CellStatus::fails);
        return c;
    });
}

VerificationReport verify_littlelemon(const GridSpec& spec, RunContext& ctx) {
    GridSpec fixed = spec;
    if (fixed.N.empty()) fixed.N = Axis::single(4);
    for (auto N : fixed.N.values())
        if (N != 4) throw std::invalid_argument("littlelemon: N is fixed at 4");
    auto rep = verify_shift_range(fixed, ctx);
    rep.cmd = "verify.littlelemon";
    return rep;
}

// ---------------------------------------------------------------------------
// Part-set comparison

PremiseResult check_andrews_premises(const ResidueClassSet& S, const ResidueClassSet& T, std::int64_t i_max) {
    if (T.element(1) != 1) return {false, 1, "y_1 = " + std::to_string(T.element(1)) + " != 1"};
    for (std::int64_t i = 1; i <= i_max; ++i) {
        const auto x = S.element(i), y = T.element(i);
        if (x < y)
            return {false, i,
                    "x_" + std::to_string(i) + " = " + std::to_string(x) + " < y_" + std::to_string(i) + " = " +
                        std::to_string(y)};
    }
    return {};
}

VerificationReport check_andrews(const ResidueClassSet& S, const ResidueClassSet& T, std::int64_t n_max,
                                 RunContext& ctx) {
    if (n_max < 0) throw std::invalid_argument("check_andrews: n_max must be >= 0");
    const auto i_max = std::max(S.count_up_to(n_max), T.count_up_to(n_max)) + 1;
    const auto premises = check_andrews_premises(S, T, i_max);
    const auto rs = rho_request(S, n_max), rt = rho_request(T, n_max);
    ctx.store.warm({rs, rt}, ctx.jobs);

    auto rep = run_cells("verify.andrews", static_cast<std::size_t>(n_max) + 1, ctx, [&](std::size_t i) {
        const auto n = static_cast<std::int64_t>(i);
        Cell c;
        c.params["n"] = n;
        const auto s = lookup(ctx, rs, n), t = lookup(ctx, rt, n);
        const DeltaValue diff = DeltaValue(t) - s;
        c.value = diff.str();
        if (diff < 0) c.witness = "rho(T)=" + str(t) + " rho(S)=" + str(s);
        c.status = !premises ? CellStatus::out_of_hypothesis : (diff >= 0 ? CellStatus::holds : CellStatus::fails);
        return c;
    });
    rep.extra["S"] = S.key();
    rep.extra["T"] = T.key();
    rep.extra["premises"] = premises.holds ? std::string("hold") : premises.reason;
    return rep;
}

VerificationReport verify_t_monotone(const Axis& d_axis, std::int64_t n_max, RunContext& ctx) {
    require(d_axis, "d");
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    struct Job {
        std::int64_t d;
        int a, b;
    };
    std::vector<Job> jobs;
    std::vector<TableRequest> warm;
    for (auto d : d_axis.values()) {
        if (d < 1) throw std::invalid_argument("d must be >= 1");
        const int r = r_of(d);
        for (int s = 1; s <= r; ++s) warm.push_back(rho_request(t_set(s, d), n_max));
        for (int a = 1; a <= r; ++a)
            for (int b = a; b <= r; ++b) jobs.push_back({d, a, b});
    }
    ctx.store.warm(warm, ctx.jobs);

    return run_cells("verify.t-monotone", jobs.size(), ctx, [&](std::size_t i) {
        const auto [d, a, b] = jobs[i];
        Cell c;
        c.params["d"] = d;
        c.params["a"] = a;
        c.params["b"] = b;
        c.params["n_max"] = n_max;
        const auto Ta = t_set(a, d), Tb = t_set(b, d);
        const auto premises =
            check_andrews_premises(Ta, Tb, std::max(Ta.count_up_to(n_max), Tb.count_up_to(n_max)) + 1);
        const auto ra = ctx.store.get(rho_request(Ta, n_max));
        const auto rb = ctx.store.get(rho_request(Tb, n_max));
        std::optional<DeltaValue> min_diff;
        std::optional<std::int64_t> first_bad;
        for (std::int64_t n = 0; n <= n_max; ++n) {
            const DeltaValue diff = DeltaValue(rb->at(n)) - ra->at(n);
            if (!min_diff || diff < *min_diff) min_diff = diff;
            if (diff < 0 && !first_bad) first_bad = n;
        }
        c.value = min_diff->str();
        if (!premises) c.witness = "premise: " + premises.reason;
        if (first_bad) c.witness = "rho(T_a) > rho(T_b) at n=" + std::to_string(*first_bad);
        c.status = (premises && !first_bad) ? CellStatus::holds : CellStatus::fails;
        return c;
    });
}

// ---------------------------------------------------------------------------
// Reductions for general a

bool check_ceiling(std::int64_t a, std::int64_t d, std::int64_t n) {
    if (a < 1 || d < 1 || n < 0) throw std::invalid_argument("check_ceiling: invalid parameters");
    return q_count(a, d, n) >= q_count(1, ceil_div(d, a), ceil_div(n, a));
}

VerificationReport verify_ceiling(const GridSpec& spec, RunContext& ctx) {
    require(spec.a, "a");
    require(spec.d, "d");
    require(spec.n, "n");
    const auto horizon = std::max<std::int64_t>(0, spec.n.max());
    std::vector<TableRequest> warm;
    for (auto a : spec.a.values())
        for (auto d : spec.d.values()) {
            if (a < 1 || d < 1) throw std::invalid_argument("a and d must be >= 1");
            warm.push_back(q_request(a, d, horizon));
            warm.push_back(q_request(1, ceil_div(d, a), ceil_div(horizon, a)));
        }
    ctx.store.warm(warm, ctx.jobs);

    const auto cells = cross(spec.a, spec.d, spec.n);
    return run_cells("verify.ceiling", cells.size(), ctx, [&](std::size_t i) {
        const auto [a, d, n] = cells[i];
        Cell c;
        c.params["a"] = a;
        c.params["d"] = d;
        c.params["n"] = n;
        if (n < 0) {
            c.status = CellStatus::skipped;
            return c;
        }
        const bool in_hyp = n >= d + 2 * a;
        if (!in_hyp && !spec.force) {
            c.status = CellStatus::out_of_hypothesis;
            return c;
        }
        const auto lhs = lookup(ctx, q_request(a, d, horizon), n);
        const auto rhs = lookup(ctx, q_request(1, ceil_div(d, a), ceil_div(horizon, a)), ceil_div(n, a));
        const DeltaValue diff = DeltaValue(lhs) - rhs;
        c.value = diff.str();
        if (diff < 0) c.witness = "lhs=" + str(lhs) + " rhs=" + str(rhs);
        c.status = !in_hyp ? CellStatus::out_of_hypothesis : (diff >= 0 ? CellStatus::holds : CellStatus::fails);
        return c;
    });
}

bool check_a_to_1(std::int64_t a, std::int64_t d, std::int64_t n) {
    if (a < 1 || d < 1 || n < 0) throw std::invalid_argument("check_a_to_1: invalid parameters");
    if ((d + 3) % a != 0) throw std::invalid_argument("check_a_to_1: a must divide d+3");
    return rho(q_set(a, d, QVariant::minus), a * n) == rho(q_set(1, (d + 3) / a - 3, QVariant::minus), n);
}

VerificationReport verify_a_to_1(const GridSpec& spec, RunContext& ctx) {
    require(spec.a, "a");
    require(spec.d, "d");
    require(spec.n, "n");
    const auto horizon = std::max<std::int64_t>(0, spec.n.max());
    std::vector<TableRequest> warm;
    for (auto a : spec.a.values())
        for (auto d : spec.d.values()) {
            if (a < 1 || d < 1 || (d + 3) % a != 0 || (d + 3) / a < 2) continue;
            warm.push_back(rho_request(q_set(a, d, QVariant::minus), a * horizon));
            warm.push_back(rho_request(q_set(1, (d + 3) / a - 3, QVariant::minus), horizon));
        }
    ctx.store.warm(warm, ctx.jobs);

    const auto cells = cross(spec.a, spec.d, spec.n);
    return run_cells("verify.a-to-1", cells.size(), ctx, [&](std::size_t i) {
        const auto [a, d, n] = cells[i];
        Cell c;
        c.params["a"] = a;
        c.params["d"] = d;
        c.params["n"] = n;
        if (a < 1 || d < 1 || n < 0 || (d + 3) % a != 0 || (d + 3) / a < 2) {
            c.status = CellStatus::skipped;
            c.note = "rejected: need a | d+3, a < d+3, n >= 0";
            return c;
        }
        const auto lhs = lookup(ctx, rho_request(q_set(a, d, QVariant::minus), a * horizon), a * n);
        const auto rhs = lookup(ctx, rho_request(q_set(1, (d + 3) / a - 3, QVariant::minus), horizon), n);
        const DeltaValue diff = DeltaValue(lhs) - rhs;
        c.value = diff.str();
        if (diff != 0) c.witness = "lhs=" + str(lhs) + " rhs=" + str(rhs);
        c.status = diff == 0 ? CellStatus::holds : CellStatus::fails;
        return c;
    });
}

std::int64_t n_hat(std::int64_t a, std::int64_t n) {
    if (a < 1) throw std::invalid_argument("n_hat: a must be >= 1");
    return ((-n) % a + a) % a;
}

PremiseResult check_modified_st_premises(std::int64_t a, const ResidueClassSet& S, const ResidueClassSet& T,
                                         std::int64_t i_max) {
    if (T.element(1) != a) return {false, 1, "y_1 = " + std::to_string(T.element(1)) + " != a"};
    for (std::int64_t i = 1; i <= i_max; ++i) {
        const auto x = S.element(i), y = T.element(i);
        if (y % a != 0) return {false, i, "a does not divide y_" + std::to_string(i) + " = " + std::to_string(y)};
        if (x < y)
            return {false, i,
                    "x_" + std::to_string(i) + " = " + std::to_string(x) + " < y_" + std::to_string(i) + " = " +
                        std::to_string(y)};
    }
    return {};
}

bool check_modified_st(std::int64_t a, const ResidueClassSet& S, const ResidueClassSet& T, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("check_modified_st: n must be >= 0");
    const auto shifted = n + n_hat(a, n);
    const auto premises = check_modified_st_premises(a, S, T, std::max(S.count_up_to(n), T.count_up_to(shifted)) + 1);
    if (!premises) throw std::invalid_argument("check_modified_st: premise failure: " + premises.reason);
    return rho(T, shifted) >= rho(S, n);
}

std::pair<ResidueClassSet, ResidueClassSet> gen_kp_sets(std::int64_t a, std::int64_t d) {
    if (a < 1 || d < 1) throw std::invalid_argument("gen_kp_sets: a and d must be >= 1");
    const auto dhat = n_hat(a, d);
    return {q_set(a, d, QVariant::minus), q_minus_set_with_modulus(a, d + dhat - a)};
}

VerificationReport verify_modified_st(const GridSpec& spec, RunContext& ctx) {
    require(spec.a, "a");
    require(spec.d, "d");
    require(spec.n, "n");
    const auto horizon = std::max<std::int64_t>(0, spec.n.max());

    struct PairInfo {
        std::int64_t a, d;
        std::optional<std::pair<ResidueClassSet, ResidueClassSet>> sets;
        PremiseResult premises;
        std::string error;
    };
    std::vector<PairInfo> pairs;
    std::vector<TableRequest> warm;
    for (auto a : spec.a.values())
        for (auto d : spec.d.values()) {
            PairInfo p{a, d, std::nullopt, {}, {}};
            try {
                p.sets = gen_kp_sets(a, d);
                const auto& [S, T] = *p.sets;
                p.premises = check_modified_st_premises(
                    a, S, T, std::max(S.count_up_to(horizon), T.count_up_to(horizon + a)) + 1);
                warm.push_back(rho_request(S, horizon));
                warm.push_back(rho_request(T, horizon + a));
            } catch (const std::exception& e) {
                p.sets.reset();
                p.error = e.what();
            }
            pairs.push_back(std::move(p));
        }
    ctx.store.warm(warm, ctx.jobs);

    struct Job {
        std::size_t pair;
        std::int64_t n;
    };
    std::vector<Job> jobs;
    for (std::size_t p = 0; p < pairs.size(); ++p)
        for (auto n : spec.n.values()) jobs.push_back({p, n});

    return run_cells("verify.modified-st", jobs.size(), ctx, [&](std::size_t i) {
        const auto& p = pairs[jobs[i].pair];
        const auto n = jobs[i].n;
        Cell c;
        c.params["a"] = p.a;
        c.params["d"] = p.d;
        c.params["n"] = n;
        if (!p.sets || n < 0) {
            c.status = CellStatus::skipped;
            c.note = p.sets ? std::string("rejected: n < 0") : "rejected: " + p.error;
            return c;
        }
        if (!p.premises) {
            c.status = CellStatus::out_of_hypothesis;
            c.note = "premise: " + p.premises.reason;
            if (!spec.force) return c;
        }
        const auto& [S, T] = *p.sets;
        const auto shifted = n + n_hat(p.a, n);
        const auto t = lookup(ctx, rho_request(T, horizon + p.a), shifted);
        const auto s = lookup(ctx, rho_request(S, horizon), n);
        const DeltaValue diff = DeltaValue(t) - s;
        c.value = diff.str();
        if (diff < 0) c.witness = "rho(T;" + std::to_string(shifted) + ")=" + str(t) + " rho(S;n)=" + str(s);
        if (p.premises) c.status = diff >= 0 ? CellStatus::holds : CellStatus::fails;
        return c;
    });
}

// ---------------------------------------------------------------------------
// General-a theorems

bool gen_in_hypothesis(std::int64_t a, std::int64_t d) { return a >= 1 && d >= 1 && ceil_div(d, a) >= 105; }

bool gen_kp_exempt(std::int64_t a, std::int64_t d, std::int64_t n) {
    return a >= 1 && (d + 3) % a == 0 && n == d + a + 3;
}

namespace {

VerificationReport verify_general(const GridSpec& spec, RunContext& ctx, QVariant variant) {
    require(spec.a, "a");
    require(spec.d, "d");
    require(spec.n, "n");
    const bool kp = variant == QVariant::minus;
    const auto horizon = std::max<std::int64_t>(0, spec.n.max());
    std::vector<TableRequest> warm;
    for (auto a : spec.a.values())
        for (auto d : spec.d.values()) {
            if (a < 1 || d < 1 || a >= d + 3) continue;
            warm.push_back(q_request(a, d, horizon));
            warm.push_back(rho_request(q_set(a, d, variant), horizon));
        }
    ctx.store.warm(warm, ctx.jobs);

    const auto cells = cross(spec.a, spec.d, spec.n);
    return run_cells(kp ? "verify.gen-kp" : "verify.gen-dkst", cells.size(), ctx, [&](std::size_t i) {
        const auto [a, d, n] = cells[i];
        Cell c;
        c.params["a"] = a;
        c.params["d"] = d;
        c.params["n"] = n;
        if (a < 1 || d < 1 || a >= d + 3 || n < 1) {
            c.status = CellStatus::skipped;
            c.note = "rejected: need a, d, n >= 1 and a < d+3";
            return c;
        }
        const bool in_hyp = gen_in_hypothesis(a, d);
        if (!in_hyp && !spec.force) {
            c.status = CellStatus::out_of_hypothesis;
            return c;
        }
        const auto q = lookup(ctx, q_request(a, d, horizon), n);
        const auto Q = lookup(ctx, rho_request(q_set(a, d, variant), horizon), n);
        const DeltaValue diff = DeltaValue(q) - Q;
        c.value = diff.str();
        if (diff < 0) c.witness = "q=" + str(q) + " Q=" + str(Q);
        if (!in_hyp) {
            c.status = CellStatus::out_of_hypothesis;
        } else if (kp && gen_kp_exempt(a, d, n)) {
            // The statement excludes exactly this n; a negative value here is not a failure.
            c.note = "exempt: n = d+a+3";
            c.status = diff >= 0 ? CellStatus::holds : CellStatus::out_of_hypothesis;
        } else {
            c.status = diff >= 0 ? CellStatus::holds : CellStatus::fails;
        }
        return c;
    });
}

}  // namespace

VerificationReport verify_gen_kp(const GridSpec& spec, RunContext& ctx) {
    return verify_general(spec, ctx, QVariant::minus);
}

VerificationReport verify_gen_dkst(const GridSpec& spec, RunContext& ctx) {
    return verify_general(spec, ctx, QVariant::minus_minus);
}

VerificationReport verify_gen_kp(std::int64_t a, std::int64_t d, std::int64_t n_max, RunContext& ctx) {
    GridSpec spec;
    spec.a = Axis::single(a);
    spec.d = Axis::single(d);
    spec.n = Axis::interval(1, n_max);
    return verify_gen_kp(spec, ctx);
}

VerificationReport verify_gen_dkst(std::int64_t a, std::int64_t d, std::int64_t n_max, RunContext& ctx) {
    GridSpec spec;
    spec.a = Axis::single(a);
    spec.d = Axis::single(d);
    spec.n = Axis::interval(1, n_max);
    return verify_gen_dkst(spec, ctx);
}

// ---------------------------------------------------------------------------
// Small-n anchors

std::vector<Count> largest_part_distribution(std::int64_t d, std::int64_t N, std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 1) throw std::invalid_argument("largest_part_distribution: invalid parameters");
    const auto S = s_set(d, N);
    std::vector<Count> dp(static_cast<std::size_t>(n) + 1);
    dp[0] = 1;
    std::vector<Count> out;
    for (std::int64_t i = 1; i <= k; ++i) {
        const auto part = S.element(i);
        for (auto m = part; m <= n; ++m)
            dp[static_cast<std::size_t>(m)] += dp[static_cast<std::size_t>(m - part)];
        out.push_back(part <= n ? dp[static_cast<std::size_t>(n - part)] : Count(0));
    }
    return out;
}

VerificationReport verify_smalln_anchors(std::int64_t d, std::int64_t N, RunContext& ctx) {
    GridSpec spec;
    spec.d = Axis::single(d);
    spec.N = Axis::single(N);
    return verify_smalln_anchors(spec, ctx);
}

VerificationReport verify_smalln_anchors(const GridSpec& spec, RunContext& ctx) {
    require(spec.d, "d");
    require(spec.N, "N");
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (auto N : spec.N.values())
        for (auto d : spec.d.values()) pairs.emplace_back(d, N);

    constexpr int kAnchors = 8;
    auto join = [](const std::vector<Count>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
        return s;
    };

    return run_cells("verify.anchors", pairs.size() * kAnchors, ctx, [&](std::size_t idx) {
        const auto [d, N] = pairs[idx / kAnchors];
        const int which = static_cast<int>(idx % kAnchors);
        Cell c;
        c.params["d"] = d;
        c.params["N"] = N;
        if (d - N + 3 < 3 || d - N < 1) {
            c.params["anchor"] = which;
            c.status = CellStatus::skipped;
            c.note = "rejected: need d - N >= 1";
            return c;
        }
        const bool in_hyp = N >= 2 && d >= std::max<std::int64_t>(63, 46 * N - 79);
        const auto S = s_set(d, N);
        const auto n1 = 2 * d - 2 * N + 4, n2 = 5 * d - 5 * N + 16, n3 = 7 * d + 13;
        bool ok = true;
        auto set_anchor = [&](const char* name, std::int64_t n) {
            c.params["anchor"] = name;
            c.params["n"] = n;
        };
        switch (which) {
            case 0: {
                set_anchor("Q=2", n1);
                const auto v = rho(S, n1);
                c.value = v.str();
                ok = v == 2;
                break;
            }
            case 1: {
                set_anchor("Q=29", n2);
                const auto v = rho(S, n2);
                c.value = v.str();
                ok = v == 29;
                break;
            }
            case 2: {
                set_anchor("largest-part=1,4,5,6,5,3,2,1,1,1", n2);
                const auto dist = largest_part_distribution(d, N, n2, 10);
                c.value = join(dist);
                ok = S.element(11) > n2;
                for (std::size_t i = 0; i < dist.size(); ++i) ok = ok && dist[i] == kAnchorDistribution5[i];
                break;
            }
            case 3: {
                set_anchor("Q<=110", n3);
                const auto v = rho(S, n3);
                c.value = v.str();
                ok = v <= 110;
                break;
            }
            case 4: {
                set_anchor("largest-part<=1,7,12,20,16,18,10,10,5,5,2,2,1,1", n3);
                const auto dist = largest_part_distribution(d, N, n3, 14);
                c.value = join(dist);
                ok = S.element(15) > n3;
                for (std::size_t i = 0; i < dist.size(); ++i) ok = ok && dist[i] <= kAnchorBound7[i];
                break;
            }
            default: {
                // The three inequalities the anchors feed: q(k1) >= Q(k2).
                static constexpr const char* names[] = {"case1", "case2", "case3"};
                const std::int64_t k1[] = {d + 2, 2 * d - 2 * N + 5, 5 * d - 5 * N + 17};
                const std::int64_t k2[] = {n1, n2, n3};
                const int j = which - 5;
                c.params["anchor"] = names[j];
                c.params["n"] = k1[j];
                c.params["m"] = k2[j];
                const auto q = q_count(1, d, k1[j]);
                const auto Q = rho(S, k2[j]);
                c.value = (DeltaValue(q) - Q).str();
                ok = q >= Q;
                if (!ok) c.witness = "q(" + std::to_string(k1[j]) + ")=" + q.str() + " Q(" + std::to_string(k2[j]) + ")=" + Q.str();
                break;
            }
        }
        if (!in_hyp) {
            c.status = CellStatus::out_of_hypothesis;
            if (!spec.force) {
                c.value.reset();
                c.witness.reset();
            }
        } else {
            c.status = ok ? CellStatus::holds : CellStatus::fails;
            if (!ok && !c.witness) c.witness = "observed " + *c.value;
        }
        return c;
    });
}

// ---------------------------------------------------------------------------
// x_i - y_i table

bool xy_in_hypothesis(std::int64_t d, std::int64_t N) {
    return N >= 2 && d >= std::max<std::int64_t>(31, 6 * N - 17);
}

std::array<std::int64_t, 10> xy_expected_differences(std::int64_t d, std::int64_t N) {
    return {d - 2 * N + 1,     d - 2 * N - 1, 2 * d - 3 * N - 8, d - 3 * N + 9,      d - 4 * N + 9,
            d - 4 * N + 9,     2 * d - 5 * N + 6, 2 * d - 5 * N, 2 * d - 6 * N + 16, d - 6 * N + 17};
}

namespace {

struct XyOutcome {
    bool ok = true;
    std::int64_t minimum = 0;
    std::string witness;
};

XyOutcome evaluate_xy(std::int64_t d, std::int64_t N) {
    XyOutcome out;
    auto fail = [&](std::string w) {
        if (out.ok) out.witness = std::move(w);
        out.ok = false;
    };
    auto diff = [&](std::int64_t i) { return x_closed(d, N, i) - y_closed(d, i); };

    const auto expected = xy_expected_differences(d, N);
    for (std::int64_t i = 3; i <= 12; ++i)
        if (diff(i) != expected[static_cast<std::size_t>(i - 3)])
            fail("x_" + std::to_string(i) + "-y_" + std::to_string(i) + " = " + std::to_string(diff(i)) +
                 ", closed form gives " + std::to_string(expected[static_cast<std::size_t>(i - 3)]));

    const auto S = s_set(d, N);
    const auto T = t_set(5, d);
    for (std::int64_t i = 1; i <= 60; ++i) {
        if (x_closed(d, N, i) != S.element(i)) fail("x_closed disagrees with enumeration at i=" + std::to_string(i));
        if (y_closed(d, i) != T.element(i)) fail("y_closed disagrees with enumeration at i=" + std::to_string(i));
    }
    for (std::int64_t i = 3; i <= 50; ++i)
        if (diff(i + 10) != diff(i) + (d - 5 * N + 15)) fail("period relation fails at i=" + std::to_string(i));

    out.minimum = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t i = 3; i <= 200; ++i) out.minimum = std::min(out.minimum, diff(i));
    const auto claimed = std::min(d - 2 * N - 1, d - 6 * N + 17);
    if (out.minimum != claimed)
        fail("min over i>=3 is " + std::to_string(out.minimum) + ", expected " + std::to_string(claimed));
    return out;
}

}  // namespace

bool check_xy_differences(std::int64_t d, std::int64_t N) {
    if (!xy_in_hypothesis(d, N))
        throw std::invalid_argument("check_xy_differences: need N >= 2 and d >= max{31, 6N-17}");
    return evaluate_xy(d, N).ok;
}

VerificationReport verify_xy_differences(const GridSpec& spec, RunContext& ctx) {
    require(spec.d, "d");
    require(spec.N, "N");
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (auto N : spec.N.values())
        for (auto d : spec.d.values()) pairs.emplace_back(d, N);
    return run_cells("verify.xy-diff", pairs.size(), ctx, [&](std::size_t i) {
        const auto [d, N] = pairs[i];
        Cell c;
        c.params["d"] = d;
        c.params["N"] = N;
        if (!xy_in_hypothesis(d, N)) {
            c.status = CellStatus::out_of_hypothesis;
            return c;
        }
        const auto r = evaluate_xy(d, N);
        c.value = std::to_string(r.minimum);
        c.note = N <= 4 ? "min = d-2N-1" : "min = d-6N+17";
        if (!r.ok) c.witness = r.witness;
        c.status = r.ok ? CellStatus::holds : CellStatus::fails;
        return c;
    });
}

// ---------------------------------------------------------------------------
// Injection cells

VerificationReport verify_injection_range(const GridSpec& spec, RunContext& ctx) {
    require(spec.d, "d");
    require(spec.N, "N");
    require(spec.n, "n");
    for (auto n : spec.n.values())
        if (n < 0 || n > spec.enumeration_horizon)
            throw std::out_of_range("inject: n=" + std::to_string(n) + " outside [0, " +
                                    std::to_string(spec.enumeration_horizon) + "]");
    const auto cells = cross(spec.N, spec.d, spec.n);
    return run_cells("inject", cells.size(), ctx, [&](std::size_t i) {
        const auto [N, d, n] = cells[i];
        Cell c;
        c.params["d"] = d;
        c.params["N"] = N;
        c.params["n"] = n;
        const auto r = verify_injection(d, N, n, spec.force, spec.enumeration_horizon);
        if (!r.evaluated) {
            c.status = CellStatus::out_of_hypothesis;
            c.note = *r.not_evaluated_reason;
            return c;
        }
        c.value = std::to_string(r.size_S);
        std::ostringstream note;
        note << "S1=" << r.size_S1 << " S2=" << r.size_S2 << (r.size_S2 == 0 ? " (empty)" : "")
             << " beta_pieces=" << r.beta_pieces << " images=" << r.distinct_images << " rho_T=" << r.rho_T
             << " rho_S=" << r.rho_S;
        if (!r.in_hypothesis) note << " [outside hypotheses]";
        c.note = note.str();
        if (!r.all_pass()) {
            std::string w;
            for (const auto& s : r.witnesses) w += (w.empty() ? "" : "; ") + s;
            c.witness = w;
        }
        c.status = !r.in_hypothesis ? CellStatus::out_of_hypothesis
                                    : (r.all_pass() ? CellStatus::holds : CellStatus::fails);
        return c;
    });
}

// ---------------------------------------------------------------------------
// Counterexample search

SearchKind parse_search_kind(std::string_view name) {
    std::string s(name);
    std::replace(s.begin(), s.end(), '-', '_');
    if (s == "delta") return SearchKind::delta;
    if (s == "delta_m") return SearchKind::delta_minus;
    if (s == "delta_mm") return SearchKind::delta_minus_minus;
    if (s == "shift") return SearchKind::shift;
    throw std::invalid_argument("unknown search kind '" + std::string(name) + "'");
}

std::string_view to_string(SearchKind kind) noexcept {
    switch (kind) {
        case SearchKind::delta: return "delta";
        case SearchKind::delta_minus: return "delta-m";
        case SearchKind::delta_minus_minus: return "delta-mm";
        case SearchKind::shift: return "shift";
    }
    return "delta";
}

VerificationReport search_counterexamples(SearchKind kind, const GridSpec& spec, RunContext& ctx) {
    const bool shift = kind == SearchKind::shift;
    const Axis& outer = shift ? spec.N : spec.a;
    require(outer, shift ? "N" : "a");
    require(spec.d, "d");
    require(spec.n, "n");
    const auto horizon = std::max<std::int64_t>(0, spec.n.max());
    const auto variant = kind == SearchKind::delta         ? QVariant::plain
                         : kind == SearchKind::delta_minus ? QVariant::minus
                                                           : QVariant::minus_minus;

    struct Pair {
        std::int64_t outer, d;
        std::optional<TableRequest> q, Q;
    };
    std::vector<Pair> pairs;
    std::vector<TableRequest> warm;
    std::int64_t rejected = 0;
    for (auto o : outer.values())
        for (auto d : spec.d.values()) {
            Pair p{o, d, std::nullopt, std::nullopt};
            try {
                p.q = q_request(shift ? 1 : o, d, horizon);
                if (d < 1 || (!shift && o < 1)) throw std::invalid_argument("a, d >= 1");
                p.Q = rho_request(shift ? s_set(d, o) : q_set(o, d, variant), horizon);
                warm.push_back(*p.q);
                warm.push_back(*p.Q);
            } catch (const std::invalid_argument&) {
                p.q.reset();
                p.Q.reset();
                ++rejected;
            }
            pairs.push_back(std::move(p));
        }
    ctx.store.warm(warm, ctx.jobs);

    // One task per (outer, d) pair; each yields its violations in n order.
    const auto per_pair = parallel_map(pairs.size(), ctx.jobs, [&](std::size_t i) {
        std::vector<Cell> found;
        const auto& p = pairs[i];
        if (!p.q) return found;
        const auto qt = ctx.store.get(*p.q);
        const auto Qt = ctx.store.get(*p.Q);
        for (auto n : spec.n.values()) {
            if (n < 0) continue;
            const DeltaValue diff = DeltaValue(qt->at(n)) - Qt->at(n);
            if (diff >= 0) continue;
            Cell c;
            c.params[shift ? "N" : "a"] = p.outer;
            c.params["d"] = p.d;
            c.params["n"] = n;
            c.status = CellStatus::fails;
            c.value = diff.str();
            c.witness = "q=" + qt->at(n).str() + " Q=" + Qt->at(n).str();
            found.push_back(std::move(c));
        }
        return found;
    });

    VerificationReport rep;
    rep.cmd = "search." + std::string(to_string(kind));
    rep.informational = true;
    for (auto& v : per_pair)
        for (auto& c : v) rep.cells.push_back(std::move(c));
    std::int64_t scanned = 0;
    for (const auto& p : pairs)
        if (p.q) scanned += static_cast<std::int64_t>(spec.n.values().size());
    rep.extra["scanned"] = scanned;
    rep.extra["violations"] = static_cast<std::int64_t>(rep.cells.size());
    rep.extra["rejected_pairs"] = rejected;
    return rep;
}

}  // namespace alder
