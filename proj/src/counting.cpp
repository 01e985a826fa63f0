#include "alder/counting.hpp"

#include <stdexcept>

namespace alder {

namespace {

void check_horizon(std::int64_t horizon) {
    if (horizon < 0) throw std::invalid_argument("count horizon must be >= 0");
}

std::int64_t floor_div(std::int64_t x, std::int64_t y) {
    auto q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return q;
}

// Counts decreasing part lists with every part >= min_part, consecutive gaps
// >= gap, summing to `remaining`, largest part <= max_part.
void brute_gap(std::int64_t remaining, std::int64_t max_part, std::int64_t min_part,
               std::int64_t gap, Count& total) {
    if (remaining == 0) {
        ++total;
        return;
    }
    for (auto part = std::min(max_part, remaining); part >= min_part; --part)
        brute_gap(remaining - part, part - gap, min_part, gap, total);
}

}  // namespace

const Count& CountTable::at(std::int64_t n) const {
    if (n < 0 || n > horizon)
        throw std::out_of_range("count table " + key + ": n=" + std::to_string(n) +
                                " outside [0, " + std::to_string(horizon) + "]");
    return values[static_cast<std::size_t>(n)];
}

std::string rho_key(const ResidueClassSet& set) { return "rho[" + set.key() + "]"; }
std::string q_key(std::int64_t a, std::int64_t d) {
    return "q[a=" + std::to_string(a) + ";d=" + std::to_string(d) + "]";
}
std::string g_key(std::int64_t d) { return "g[d=" + std::to_string(d) + "]"; }

CountTable rho_table(const ResidueClassSet& set, std::int64_t horizon) {
    check_horizon(horizon);
    CountTable t{rho_key(set), horizon, std::vector<Count>(static_cast<std::size_t>(horizon) + 1)};
    auto& v = t.values;
    v[0] = 1;
    for (auto part : set.members_up_to(horizon)) {
        for (auto m = part; m <= horizon; ++m)
            v[static_cast<std::size_t>(m)] += v[static_cast<std::size_t>(m - part)];
    }
    return t;
}

CountTable q_table(std::int64_t a, std::int64_t d, std::int64_t horizon) {
    if (a < 1 || d < 1) throw std::invalid_argument("q_count: a and d must be >= 1");
    check_horizon(horizon);
    const auto size = static_cast<std::size_t>(horizon) + 1;
    CountTable t{q_key(a, d), horizon, std::vector<Count>(size)};
    // bounded[m] = number of partitions of m into parts <= k (equivalently at
    // most k parts), updated in place as k grows.
    std::vector<Count> bounded(size);
    bounded[0] = 1;
    for (std::int64_t k = 0;; ++k) {
        if (k > 0) {
            for (auto m = k; m <= horizon; ++m)
                bounded[static_cast<std::size_t>(m)] += bounded[static_cast<std::size_t>(m - k)];
        }
        const auto staircase = a * k + d * k * (k - 1) / 2;
        if (staircase > horizon) break;
        for (auto n = staircase; n <= horizon; ++n)
            t.values[static_cast<std::size_t>(n)] += bounded[static_cast<std::size_t>(n - staircase)];
    }
    return t;
}

CountTable g_table(std::int64_t d, std::int64_t horizon) {
    check_horizon(horizon);
    if (d < 1) throw std::invalid_argument("g_script: d must be >= 1");
    const int r = r_of(d);
    if (r < 2) throw std::invalid_argument("g_script: requires r_of(d) >= 2 (d >= 3)");
    auto t = rho_table(t_set(r - 1, d), horizon);
    t.key = g_key(d);
    const ResidueClassSet distinct(2 * d, {(d + (std::int64_t{1} << (r - 1))) % (2 * d)});
    for (auto part : distinct.members_up_to(horizon)) {
        for (auto m = horizon; m >= part; --m)
            t.values[static_cast<std::size_t>(m)] += t.values[static_cast<std::size_t>(m - part)];
    }
    return t;
}

Count rho(const ResidueClassSet& set, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("rho: n must be >= 0");
    return rho_table(set, n).values.back();
}

Count q_count(std::int64_t a, std::int64_t d, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("q_count: n must be >= 0");
    return q_table(a, d, n).values.back();
}

Count q_brute(std::int64_t a, std::int64_t d, std::int64_t n, std::int64_t limit) {
    if (a < 1 || d < 1 || n < 0) throw std::invalid_argument("q_brute: invalid parameters");
    if (n > limit)
        throw std::out_of_range("q_brute: n=" + std::to_string(n) + " exceeds oracle bound " +
                                std::to_string(limit));
    Count total = 0;
    brute_gap(n, n, a, d, total);
    return total;
}

Count big_q(std::int64_t a, std::int64_t d, std::int64_t n) {
    return rho(q_set(a, d, QVariant::plain), n);
}
Count big_q_minus(std::int64_t a, std::int64_t d, std::int64_t n) {
    return rho(q_set(a, d, QVariant::minus), n);
}
Count big_q_minus_minus(std::int64_t a, std::int64_t d, std::int64_t n) {
    return rho(q_set(a, d, QVariant::minus_minus), n);
}

DeltaValue delta(std::int64_t a, std::int64_t d, std::int64_t n) {
    return DeltaValue(q_count(a, d, n)) - big_q(a, d, n);
}
DeltaValue delta_minus(std::int64_t a, std::int64_t d, std::int64_t n) {
    return DeltaValue(q_count(a, d, n)) - big_q_minus(a, d, n);
}
DeltaValue delta_minus_minus(std::int64_t a, std::int64_t d, std::int64_t n) {
    return DeltaValue(q_count(a, d, n)) - big_q_minus_minus(a, d, n);
}

Count g_script(std::int64_t d, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("g_script: n must be >= 0");
    return g_table(d, n).values.back();
}

Count l_script(std::int64_t d, std::int64_t n) {
    if (d < 1) throw std::invalid_argument("l_script: d must be >= 1");
    return rho(t_set(r_of(d), d), n);
}

Count q_lower_bound(std::int64_t d, std::int64_t n) {
    if (d < 1 || n < 1) throw std::invalid_argument("q_lower_bound: d and n must be >= 1");
    return Count(std::max<std::int64_t>(1, floor_div(n - d, 2) + 1));
}

std::vector<std::int64_t> decreasing_points(const CountTable& table) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = 1; n <= table.horizon; ++n)
        if (table.at(n) < table.at(n - 1)) out.push_back(n);
    return out;
}

}  // namespace alder
