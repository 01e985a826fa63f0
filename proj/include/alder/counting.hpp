#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "alder/partset.hpp"

namespace alder {

/// Exact partition count. Always >= 0.
using Count = boost::multiprecision::cpp_int;
/// Exact difference of two counts.
using DeltaValue = boost::multiprecision::cpp_int;

/// Dense table of counts for n = 0..horizon of a single counting function.
/// Entry 0 is always 1.
struct CountTable {
    std::string key;
    std::int64_t horizon = 0;
    std::vector<Count> values;

    const Count& at(std::int64_t n) const;
};

// Table builders. Each builds values for 0..horizon from the description
// alone, so a key fully determines the table.

/// rho(A; n): coin-change DP, one pass per part value <= horizon.
CountTable rho_table(const ResidueClassSet& set, std::int64_t horizon);

/// q_d^(a)(n) via the staircase bijection: partitions into exactly k parts
/// with min >= a and gaps >= d correspond to partitions of
/// n - a*k - d*k(k-1)/2 into at most k parts.
CountTable q_table(std::int64_t a, std::int64_t d, std::int64_t horizon);

/// Distinct parts = d + 2^(r-1) (mod 2d) convolved with unrestricted parts
/// from T_{r-1,d}.
CountTable g_table(std::int64_t d, std::int64_t horizon);

std::string rho_key(const ResidueClassSet& set);
std::string q_key(std::int64_t a, std::int64_t d);
std::string g_key(std::int64_t d);

// Point queries.

Count rho(const ResidueClassSet& set, std::int64_t n);
Count q_count(std::int64_t a, std::int64_t d, std::int64_t n);

inline constexpr std::int64_t kDefaultBruteLimit = 60;

/// Exhaustive enumeration of decreasing part lists; reference for q_count.
/// Throws std::out_of_range when n exceeds `limit`.
Count q_brute(std::int64_t a, std::int64_t d, std::int64_t n,
              std::int64_t limit = kDefaultBruteLimit);

Count big_q(std::int64_t a, std::int64_t d, std::int64_t n);
Count big_q_minus(std::int64_t a, std::int64_t d, std::int64_t n);
Count big_q_minus_minus(std::int64_t a, std::int64_t d, std::int64_t n);

DeltaValue delta(std::int64_t a, std::int64_t d, std::int64_t n);
DeltaValue delta_minus(std::int64_t a, std::int64_t d, std::int64_t n);
DeltaValue delta_minus_minus(std::int64_t a, std::int64_t d, std::int64_t n);

Count g_script(std::int64_t d, std::int64_t n);
Count l_script(std::int64_t d, std::int64_t n);

/// max{1, floor((n-d)/2) + 1}.
Count q_lower_bound(std::int64_t d, std::int64_t n);

/// Indices n in [1, horizon] where table[n] < table[n-1].
std::vector<std::int64_t> decreasing_points(const CountTable& table);

}  // namespace alder
