#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alder/counting.hpp"
#include "alder/injection.hpp"
#include "alder/partset.hpp"
#include "alder/report.hpp"
#include "alder/table_store.hpp"

namespace alder {

/// An inclusive integer interval or explicit list, in the order given.
class Axis {
public:
    Axis() = default;
    explicit Axis(std::vector<std::int64_t> values);
    static Axis single(std::int64_t v) { return Axis({v}); }
    static Axis interval(std::int64_t lo, std::int64_t hi);
    /// "7", "1..20", "2,3,5", "1..3,9". Throws std::invalid_argument.
    static Axis parse(std::string_view text);

    const std::vector<std::int64_t>& values() const noexcept { return values_; }
    bool empty() const noexcept { return values_.empty(); }
    std::int64_t min() const;
    std::int64_t max() const;

private:
    std::vector<std::int64_t> values_;
};

struct GridSpec {
    Axis a, d, N, n;
    /// Evaluate cells outside a theorem's hypotheses (still labelled).
    bool force = false;
    std::int64_t enumeration_horizon = kDefaultEnumerationHorizon;
};

struct RunContext {
    TableStore& store;
    int jobs = 1;
};

inline constexpr std::int64_t kDefaultHorizonA1 = 2000;
inline constexpr std::int64_t kDefaultHorizonA2 = 1200;

// Shift inequality q_d^(1)(n) >= Q_{d-N}^(1,-)(n).

/// d >= max{63, 46N-79}, N >= 2, n >= d+2.
bool shift_in_hypothesis(std::int64_t d, std::int64_t N, std::int64_t n);
/// q_count(1,d,n) - bigQ_minus(1,d-N,n). Rejects d-N+3 < 3.
DeltaValue check_shift(std::int64_t d, std::int64_t N, std::int64_t n);
/// Cells over d x N x n.
VerificationReport verify_shift_range(const GridSpec& spec, RunContext& ctx);
/// The N = 4 specialisation (d >= 105, n >= d+2). An empty N axis means 4;
/// any other N is rejected.
VerificationReport verify_littlelemon(const GridSpec& spec, RunContext& ctx);

// Comparison of part sets.

struct PremiseResult {
    bool holds = true;
    std::int64_t failing_index = 0;  // 0 when holds
    std::string reason;
    explicit operator bool() const noexcept { return holds; }
};

/// y_1 = 1 and element(S,i) >= element(T,i) for i <= i_max.
PremiseResult check_andrews_premises(const ResidueClassSet& S, const ResidueClassSet& T, std::int64_t i_max);
/// Cells n = 0..n_max asserting rho(T,n) >= rho(S,n); cells are labelled
/// out-of-hypothesis when the premises fail.
VerificationReport check_andrews(const ResidueClassSet& S, const ResidueClassSet& T, std::int64_t n_max,
                                 RunContext& ctx);

/// rho(T_{a,d};n) <= rho(T_{b,d};n) for all 1 <= a <= b <= r_of(d), n <= n_max.
/// One cell per (d, a, b); value is the minimum difference over n.
VerificationReport verify_t_monotone(const Axis& d, std::int64_t n_max, RunContext& ctx);

// Reductions used for general a.

/// q_d^(a)(n) >= q_{ceil(d/a)}^(1)(ceil(n/a)). Meaningful for n >= d+2a.
bool check_ceiling(std::int64_t a, std::int64_t d, std::int64_t n);
VerificationReport verify_ceiling(const GridSpec& spec, RunContext& ctx);

/// Q_d^(a,-)(a n) == Q_{(d+3)/a-3}^(1,-)(n). Rejects a not dividing d+3.
bool check_a_to_1(std::int64_t a, std::int64_t d, std::int64_t n);
VerificationReport verify_a_to_1(const GridSpec& spec, RunContext& ctx);

/// Least nonnegative integer with a | (n + n_hat).
std::int64_t n_hat(std::int64_t a, std::int64_t n);

/// T(1) = a, a | T(i), S(i) >= T(i) for i <= i_max.
PremiseResult check_modified_st_premises(std::int64_t a, const ResidueClassSet& S, const ResidueClassSet& T,
                                         std::int64_t i_max);
/// rho(T; n + n_hat(a,n)) >= rho(S; n). Throws std::invalid_argument when
/// the premises fail on the indices relevant to n.
bool check_modified_st(std::int64_t a, const ResidueClassSet& S, const ResidueClassSet& T, std::int64_t n);

/// The pair used for general a: S = {+-a mod d+3} \ {d+3-a},
/// T = {+-a mod d+dhat-a} \ {d+dhat-2a} with dhat = (-d) mod a.
std::pair<ResidueClassSet, ResidueClassSet> gen_kp_sets(std::int64_t a, std::int64_t d);
VerificationReport verify_modified_st(const GridSpec& spec, RunContext& ctx);

// General-a theorems.

/// ceil(d/a) >= 105.
bool gen_in_hypothesis(std::int64_t a, std::int64_t d);
/// d = -3 (mod a) and n = d+a+3.
bool gen_kp_exempt(std::int64_t a, std::int64_t d, std::int64_t n);
VerificationReport verify_gen_kp(std::int64_t a, std::int64_t d, std::int64_t n_max, RunContext& ctx);
VerificationReport verify_gen_dkst(std::int64_t a, std::int64_t d, std::int64_t n_max, RunContext& ctx);
/// Grid versions over spec.a x spec.d with n in spec.n.
VerificationReport verify_gen_kp(const GridSpec& spec, RunContext& ctx);
VerificationReport verify_gen_dkst(const GridSpec& spec, RunContext& ctx);

// Small-n anchors.

inline constexpr std::array<std::int64_t, 10> kAnchorDistribution5{1, 4, 5, 6, 5, 3, 2, 1, 1, 1};
inline constexpr std::array<std::int64_t, 14> kAnchorBound7{1, 7, 12, 20, 16, 18, 10, 10, 5, 5, 2, 2, 1, 1};

/// Number of partitions of n over S_d^N whose largest part is x_i, i = 1..k.
std::vector<Count> largest_part_distribution(std::int64_t d, std::int64_t N, std::int64_t n, std::int64_t k);

VerificationReport verify_smalln_anchors(std::int64_t d, std::int64_t N, RunContext& ctx);
VerificationReport verify_smalln_anchors(const GridSpec& spec, RunContext& ctx);

// x_i - y_i table.

/// d >= max{31, 6N-17}, N >= 2.
bool xy_in_hypothesis(std::int64_t d, std::int64_t N);
/// The ten closed-form differences for i = 3..12.
std::array<std::int64_t, 10> xy_expected_differences(std::int64_t d, std::int64_t N);
/// Rejects out-of-hypothesis parameters with std::invalid_argument.
bool check_xy_differences(std::int64_t d, std::int64_t N);
VerificationReport verify_xy_differences(const GridSpec& spec, RunContext& ctx);

// Injection cells.

VerificationReport verify_injection_range(const GridSpec& spec, RunContext& ctx);

// Counterexample search.

enum class SearchKind { delta, delta_minus, delta_minus_minus, shift };
/// "delta", "delta_m"/"delta-m", "delta_mm"/"delta-mm", "shift".
SearchKind parse_search_kind(std::string_view name);
std::string_view to_string(SearchKind kind) noexcept;

/// Lists every cell with a negative value, ordered by (a or N, d, n). Search
/// ignores hypotheses; it is informational.
VerificationReport search_counterexamples(SearchKind kind, const GridSpec& spec, RunContext& ctx);

}  // namespace alder
