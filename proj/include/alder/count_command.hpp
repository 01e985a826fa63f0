#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "alder/inequalities.hpp"

namespace alder {

enum class CountKind { q, Q, Qm, Qmm, rho, g, l, delta, delta_m, delta_mm };

/// Accepts the names above; '-' and '_' are interchangeable.
CountKind parse_count_kind(std::string_view name);
std::string_view to_string(CountKind kind) noexcept;

/// Part set for kind rho: "T" (axes s, d), "S" (axes d, N) or "custom".
struct CountSpec {
    CountKind kind = CountKind::q;
    Axis a, d, N, n, s;
    std::string set = "T";
    std::int64_t modulus = 0;
    std::vector<std::int64_t> residues, exclusions;
};

/// One "ok" cell per parameter point, n innermost. Counts are warmed per
/// table so a range costs one DP.
VerificationReport run_count(const CountSpec& spec, RunContext& ctx);

/// Single value as a decimal string; kind rho counts over S_d^N.
std::string count_value(CountKind kind, std::int64_t a, std::int64_t d, std::int64_t N, std::int64_t n);

}  // namespace alder
