#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alder/counting.hpp"
#include "alder/partset.hpp"

namespace alder {

/// A partition stored as multiplicities over the indexed elements of a part
/// set. mult[i-1] is the multiplicity of element(i); trailing zeros trimmed.
class IndexedPartition {
public:
    IndexedPartition(ResidueClassSet base, std::vector<std::int64_t> mult);

    const ResidueClassSet& base() const noexcept { return base_; }
    const std::vector<std::int64_t>& multiplicities() const noexcept { return mult_; }
    std::int64_t mult(std::int64_t i) const noexcept;
    std::int64_t weight() const noexcept { return weight_; }
    std::int64_t num_indices() const noexcept { return static_cast<std::int64_t>(mult_.size()); }

    /// Parts in decreasing order with exponents, e.g. "65^1 1^61"; "0" if empty.
    std::string to_string() const;

    friend bool operator==(const IndexedPartition& a, const IndexedPartition& b) {
        return a.base_ == b.base_ && a.mult_ == b.mult_;
    }

private:
    ResidueClassSet base_;
    std::vector<std::int64_t> mult_;
    std::int64_t weight_ = 0;
};

inline constexpr std::int64_t kDefaultEnumerationHorizon = 2000;

/// All partitions of n with parts in S_d^N, depth-first with larger indices
/// decided first and higher multiplicities tried first.
std::vector<IndexedPartition> enumerate_S(std::int64_t d, std::int64_t N, std::int64_t n,
                                          std::int64_t horizon = kDefaultEnumerationHorizon);

enum class PieceClass { S1, S2 };

struct PartitionStats {
    std::int64_t alpha = 0;
    std::int64_t beta = 0;
    int epsilon = 0;
    PieceClass cls = PieceClass::S1;
};

/// Throws std::invalid_argument when a used index i >= 3 has x_i - y_i < 0.
PartitionStats stats(const IndexedPartition& lambda, std::int64_t d, std::int64_t N);

/// Result of applying one branch of the map. `mult` is the raw image vector
/// over T_{5,d} (entries may be negative, in which case `violation` is set).
struct MapImage {
    std::vector<std::int64_t> mult;
    std::int64_t weight = 0;
    std::optional<std::string> violation;

    bool ok() const noexcept { return !violation; }
    /// Throws std::logic_error if !ok().
    IndexedPartition partition(std::int64_t d) const;
};

MapImage phi1(const IndexedPartition& lambda, std::int64_t d, std::int64_t N);
MapImage phi2(const IndexedPartition& lambda, std::int64_t d, std::int64_t N);
MapImage phi(const IndexedPartition& lambda, std::int64_t d, std::int64_t N);

/// d >= max{63, 46N-79}, N >= 2, n >= 7d+14.
bool injection_in_hypothesis(std::int64_t d, std::int64_t N, std::int64_t n);

struct InjectionReport {
    std::int64_t d = 0, N = 0, n = 0;
    bool in_hypothesis = false;
    bool evaluated = false;
    std::optional<std::string> not_evaluated_reason;

    std::int64_t size_S = 0;
    std::int64_t size_S1 = 0;
    std::int64_t size_S2 = 0;
    std::int64_t beta_pieces = 0;
    std::int64_t distinct_images = 0;
    Count rho_S = 0;
    Count rho_T = 0;

    bool classification_ok = true;   // (a)
    bool images_valid = true;        // (b)
    bool injective = true;           // (c)
    bool pieces_separated = true;    // distinct beta => distinct q_2
    bool count_inequality = true;    // (d)
    bool p2_at_least_8 = true;       // (e)

    std::vector<std::string> witnesses;

    bool all_pass() const noexcept {
        return classification_ok && images_valid && injective && pieces_separated &&
               count_inequality && p2_at_least_8;
    }
};

/// Runs every check over the full enumeration of S^N. Cells outside the
/// hypotheses are only evaluated when `force` is set, and are labelled either
/// way. Never throws for a failed check; failures become witnesses.
InjectionReport verify_injection(std::int64_t d, std::int64_t N, std::int64_t n, bool force = false,
                                 std::int64_t horizon = kDefaultEnumerationHorizon);

}  // namespace alder
