#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace alder {

/// A part set of the form {x >= 1 : x mod m in R} \ E.
///
/// Members are enumerated in increasing order with 1-based indices. The
/// residues are stored as offsets in [1, m] so that the k-th block of the
/// enumeration is simply k*m + offset.
class ResidueClassSet {
public:
    /// Throws std::invalid_argument when m < 1, R is empty, a residue lies
    /// outside [0, m), or an exclusion is not a member of the unexcluded set.
    ResidueClassSet(std::int64_t modulus, std::vector<std::int64_t> residues,
                    std::vector<std::int64_t> exclusions = {});

    std::int64_t modulus() const noexcept { return modulus_; }
    const std::vector<std::int64_t>& residues() const noexcept { return residues_; }
    const std::vector<std::int64_t>& exclusions() const noexcept { return exclusions_; }

    bool contains(std::int64_t x) const noexcept;

    /// i-th smallest member, i >= 1.
    std::int64_t element(std::int64_t i) const;

    /// All members <= bound, increasing.
    std::vector<std::int64_t> members_up_to(std::int64_t bound) const;

    /// Number of members <= bound.
    std::int64_t count_up_to(std::int64_t bound) const;

    /// Canonical textual description, e.g. "m=64;r=1,63;e=63".
    std::string key() const;

    friend bool operator==(const ResidueClassSet&, const ResidueClassSet&) = default;

private:
    // Index of x in the enumeration that ignores exclusions.
    std::int64_t raw_rank(std::int64_t x) const noexcept;
    std::int64_t raw_element(std::int64_t i) const noexcept;

    std::int64_t modulus_;
    std::vector<std::int64_t> residues_;   // sorted, unique, in [0, m)
    std::vector<std::int64_t> exclusions_; // sorted, unique
    std::vector<std::int64_t> offsets_;    // sorted, in [1, m]
};

/// Largest r with 2^r - 1 <= d.
int r_of(std::int64_t d);

/// T_{s,d}: residues 1, d+2, d+4, ..., d+2^(s-1) modulo 2d.
/// Rejects (std::invalid_argument) when d + 2^(s-1) >= 2d, which is exactly
/// when the residue list would collide or wrap.
ResidueClassSet t_set(int s, std::int64_t d);

/// S_d^N: x = +-1 (mod d-N+3), without the single value d-N+2.
ResidueClassSet s_set(std::int64_t d, std::int64_t N);

/// The Q-style set: x = +-a (mod d+3) minus the listed exclusion pattern.
enum class QVariant { plain, minus, minus_minus };
ResidueClassSet q_set(std::int64_t a, std::int64_t d, QVariant variant);

/// Closed form of the i-th element of S_d^N.
std::int64_t x_closed(std::int64_t d, std::int64_t N, std::int64_t i);

/// Closed form of the i-th element of T_{5,d}; requires r_of(d) >= 5.
std::int64_t y_closed(std::int64_t d, std::int64_t i);

}  // namespace alder
