#include "alder/partset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace alder {

namespace {

void sort_unique(std::vector<std::int64_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string join(const std::vector<std::int64_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

}  // namespace

ResidueClassSet::ResidueClassSet(std::int64_t modulus, std::vector<std::int64_t> residues,
                                 std::vector<std::int64_t> exclusions)
    : modulus_(modulus), residues_(std::move(residues)), exclusions_(std::move(exclusions)) {
    if (modulus_ < 1) throw std::invalid_argument("residue class set: modulus must be >= 1");
    if (residues_.empty()) throw std::invalid_argument("residue class set: empty residue list");
    sort_unique(residues_);
    sort_unique(exclusions_);
    for (auto r : residues_) {
        if (r < 0 || r >= modulus_)
            throw std::invalid_argument("residue class set: residue " + std::to_string(r) +
                                        " outside [0, " + std::to_string(modulus_) + ")");
        offsets_.push_back(r == 0 ? modulus_ : r);
    }
    std::sort(offsets_.begin(), offsets_.end());
    for (auto e : exclusions_) {
        if (e < 1 || !std::binary_search(residues_.begin(), residues_.end(), e % modulus_))
            throw std::invalid_argument("residue class set: exclusion " + std::to_string(e) +
                                        " is not a member");
    }
}

bool ResidueClassSet::contains(std::int64_t x) const noexcept {
    if (x < 1) return false;
    if (!std::binary_search(residues_.begin(), residues_.end(), x % modulus_)) return false;
    return !std::binary_search(exclusions_.begin(), exclusions_.end(), x);
}

std::int64_t ResidueClassSet::raw_rank(std::int64_t x) const noexcept {
    const auto k = (x - 1) / modulus_;
    const auto o = x - k * modulus_;
    const auto pos = std::lower_bound(offsets_.begin(), offsets_.end(), o) - offsets_.begin();
    return k * static_cast<std::int64_t>(offsets_.size()) + pos + 1;
}

std::int64_t ResidueClassSet::raw_element(std::int64_t i) const noexcept {
    const auto width = static_cast<std::int64_t>(offsets_.size());
    return (i - 1) / width * modulus_ + offsets_[static_cast<std::size_t>((i - 1) % width)];
}

std::int64_t ResidueClassSet::element(std::int64_t i) const {
    if (i < 1) throw std::invalid_argument("element index must be >= 1");
    auto idx = i;
    for (auto e : exclusions_) {
        if (raw_rank(e) <= idx)
            ++idx;
        else
            break;
    }
    return raw_element(idx);
}

std::int64_t ResidueClassSet::count_up_to(std::int64_t bound) const {
    if (bound < 1) return 0;
    const auto blocks = bound / modulus_;
    const auto rem = bound % modulus_;
    auto count = blocks * static_cast<std::int64_t>(offsets_.size());
    count += std::upper_bound(offsets_.begin(), offsets_.end(), rem) - offsets_.begin();
    count -= std::upper_bound(exclusions_.begin(), exclusions_.end(), bound) - exclusions_.begin();
    return count;
}

std::vector<std::int64_t> ResidueClassSet::members_up_to(std::int64_t bound) const {
    std::vector<std::int64_t> out;
    for (std::int64_t base = 0; base < bound; base += modulus_) {
        for (auto o : offsets_) {
            const auto x = base + o;
            if (x > bound) break;
            if (!std::binary_search(exclusions_.begin(), exclusions_.end(), x)) out.push_back(x);
        }
    }
    return out;
}

std::string ResidueClassSet::key() const {
    return "m=" + std::to_string(modulus_) + ";r=" + join(residues_) + ";e=" + join(exclusions_);
}

int r_of(std::int64_t d) {
    if (d < 1) throw std::invalid_argument("r_of: d must be >= 1");
    int r = 0;
    while (r < 62 && (std::int64_t{1} << (r + 1)) - 1 <= d) ++r;
    return r;
}

ResidueClassSet t_set(int s, std::int64_t d) {
    if (s < 1 || d < 1) throw std::invalid_argument("t_set: s and d must be >= 1");
    if (s > 62 || (s >= 2 && (std::int64_t{1} << (s - 1)) >= d))
        throw std::invalid_argument("t_set: residues of T_{" + std::to_string(s) + "," +
                                    std::to_string(d) + "} collide modulo 2d (need s <= r_of(d))");
    std::vector<std::int64_t> residues{1 % (2 * d)};
    for (int j = 1; j <= s - 1; ++j) residues.push_back((d + (std::int64_t{1} << j)) % (2 * d));
    return ResidueClassSet(2 * d, std::move(residues));
}

ResidueClassSet s_set(std::int64_t d, std::int64_t N) {
    const auto m = d - N + 3;
    if (m < 3) throw std::invalid_argument("s_set: need d - N + 3 >= 3");
    return ResidueClassSet(m, {1, m - 1}, {m - 1});
}

ResidueClassSet q_set(std::int64_t a, std::int64_t d, QVariant variant) {
    if (a < 1) throw std::invalid_argument("q_set: a must be >= 1");
    if (a >= d + 3) throw std::invalid_argument("q_set: need a < d + 3");
    const auto m = d + 3;
    std::vector<std::int64_t> excl;
    if (variant != QVariant::plain) excl.push_back(m - a);
    if (variant == QVariant::minus_minus) excl.push_back(a);
    return ResidueClassSet(m, {a % m, (m - a) % m}, std::move(excl));
}

std::int64_t x_closed(std::int64_t d, std::int64_t N, std::int64_t i) {
    if (i < 1) throw std::invalid_argument("x_closed: index must be >= 1");
    if (d - N + 3 < 3) throw std::invalid_argument("x_closed: need d - N + 3 >= 3");
    if (i == 1) return 1;
    if (i == 2) return d - N + 4;
    return (i + 1) / 2 * (d - N + 3) + (i % 2 == 0 ? 1 : -1);
}

std::int64_t y_closed(std::int64_t d, std::int64_t i) {
    if (i < 1) throw std::invalid_argument("y_closed: index must be >= 1");
    if (r_of(d) < 5) throw std::invalid_argument("y_closed: requires r_of(d) >= 5 (d >= 31)");
    // Rows of five: (2j-2)d+1, (2j-1)d+2, +4, +8, +16.
    const auto row = (i - 1) / 5 + 1;
    const auto col = (i - 1) % 5;
    if (col == 0) return (2 * row - 2) * d + 1;
    return (2 * row - 1) * d + (std::int64_t{1} << col);
}

}  // namespace alder
