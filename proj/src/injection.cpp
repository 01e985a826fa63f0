#include "alder/injection.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace alder {

namespace {

constexpr std::size_t kMaxWitnesses = 20;

void trim(std::vector<std::int64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

std::string render_mult(const std::vector<std::int64_t>& mult) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < mult.size(); ++i) os << (i ? "," : "") << mult[i];
    os << ']';
    return os.str();
}

void enumerate_rec(const std::vector<std::int64_t>& parts, std::size_t idx, std::int64_t remaining,
                   std::vector<std::int64_t>& mult, const ResidueClassSet& base,
                   std::vector<IndexedPartition>& out) {
    if (idx == 0) {
        // parts[0] == 1 always, so the remainder is absorbed by ones.
        mult[0] = remaining;
        out.emplace_back(base, mult);
        mult[0] = 0;
        return;
    }
    const auto part = parts[idx];
    for (auto k = remaining / part; k >= 0; --k) {
        mult[idx] = k;
        enumerate_rec(parts, idx - 1, remaining - k * part, mult, base, out);
    }
    mult[idx] = 0;
}

std::int64_t image_weight(const std::vector<std::int64_t>& q, std::int64_t d) {
    std::int64_t w = 0;
    for (std::size_t i = 0; i < q.size(); ++i)
        if (q[i] != 0) w += q[i] * y_closed(d, static_cast<std::int64_t>(i) + 1);
    return w;
}

MapImage finish(std::vector<std::int64_t> q, const IndexedPartition& lambda, std::int64_t d,
                const char* branch) {
    MapImage img;
    img.weight = image_weight(q, d);
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] < 0) {
            img.violation = std::string(branch) + ": q_" + std::to_string(i + 1) + " = " +
                            std::to_string(q[i]) + " < 0";
            break;
        }
    }
    if (!img.violation && img.weight != lambda.weight())
        img.violation = std::string(branch) + ": image weight " + std::to_string(img.weight) +
                        " != " + std::to_string(lambda.weight());
    trim(q);
    img.mult = std::move(q);
    return img;
}

}  // namespace

IndexedPartition::IndexedPartition(ResidueClassSet base, std::vector<std::int64_t> mult)
    : base_(std::move(base)), mult_(std::move(mult)) {
    trim(mult_);
    for (std::size_t i = 0; i < mult_.size(); ++i) {
        if (mult_[i] < 0) throw std::invalid_argument("indexed partition: negative multiplicity");
        if (mult_[i] != 0) weight_ += mult_[i] * base_.element(static_cast<std::int64_t>(i) + 1);
    }
}

std::int64_t IndexedPartition::mult(std::int64_t i) const noexcept {
    if (i < 1 || i > num_indices()) return 0;
    return mult_[static_cast<std::size_t>(i - 1)];
}

std::string IndexedPartition::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (auto i = num_indices(); i >= 1; --i) {
        if (mult(i) == 0) continue;
        os << (first ? "" : " ") << base_.element(i) << '^' << mult(i);
        first = false;
    }
    return first ? "0" : os.str();
}

std::vector<IndexedPartition> enumerate_S(std::int64_t d, std::int64_t N, std::int64_t n,
                                          std::int64_t horizon) {
    if (n < 0) throw std::invalid_argument("enumerate_S: n must be >= 0");
    if (n > horizon)
        throw std::out_of_range("enumerate_S: n=" + std::to_string(n) + " exceeds enumeration horizon " +
                                std::to_string(horizon));
    const auto base = s_set(d, N);
    std::vector<IndexedPartition> out;
    if (n == 0) {
        out.emplace_back(base, std::vector<std::int64_t>{});
        return out;
    }
    const auto parts = base.members_up_to(n);
    std::vector<std::int64_t> mult(parts.size(), 0);
    enumerate_rec(parts, parts.size() - 1, n, mult, base, out);
    return out;
}

PartitionStats stats(const IndexedPartition& lambda, std::int64_t d, std::int64_t N) {
    if (d - N - 1 <= 0) throw std::invalid_argument("stats: need d - N - 1 > 0");
    PartitionStats s;
    for (std::int64_t i = 3; i <= lambda.num_indices(); ++i) {
        const auto p = lambda.mult(i);
        if (p == 0) continue;
        const auto diff = x_closed(d, N, i) - y_closed(d, i);
        if (diff < 0)
            throw std::invalid_argument("stats: x_" + std::to_string(i) + " - y_" + std::to_string(i) +
                                        " = " + std::to_string(diff) + " < 0");
        s.alpha += diff * p;
    }
    const auto p1 = lambda.mult(1), p2 = lambda.mult(2), p5 = lambda.mult(5);
    s.epsilon = static_cast<int>(p2 % 2);
    s.beta = (p1 + p5) / (d - N - 1);
    s.cls = (p1 + s.alpha >= (N - 2) * p2) ? PieceClass::S1 : PieceClass::S2;
    return s;
}

IndexedPartition MapImage::partition(std::int64_t d) const {
    if (!ok()) throw std::logic_error("map image is not a partition: " + *violation);
    return IndexedPartition(t_set(5, d), mult);
}

MapImage phi1(const IndexedPartition& lambda, std::int64_t d, std::int64_t N) {
    const auto s = stats(lambda, d, N);
    auto q = lambda.multiplicities();
    q.resize(std::max<std::size_t>(q.size(), 1), 0);
    q[0] = lambda.mult(1) + s.alpha - (N - 2) * lambda.mult(2);
    return finish(std::move(q), lambda, d, "phi1");
}

MapImage phi2(const IndexedPartition& lambda, std::int64_t d, std::int64_t N) {
    const auto s = stats(lambda, d, N);
    const auto p1 = lambda.mult(1), p2 = lambda.mult(2), p5 = lambda.mult(5);
    const auto eps = static_cast<std::int64_t>(s.epsilon);
    const auto half = (p2 + eps) / 2;  // p2 + eps is even
    auto q = lambda.multiplicities();
    q.resize(std::max<std::size_t>(q.size(), 5), 0);
    q[0] = p1 + s.alpha + half * (d - 2 * N - 8) + 28 * s.beta + (26 + N) * eps;
    q[1] = 2 * s.beta + eps;
    q[4] = p5 + half - 2 * s.beta - 2 * eps;
    return finish(std::move(q), lambda, d, "phi2");
}

MapImage phi(const IndexedPartition& lambda, std::int64_t d, std::int64_t N) {
    return stats(lambda, d, N).cls == PieceClass::S1 ? phi1(lambda, d, N) : phi2(lambda, d, N);
}

bool injection_in_hypothesis(std::int64_t d, std::int64_t N, std::int64_t n) {
    return N >= 2 && d >= std::max<std::int64_t>(63, 46 * N - 79) && n >= 7 * d + 14;
}

InjectionReport verify_injection(std::int64_t d, std::int64_t N, std::int64_t n, bool force,
                                 std::int64_t horizon) {
    InjectionReport rep;
    rep.d = d;
    rep.N = N;
    rep.n = n;
    rep.in_hypothesis = injection_in_hypothesis(d, N, n);
    if (!rep.in_hypothesis && !force) {
        rep.not_evaluated_reason = "outside hypotheses (use force to evaluate)";
        return rep;
    }
    if (n > horizon)
        throw std::out_of_range("verify_injection: n=" + std::to_string(n) + " exceeds enumeration horizon " +
                                std::to_string(horizon));

    std::optional<ResidueClassSet> source, target;
    try {
        source = s_set(d, N);
        target = t_set(5, d);
        (void)y_closed(d, 1);
        if (d - N - 1 <= 0) throw std::invalid_argument("need d - N - 1 > 0");
    } catch (const std::exception& e) {
        rep.not_evaluated_reason = std::string("part sets undefined: ") + e.what();
        return rep;
    }
    rep.evaluated = true;

    auto add_witness = [&rep](std::string w) {
        if (rep.witnesses.size() < kMaxWitnesses) rep.witnesses.push_back(std::move(w));
    };

    const auto all = enumerate_S(d, N, n, horizon);
    rep.size_S = static_cast<std::int64_t>(all.size());
    rep.rho_S = rho(*source, n);
    rep.rho_T = rho(*target, n);

    const bool p2_bound_applies =
        N >= 2 && n >= 7 * d + 14 && d >= std::max({std::int64_t{31}, 9 * N - 13, 13 * N - 31});
    std::map<std::vector<std::int64_t>, std::size_t> images;
    std::map<std::int64_t, std::int64_t> beta_of_q2;
    std::set<std::int64_t> betas;
    for (std::size_t idx = 0; idx < all.size(); ++idx) {
        const auto& lambda = all[idx];
        PartitionStats s;
        try {
            s = stats(lambda, d, N);
        } catch (const std::exception& e) {
            rep.images_valid = false;
            add_witness("lambda=" + lambda.to_string() + ": " + e.what());
            continue;
        }
        const bool in_s1 = s.cls == PieceClass::S1;
        if (in_s1) {
            ++rep.size_S1;
        } else {
            ++rep.size_S2;
            betas.insert(s.beta);
            if (p2_bound_applies && lambda.mult(2) < 8) {
                rep.p2_at_least_8 = false;
                add_witness("lambda=" + lambda.to_string() + ": S2 member with p_2 = " +
                            std::to_string(lambda.mult(2)) + " < 8");
            }
        }

        const auto img = in_s1 ? phi1(lambda, d, N) : phi2(lambda, d, N);
        if (!img.ok()) {
            rep.images_valid = false;
            add_witness("lambda=" + lambda.to_string() + ": " + *img.violation);
            continue;
        }
        if (!in_s1) {
            const auto q2 = img.mult.size() >= 2 ? img.mult[1] : 0;
            auto [it, fresh] = beta_of_q2.emplace(q2, s.beta);
            if (!fresh && it->second != s.beta) {
                rep.pieces_separated = false;
                add_witness("q_2=" + std::to_string(q2) + " shared by beta=" + std::to_string(it->second) +
                            " and beta=" + std::to_string(s.beta));
            }
        }
        auto [it, fresh] = images.emplace(img.mult, idx);
        if (!fresh) {
            rep.injective = false;
            add_witness("collision: " + all[it->second].to_string() + " and " + lambda.to_string() +
                        " both map to " + render_mult(img.mult));
        }
    }
    rep.beta_pieces = static_cast<std::int64_t>(betas.size());
    rep.distinct_images = static_cast<std::int64_t>(images.size());

    if (rep.size_S1 + rep.size_S2 != rep.size_S || Count(rep.size_S) != rep.rho_S) {
        rep.classification_ok = false;
        add_witness("enumeration size " + std::to_string(rep.size_S) + " vs rho(S) " + rep.rho_S.str() +
                    " vs pieces " + std::to_string(rep.size_S1) + "+" + std::to_string(rep.size_S2));
    }
    if (rep.rho_T < rep.rho_S || Count(rep.distinct_images) > rep.rho_T) {
        rep.count_inequality = false;
        add_witness("rho(T)=" + rep.rho_T.str() + " < rho(S)=" + rep.rho_S.str());
    }
    return rep;
}

}  // namespace alder
