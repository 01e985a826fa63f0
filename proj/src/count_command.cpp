#include "alder/count_command.hpp"

#include <algorithm>
#include <stdexcept>

#include "alder/executor.hpp"

namespace alder {

namespace {

struct Source {
    ordered_json params = ordered_json::object();
    std::vector<TableRequest> lhs;  // summed
    std::vector<TableRequest> rhs;  // subtracted (deltas only)
    std::string error;
};

Axis or_default(const Axis& axis, std::int64_t v) { return axis.empty() ? Axis::single(v) : axis; }

QVariant variant_of(CountKind k) {
    switch (k) {
        case CountKind::Qm:
        case CountKind::delta_m: return QVariant::minus;
        case CountKind::Qmm:
        case CountKind::delta_mm: return QVariant::minus_minus;
        default: return QVariant::plain;
    }
}

std::vector<Source> sources(const CountSpec& spec, std::int64_t horizon) {
    std::vector<Source> out;
    auto guarded = [&](Source src, auto&& fill) {
        try {
            fill(src);
        } catch (const std::invalid_argument& e) {
            src.lhs.clear();
            src.rhs.clear();
            src.error = e.what();
        }
        out.push_back(std::move(src));
    };
    switch (spec.kind) {
        case CountKind::q:
        case CountKind::Q:
        case CountKind::Qm:
        case CountKind::Qmm:
        case CountKind::delta:
        case CountKind::delta_m:
        case CountKind::delta_mm: {
            if (spec.d.empty()) throw std::invalid_argument("count: --d is required");
            const auto as = or_default(spec.a, 1);
            for (auto a : as.values())
                for (auto d : spec.d.values()) {
                    Source src;
                    src.params["a"] = a;
                    src.params["d"] = d;
                    guarded(std::move(src), [&](Source& s) {
                        const auto q = q_request(a, d, horizon);
                        if (a < 1 || d < 1) throw std::invalid_argument("a and d must be >= 1");
                        const auto Q = rho_request(q_set(a, d, variant_of(spec.kind)), horizon);
                        if (spec.kind == CountKind::q) {
                            s.lhs = {q};
                        } else if (spec.kind == CountKind::Q || spec.kind == CountKind::Qm ||
                                   spec.kind == CountKind::Qmm) {
                            s.lhs = {Q};
                        } else {
                            s.lhs = {q};
                            s.rhs = {Q};
                        }
                    });
                }
            break;
        }
        case CountKind::g:
        case CountKind::l: {
            if (spec.d.empty()) throw std::invalid_argument("count: --d is required");
            for (auto d : spec.d.values()) {
                Source src;
                src.params["d"] = d;
                guarded(std::move(src), [&](Source& s) {
                    s.lhs = {spec.kind == CountKind::g ? g_request(d, horizon)
                                                       : rho_request(t_set(r_of(d), d), horizon)};
                });
            }
            break;
        }
        case CountKind::rho: {
            if (spec.set == "T") {
                if (spec.d.empty() || spec.s.empty()) throw std::invalid_argument("count: --set T needs --s and --d");
                for (auto s : spec.s.values())
                    for (auto d : spec.d.values()) {
                        Source src;
                        src.params["s"] = s;
                        src.params["d"] = d;
                        guarded(std::move(src), [&](Source& x) {
                            if (s < 1 || s > 62) throw std::invalid_argument("s out of range");
                            x.lhs = {rho_request(t_set(static_cast<int>(s), d), horizon)};
                        });
                    }
            } else if (spec.set == "S") {
                if (spec.d.empty() || spec.N.empty()) throw std::invalid_argument("count: --set S needs --d and --N");
                for (auto d : spec.d.values())
                    for (auto N : spec.N.values()) {
                        Source src;
                        src.params["d"] = d;
                        src.params["N"] = N;
                        guarded(std::move(src), [&](Source& x) { x.lhs = {rho_request(s_set(d, N), horizon)}; });
                    }
            } else if (spec.set == "custom") {
                const ResidueClassSet set(spec.modulus, spec.residues, spec.exclusions);
                Source src;
                src.params["set"] = set.key();
                src.lhs = {rho_request(set, horizon)};
                out.push_back(std::move(src));
            } else {
                throw std::invalid_argument("count: unknown --set '" + spec.set + "' (T, S or custom)");
            }
            break;
        }
    }
    return out;
}

}  // namespace

CountKind parse_count_kind(std::string_view name) {
    std::string s(name);
    std::replace(s.begin(), s.end(), '-', '_');
    if (s == "q") return CountKind::q;
    if (s == "Q") return CountKind::Q;
    if (s == "Qm") return CountKind::Qm;
    if (s == "Qmm") return CountKind::Qmm;
    if (s == "rho") return CountKind::rho;
    if (s == "g") return CountKind::g;
    if (s == "l") return CountKind::l;
    if (s == "delta") return CountKind::delta;
    if (s == "delta_m") return CountKind::delta_m;
    if (s == "delta_mm") return CountKind::delta_mm;
    throw std::invalid_argument("unknown count kind '" + std::string(name) + "'");
}

std::string_view to_string(CountKind kind) noexcept {
    switch (kind) {
        case CountKind::q: return "q";
        case CountKind::Q: return "Q";
        case CountKind::Qm: return "Qm";
        case CountKind::Qmm: return "Qmm";
        case CountKind::rho: return "rho";
        case CountKind::g: return "g";
        case CountKind::l: return "l";
        case CountKind::delta: return "delta";
        case CountKind::delta_m: return "delta_m";
        case CountKind::delta_mm: return "delta_mm";
    }
    return "q";
}

VerificationReport run_count(const CountSpec& spec, RunContext& ctx) {
    if (spec.n.empty()) throw std::invalid_argument("count: --n is required");
    if (spec.n.min() < 0) throw std::invalid_argument("count: n must be >= 0");
    const auto horizon = spec.n.max();
    const auto srcs = sources(spec, horizon);

    std::vector<TableRequest> warm;
    for (const auto& s : srcs) {
        warm.insert(warm.end(), s.lhs.begin(), s.lhs.end());
        warm.insert(warm.end(), s.rhs.begin(), s.rhs.end());
    }
    ctx.store.warm(warm, ctx.jobs);

    VerificationReport rep;
    rep.cmd = "count." + std::string(to_string(spec.kind));
    const auto& ns = spec.n.values();
    rep.cells = parallel_map(srcs.size() * ns.size(), ctx.jobs, [&](std::size_t i) {
        const auto& src = srcs[i / ns.size()];
        const auto n = ns[i % ns.size()];
        Cell c;
        c.params = src.params;
        c.params["n"] = n;
        if (!src.error.empty()) {
            c.status = CellStatus::skipped;
            c.note = "rejected: " + src.error;
            return c;
        }
        DeltaValue v = 0;
        for (const auto& r : src.lhs) v += ctx.store.get(r)->at(n);
        for (const auto& r : src.rhs) v -= ctx.store.get(r)->at(n);
        c.value = v.str();
        c.status = CellStatus::ok;
        return c;
    });
    return rep;
}

std::string count_value(CountKind kind, std::int64_t a, std::int64_t d, std::int64_t N, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    switch (kind) {
        case CountKind::q: return q_count(a, d, n).str();
        case CountKind::Q: return big_q(a, d, n).str();
        case CountKind::Qm: return big_q_minus(a, d, n).str();
        case CountKind::Qmm: return big_q_minus_minus(a, d, n).str();
        case CountKind::rho: return rho(s_set(d, N), n).str();
        case CountKind::g: return g_script(d, n).str();
        case CountKind::l: return l_script(d, n).str();
        case CountKind::delta: return delta(a, d, n).str();
        case CountKind::delta_m: return delta_minus(a, d, n).str();
        case CountKind::delta_mm: return delta_minus_minus(a, d, n).str();
    }
    throw std::invalid_argument("unknown count kind");
}

}  // namespace alder
