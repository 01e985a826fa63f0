#include "alder/alder.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "alder/count_command.hpp"
#include "alder/inequalities.hpp"

struct alder_session {
    int jobs = 1;
    bool force = false;
    std::int64_t enumeration_horizon = alder::kDefaultEnumerationHorizon;
    std::optional<std::filesystem::path> cache_dir;
    std::unique_ptr<alder::TableStore> store = std::make_unique<alder::TableStore>();
};

struct alder_report {
    alder::VerificationReport report;
};

namespace {

thread_local std::string last_error;

template <class Fn>
alder_status guarded(Fn&& fn) noexcept {
    try {
        last_error.clear();
        fn();
        return ALDER_OK;
    } catch (const std::invalid_argument& e) {
        last_error = e.what();
        return ALDER_ERR_INVALID_ARGUMENT;
    } catch (const std::out_of_range& e) {
        last_error = e.what();
        return ALDER_ERR_OUT_OF_RANGE;
    } catch (const std::filesystem::filesystem_error& e) {
        last_error = e.what();
        return ALDER_ERR_IO;
    } catch (const std::exception& e) {
        last_error = e.what();
        return ALDER_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return ALDER_ERR_INTERNAL;
    }
}

void require_non_null(const void* p, const char* what) {
    if (!p) throw std::invalid_argument(std::string(what) + " is NULL");
}

alder::Axis axis(const char* text) {
    if (!text || !*text) return {};
    return alder::Axis::parse(text);
}

std::vector<std::int64_t> int_list(const char* text) {
    if (!text || !*text) return {};
    return alder::Axis::parse(text).values();
}

alder::GridSpec grid(const alder_session& s, const alder_args& args) {
    alder::GridSpec g;
    g.a = axis(args.a);
    g.d = axis(args.d);
    g.N = axis(args.N);
    g.force = s.force;
    g.enumeration_horizon = s.enumeration_horizon;
    if (args.n && *args.n) {
        g.n = axis(args.n);
    } else {
        const bool a_is_one = g.a.empty() || g.a.max() <= 1;
        const auto n_max = args.n_max > 0 ? args.n_max : (a_is_one ? alder::kDefaultHorizonA1 : alder::kDefaultHorizonA2);
        g.n = alder::Axis::interval(1, n_max);
    }
    return g;
}

char* dup(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(alder::VerificationReport rep, alder_report** out) {
    *out = new alder_report{std::move(rep)};
}

}  // namespace

extern "C" {

const char* alder_version(void) { return "1.0.0"; }

const char* alder_last_error(void) { return last_error.c_str(); }

alder_status alder_session_new(alder_session** out) {
    return guarded([&] {
        require_non_null(out, "out");
        *out = new alder_session();
    });
}

void alder_session_free(alder_session* session) { delete session; }

alder_status alder_session_set_jobs(alder_session* session, int jobs) {
    return guarded([&] {
        require_non_null(session, "session");
        if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
        session->jobs = jobs;
    });
}

alder_status alder_session_set_cache_dir(alder_session* session, const char* dir) {
    return guarded([&] {
        require_non_null(session, "session");
        if (dir && *dir)
            session->cache_dir = std::filesystem::path(dir);
        else
            session->cache_dir.reset();
        session->store = std::make_unique<alder::TableStore>(session->cache_dir);
    });
}

alder_status alder_session_set_force(alder_session* session, int force) {
    return guarded([&] {
        require_non_null(session, "session");
        session->force = force != 0;
    });
}

alder_status alder_session_set_enumeration_horizon(alder_session* session, int64_t horizon) {
    return guarded([&] {
        require_non_null(session, "session");
        if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
        session->enumeration_horizon = horizon;
    });
}

alder_status alder_count(alder_session* session, const char* kind, const alder_args* args, alder_report** out) {
    return guarded([&] {
        require_non_null(session, "session");
        require_non_null(kind, "kind");
        require_non_null(args, "args");
        require_non_null(out, "out");
        alder::CountSpec spec;
        spec.kind = alder::parse_count_kind(kind);
        spec.a = axis(args->a);
        spec.d = axis(args->d);
        spec.N = axis(args->N);
        spec.s = axis(args->s);
        if (args->n && *args->n)
            spec.n = axis(args->n);
        else if (args->n_max > 0)
            spec.n = alder::Axis::interval(0, args->n_max);
        if (args->set && *args->set) spec.set = args->set;
        spec.modulus = args->modulus;
        spec.residues = int_list(args->residues);
        spec.exclusions = int_list(args->exclusions);
        alder::RunContext ctx{*session->store, session->jobs};
        emit(alder::run_count(spec, ctx), out);
    });
}

alder_status alder_verify(alder_session* session, const char* theorem, const alder_args* args, alder_report** out) {
    return guarded([&] {
        require_non_null(session, "session");
        require_non_null(theorem, "theorem");
        require_non_null(args, "args");
        require_non_null(out, "out");
        const std::string name(theorem);
        const auto g = grid(*session, *args);
        alder::RunContext ctx{*session->store, session->jobs};
        if (name == "shift") return emit(alder::verify_shift_range(g, ctx), out);
        if (name == "littlelemon") return emit(alder::verify_littlelemon(g, ctx), out);
        if (name == "gen-kp") return emit(alder::verify_gen_kp(g, ctx), out);
        if (name == "gen-dkst") return emit(alder::verify_gen_dkst(g, ctx), out);
        if (name == "anchors") return emit(alder::verify_smalln_anchors(g, ctx), out);
        if (name == "xy-diff") return emit(alder::verify_xy_differences(g, ctx), out);
        if (name == "ceiling") return emit(alder::verify_ceiling(g, ctx), out);
        if (name == "a-to-1") return emit(alder::verify_a_to_1(g, ctx), out);
        if (name == "modified-st") return emit(alder::verify_modified_st(g, ctx), out);
        if (name == "t-monotone") return emit(alder::verify_t_monotone(g.d, g.n.max(), ctx), out);
        throw std::invalid_argument("unknown theorem '" + name + "'");
    });
}

alder_status alder_inject(alder_session* session, const alder_args* args, alder_report** out) {
    return guarded([&] {
        require_non_null(session, "session");
        require_non_null(args, "args");
        require_non_null(out, "out");
        if (!(args->n && *args->n) && args->n_max <= 0) throw std::invalid_argument("inject: --n is required");
        alder::RunContext ctx{*session->store, session->jobs};
        emit(alder::verify_injection_range(grid(*session, *args), ctx), out);
    });
}

alder_status alder_search(alder_session* session, const char* kind, const alder_args* args, alder_report** out) {
    return guarded([&] {
        require_non_null(session, "session");
        require_non_null(kind, "kind");
        require_non_null(args, "args");
        require_non_null(out, "out");
        const auto k = alder::parse_search_kind(kind);
        alder::RunContext ctx{*session->store, session->jobs};
        emit(alder::search_counterexamples(k, grid(*session, *args), ctx), out);
    });
}

alder_status alder_report_render(const alder_report* report, alder_format format, int timing, char** out) {
    return guarded([&] {
        require_non_null(report, "report");
        require_non_null(out, "out");
        alder::RenderOptions opts;
        switch (format) {
            case ALDER_FORMAT_JSON: opts.format = alder::Format::json; break;
            case ALDER_FORMAT_CSV: opts.format = alder::Format::csv; break;
            case ALDER_FORMAT_HUMAN: opts.format = alder::Format::human; break;
            default: throw std::invalid_argument("unknown format");
        }
        opts.timing = timing != 0;
        *out = dup(alder::render(report->report, opts));
    });
}

int alder_report_exit_code(const alder_report* report) { return report ? report->report.exit_code() : 1; }

size_t alder_report_cell_count(const alder_report* report) { return report ? report->report.cells.size() : 0; }

alder_status alder_report_tally(const alder_report* report, alder_tally* out) {
    return guarded([&] {
        require_non_null(report, "report");
        require_non_null(out, "out");
        const auto t = report->report.tally();
        *out = {t.ok, t.holds, t.fails, t.out_of_hypothesis, t.skipped};
    });
}

void alder_report_free(alder_report* report) { delete report; }

alder_status alder_count_value(const char* kind, int64_t a, int64_t d, int64_t N, int64_t n, char** out) {
    return guarded([&] {
        require_non_null(kind, "kind");
        require_non_null(out, "out");
        *out = dup(alder::count_value(alder::parse_count_kind(kind), a, d, N, n));
    });
}

void alder_string_free(char* s) { std::free(s); }

}  // extern "C"
