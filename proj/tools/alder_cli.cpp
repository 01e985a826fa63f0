// Command-line front end. Talks to the library only through the C API.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "alder/alder.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitError = 3;

struct Options {
    std::string a, d, N, n, s, set, residues, exclusions;
    std::int64_t n_max = 0, modulus = 0;
    std::string kind, theorem;
    std::string format = "json", cache, out;
    int jobs = 1;
    bool force = false, timing = false;
    std::int64_t horizon = 0;
};

void add_grid(CLI::App* cmd, Options& o, bool with_a) {
    if (with_a) cmd->add_option("--a", o.a, "range of a, e.g. 1..4");
    cmd->add_option("--d", o.d, "range of d");
    cmd->add_option("--N", o.N, "range of N");
    cmd->add_option("--n", o.n, "range of n");
    cmd->add_option("--n-max", o.n_max, "n runs over 1..n-max when --n is absent")->check(CLI::PositiveNumber);
}

alder_args to_args(const Options& o) {
    alder_args args{};
    auto opt = [](const std::string& s) { return s.empty() ? nullptr : s.c_str(); };
    args.a = opt(o.a);
    args.d = opt(o.d);
    args.N = opt(o.N);
    args.n = opt(o.n);
    args.s = opt(o.s);
    args.n_max = o.n_max;
    args.set = opt(o.set);
    args.modulus = o.modulus;
    args.residues = opt(o.residues);
    args.exclusions = opt(o.exclusions);
    return args;
}

int fail(alder_status st) {
    std::cerr << "alder: " << alder_last_error() << '\n';
    return st == ALDER_ERR_INVALID_ARGUMENT || st == ALDER_ERR_OUT_OF_RANGE ? kExitUsage : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Exact partition counts and grid verification of d-distinct partition inequalities"};
    app.set_version_flag("--version", std::string(alder_version()));
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "json, csv or human")
        ->check(CLI::IsMember({"json", "json-lines", "csv", "human"}));
    app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 1024));
    app.add_option("--cache", o.cache, "directory for cached count tables");
    app.add_flag("--force", o.force, "evaluate cells outside a theorem's hypotheses");
    app.add_option("--out", o.out, "write the report to this file");
    app.add_flag("--timing", o.timing, "include per-cell wall time");
    app.add_option("--horizon", o.horizon, "enumeration horizon for inject")->check(CLI::PositiveNumber);

    auto* count = app.add_subcommand("count", "exact counts, one record per n");
    count->add_option("--kind", o.kind, "q, Q, Qm, Qmm, rho, g, l, delta, delta_m, delta_mm")->required();
    add_grid(count, o, true);
    count->add_option("--s", o.s, "range of s for --set T");
    count->add_option("--set", o.set, "part set for rho")->check(CLI::IsMember({"T", "S", "custom"}));
    count->add_option("--modulus", o.modulus, "modulus for --set custom");
    count->add_option("--residues", o.residues, "residues for --set custom, e.g. 1,5");
    count->add_option("--exclude", o.exclusions, "excluded values for --set custom");

    auto* verify = app.add_subcommand("verify", "grid verification of a theorem");
    verify
        ->add_option("theorem", o.theorem,
                     "shift, littlelemon, gen-kp, gen-dkst, anchors, xy-diff, ceiling, a-to-1, modified-st, "
                     "t-monotone")
        ->required();
    add_grid(verify, o, true);

    auto* inject = app.add_subcommand("inject", "verify the injection on enumerated partitions");
    add_grid(inject, o, false);

    auto* search = app.add_subcommand("search", "list every cell with a negative difference");
    search->add_option("--kind", o.kind, "delta, delta-m, delta-mm or shift")->required();
    add_grid(search, o, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    alder_session* session = nullptr;
    if (auto st = alder_session_new(&session); st != ALDER_OK) return fail(st);
    struct SessionGuard {
        alder_session* s;
        ~SessionGuard() { alder_session_free(s); }
    } session_guard{session};

    alder_status st = alder_session_set_jobs(session, o.jobs);
    if (st == ALDER_OK && !o.cache.empty()) st = alder_session_set_cache_dir(session, o.cache.c_str());
    if (st == ALDER_OK) st = alder_session_set_force(session, o.force ? 1 : 0);
    if (st == ALDER_OK && o.horizon > 0) st = alder_session_set_enumeration_horizon(session, o.horizon);
    if (st != ALDER_OK) return fail(st);

    const auto args = to_args(o);
    alder_report* report = nullptr;
    if (count->parsed())
        st = alder_count(session, o.kind.c_str(), &args, &report);
    else if (verify->parsed())
        st = alder_verify(session, o.theorem.c_str(), &args, &report);
    else if (inject->parsed())
        st = alder_inject(session, &args, &report);
    else
        st = alder_search(session, o.kind.c_str(), &args, &report);
    if (st != ALDER_OK) return fail(st);
    struct ReportGuard {
        alder_report* r;
        ~ReportGuard() { alder_report_free(r); }
    } report_guard{report};

    const auto format = o.format == "csv" ? ALDER_FORMAT_CSV : o.format == "human" ? ALDER_FORMAT_HUMAN : ALDER_FORMAT_JSON;
    char* text = nullptr;
    if (st = alder_report_render(report, format, o.timing ? 1 : 0, &text); st != ALDER_OK) return fail(st);
    const std::string rendered(text);
    alder_string_free(text);

    if (o.out.empty()) {
        std::cout << rendered << std::flush;
    } else {
        std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
        file << rendered;
        if (!file) {
            std::cerr << "alder: cannot write " << o.out << '\n';
            return kExitError;
        }
    }
    return alder_report_exit_code(report);
}
