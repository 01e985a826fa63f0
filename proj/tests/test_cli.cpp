#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(ALDER_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int lines(const std::string& s) {
    int k = 0;
    for (char c : s) k += c == '\n';
    return k;
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("count examples") {
    const auto delta = run("count --kind delta --a 1 --d 1 --n 1..20");
    CHECK(delta.code == 0);
    CHECK(lines(delta.out) == 21);
    CHECK(!has(delta.out, "\"value\":\"1\""));
    CHECK(has(delta.out, "\"cells\":20,\"ok\":20"));

    const auto t = run("count --kind rho --set T --s 5 --d 63 --n 2");
    CHECK(t.code == 0);
    CHECK(has(t.out, "\"value\":\"1\""));

    const auto qm = run("count --kind Qm --a 1 --d 61 --n 321");
    CHECK(has(qm.out, "\"value\":\"29\""));

    CHECK(run("count --kind delta --a 2 --d 3 --n 6").out.find("\"value\":\"-1\"") != std::string::npos);
}

TEST_CASE("verify examples") {
    const auto shift = run("verify shift --N 2 --d 63 --n-max 600");
    CHECK(shift.code == 0);
    CHECK(has(shift.out, "\"cmd\":\"verify.shift\""));
    CHECK(!has(shift.out, "\"status\":\"fails\""));

    const auto kp = run("verify gen-kp --a 4 --d 417 --n-max 1000");
    CHECK(kp.code == 0);
    CHECK(has(kp.out, "{\"a\":4,\"d\":417,\"n\":424},\"status\":\"out-of-hypothesis\",\"value\":\"-1\""));
    CHECK(has(kp.out, "\"holds\":999"));

    const auto xy = run("verify xy-diff --d 31..200 --N 2..16");
    CHECK(xy.code == 0);
    CHECK(!has(xy.out, "\"status\":\"fails\""));

    CHECK(run("verify littlelemon --d 105 --n-max 400").code == 0);
}

TEST_CASE("inject examples") {
    const auto a = run("inject --d 63 --N 2 --n 455..460");
    CHECK(a.code == 0);
    CHECK(lines(a.out) == 7);
    CHECK(!has(a.out, "\"status\":\"fails\""));

    const auto b = run("inject --d 105 --N 4 --n 749..752");
    CHECK(b.code == 0);
    CHECK(has(b.out, "\"holds\":4"));

    const auto forced = run("--force inject --d 63 --N 4 --n 700");
    CHECK(forced.code == 0);
    CHECK(has(forced.out, "out-of-hypothesis"));
}

TEST_CASE("search examples are informational") {
    const auto s = run("search --kind delta --a 2 --d 1..10 --n-max 100");
    CHECK(s.code == 0);
    CHECK(has(s.out, "{\"a\":2,\"d\":3,\"n\":6},\"status\":\"fails\",\"value\":\"-1\""));
    const auto none = run("search --kind delta-mm --a 4 --d 400..420 --n-max 500");
    CHECK(none.code == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("count --a 1 --d 1 --n 3").code == 2);
    CHECK(run("count --kind zeta --a 1 --d 1 --n 3").code == 2);
    CHECK(run("verify nope --d 63").code == 2);
    CHECK(run("count --kind q --a 1 --d 1 --n 5..1").code == 2);
    CHECK(run("--jobs 0 count --kind q --a 1 --d 1 --n 3").code == 2);
    CHECK(run("inject --d 63 --N 2 --n 2500").code == 2);
    CHECK(run("--format xml count --kind q --a 1 --d 1 --n 3").code == 2);
    CHECK(run("--version").code == 0);
}

TEST_CASE("formats and output file") {
    const auto csv = run("--format csv count --kind q --a 1 --d 1..2 --n 4");
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("cmd,a,d,n,status,value,witness,note\n", 0) == 0);
    CHECK(lines(csv.out) == 3);

    const auto human = run("--format human verify gen-kp --a 1 --d 105 --n-max 200");
    CHECK(has(human.out, "summary: 200 cells"));

    std::random_device rd;
    const auto file = std::filesystem::temp_directory_path() / ("alder-cli-" + std::to_string(rd()) + ".jsonl");
    const auto direct = run("count --kind Q --a 1 --d 61 --n 126");
    CHECK(run("--out " + file.string() + " count --kind Q --a 1 --d 61 --n 126").out.empty());
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == direct.out);
    std::filesystem::remove(file);

    CHECK(has(run("--timing count --kind q --a 1 --d 1 --n 3").out, "wall_ms"));
}

TEST_CASE("output is independent of jobs and cache") {
    std::random_device rd;
    const auto dir = std::filesystem::temp_directory_path() / ("alder-cli-cache-" + std::to_string(rd()));
    const std::string grid = "verify shift --N 2..5 --d 63,105 --n-max 700";
    const auto one = run("--jobs 1 " + grid);
    const auto many = run("--jobs 8 " + grid);
    const auto cold = run("--cache " + dir.string() + " " + grid);
    const auto warm = run("--cache " + dir.string() + " " + grid);
    CHECK(one.code == 0);
    CHECK(one.out == many.out);
    CHECK(one.out == cold.out);
    CHECK(one.out == warm.out);
    std::filesystem::remove_all(dir);
}
