#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "jackal/jack.hpp"
#include "jackal/json_io.hpp"

using namespace jackal;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out, err;
};

fs::path scratch() {
    static fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / ("jackal-cli-" + std::to_string(::getpid()));
        fs::remove_all(p);
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Runs the binary under test with the given argument string.
RunResult run(const std::string& args) {
    static int seq = 0;
    fs::path o = scratch() / ("out." + std::to_string(seq));
    fs::path e = scratch() / ("err." + std::to_string(seq));
    ++seq;
    std::string cmd = std::string(JACKAL_CLI_PATH) + " " + args + " >" + o.string() + " 2>" +
                      e.string();
    int st = std::system(cmd.c_str());
    RunResult r;
    if (st != -1 && WIFEXITED(st)) r.code = WEXITSTATUS(st);
    r.out = slurp(o);
    r.err = slurp(e);
    return r;
}

std::string cache_arg() { return "--cache-dir " + (scratch() / "cache").string() + " "; }

}  // namespace

TEST_CASE("compute subcommands print frozen values") {
    RunResult r = run(cache_arg() + "compute jack --lambda 2");
    CHECK(r.code == 0);
    CHECK(r.out == "(α+1)·m[2] + 2·m[1,1]\n");
    CHECK(r.err.empty());

    CHECK(run(cache_arg() + "compute jack --lambda 2 --method gs").out ==
          "(α+1)·m[2] + 2·m[1,1]\n");
    CHECK(run(cache_arg() + "compute skew --lambda 2 --mu 1").out == "2α·m[1]\n");
    CHECK(run(cache_arg() + "compute skew --lambda 2 --mu 1 --method stanley").out ==
          "2α·m[1]\n");
    CHECK(run(cache_arg() + "compute g --lambda 2 --mu 1 --nu 1").out == "2α²\n");
    CHECK(run(cache_arg() + "compute norm --lambda 2").out == "2α³+2α²\n");
    CHECK(run(cache_arg() + "compute lr --lambda 3,2,1 --mu 2,1 --nu 2,1").out == "2\n");
    CHECK(run(cache_arg() + "compute skew --lambda 2,1 --mu 2,1").out == "(2α⁴+5α³+2α²)\n");
}

TEST_CASE("json output round-trips through the engine") {
    RunResult r = run(cache_arg() + "--format json compute jack --lambda 3,1");
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    Engine e;
    CHECK(symfunc_from_json(j) == e.jack(Partition::parse("3,1")));
}

TEST_CASE("output can be redirected to a file") {
    fs::path target = scratch() / "result.txt";
    RunResult r = run(cache_arg() + "--out " + target.string() + " compute norm --lambda 1,1");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(target) == "2α²+2α\n");
}

TEST_CASE("usage errors exit with code 2") {
    // malformed partition
    RunResult r = run(cache_arg() + "compute jack --lambda 2,x");
    CHECK(r.code == 2);
    CHECK(r.err.rfind("error: ", 0) == 0);
    // unknown suite
    CHECK(run(cache_arg() + "verify bogus --max-size 2").code == 2);
    // missing required option
    CHECK(run(cache_arg() + "compute jack").code == 2);
    // global flags must precede the subcommand
    CHECK(run(cache_arg() + "compute jack --lambda 2 --format json").code == 2);
    // degree mismatch in a structure coefficient
    RunResult lr = run(cache_arg() + "compute lr --lambda 2 --mu 1 --nu 2");
    CHECK(lr.code == 2);
    CHECK(lr.err.rfind("error: ", 0) == 0);
}

TEST_CASE("verify runs the proven suites") {
    RunResult r = run(cache_arg() + "verify translation --max-size 3");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("suite translation (bound 3): ", 0) == 0);
    CHECK(r.out.find(" cases, pass [") != std::string::npos);

    RunResult all = run(cache_arg() + "--jobs 2 verify all --max-size 3");
    CHECK(all.code == 0);
    std::size_t lines = 0;
    for (char c : all.out)
        if (c == '\n') ++lines;
    CHECK(lines == 6);

    RunResult js = run(cache_arg() + "--format json verify split --max-size 3 --xvars 3");
    CHECK(js.code == 0);
    nlohmann::json j = nlohmann::json::parse(js.out);
    CHECK(j.at("suite") == "split");
    CHECK(j.at("bound").at("xvars") == 3);
    CHECK(j.at("failures").empty());
}

TEST_CASE("conjecture sweeps write a findings file") {
    fs::path f = scratch() / "findings.json";
    RunResult r = run(cache_arg() + "conjecture main --max-size 4 --findings " + f.string());
    CHECK(r.code == 0);
    REQUIRE(fs::exists(f));
    nlohmann::json j = nlohmann::json::parse(slurp(f));
    CHECK(j.at("suite") == "main");
    CHECK(j.at("bound") == 4);
    CHECK(j.at("findings").is_array());
    CHECK(j.at("findings").empty());
}

TEST_CASE("lowest-coefficient conjecture prints its table") {
    fs::path f = scratch() / "lowest-findings.json";
    RunResult r = run(cache_arg() + "conjecture lowest --mu 1 --max-size 6 --findings " +
                      f.string());
    CHECK(r.code == 0);
    CHECK(r.out.find("pi[(1,1)] = α") != std::string::npos);
    CHECK(r.out.find("consistent: yes, unique: yes") != std::string::npos);

    RunResult js = run(cache_arg() + "--format json conjecture lowest --mu 2 --max-size 6 " +
                       "--findings " + f.string());
    CHECK(js.code == 0);
    nlohmann::json j = nlohmann::json::parse(js.out);
    CHECK(j.at("table").at("consistent") == true);
    CHECK(j.at("table").at("pi").size() == 2);
}

TEST_CASE("cache lifecycle through the command line") {
    std::string dir = (scratch() / "cache-life").string();
    std::string arg = "--cache-dir " + dir + " ";
    CHECK(run(arg + "compute jack --lambda 2,2").code == 0);
    RunResult st = run(arg + "--format json cache stats");
    REQUIRE(st.code == 0);
    nlohmann::json j = nlohmann::json::parse(st.out);
    CHECK(j.at("files").get<long>() >= 1);
    CHECK(j.at("bytes").get<long>() > 0);

    RunResult cl = run(arg + "cache clear");
    CHECK(cl.code == 0);
    CHECK(cl.out == "cache cleared\n");
    nlohmann::json after = nlohmann::json::parse(run(arg + "--format json cache stats").out);
    CHECK(after.at("files") == 0);
    CHECK(after.at("bytes") == 0);
}

TEST_CASE("verification output is deterministic up to timing") {
    auto normalized = [](const std::string& raw) {
        nlohmann::json j = nlohmann::json::parse(raw);
        for (nlohmann::json& r : j) r["ms"] = 0;
        return j.dump();
    };
    std::string a =
        normalized(run(cache_arg() + "--format json verify all --max-size 3").out);
    fs::path fresh = scratch() / "cache-fresh";
    std::string b = normalized(
        run("--cache-dir " + fresh.string() + " --format json verify all --max-size 3").out);
    CHECK(a == b);
}
