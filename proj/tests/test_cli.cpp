#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "imst/cli.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = imst::cli::run(std::move(args), out, err);
    return RunResult{code, out.str(), err.str()};
}

// Writes content to a unique temp file and cleans it up on destruction.
class TempFile {
public:
    explicit TempFile(const std::string& content) {
        static int counter = 0;
        path_ = (std::filesystem::temp_directory_path() /
                 ("imst_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) +
                  ".txt"))
                    .string();
        std::ofstream(path_) << content;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

const char* kQuad =
    "p 4 5\n"
    "e 0 1 1\n"
    "e 1 2 2\n"
    "e 2 3 3\n"
    "e 0 3 4\n"
    "e 0 2 5\n";

const char* kTriangle =
    "p 3 3\n"
    "e 0 1 1\n"
    "e 1 2 2\n"
    "e 0 2 3\n";

bool all_numbers_are_integers(const nlohmann::json& j) {
    if (j.is_number()) {
        return j.is_number_integer();
    }
    if (j.is_array() || j.is_object()) {
        for (const auto& item : j) {
            if (!all_numbers_are_integers(item)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("bound emits the documented json schema") {
    TempFile input(kQuad);
    RunResult r = run_cli({"bound", "--input", input.path(), "--impose", "0-3,0-2", "--format",
                           "json"});
    REQUIRE(r.code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["base_cost"] == 6);
    CHECK(doc["lower_bound"] == 10);
    CHECK(doc["exact_cost"] == 10);
    CHECK(doc["gap"] == 0);
    REQUIRE(doc["contributions"].size() == 2);
    CHECK(doc["contributions"][0]["edge"] == 3);
    CHECK(doc["contributions"][0]["u"] == 0);
    CHECK(doc["contributions"][0]["v"] == 3);
    CHECK(doc["contributions"][0]["r_edge"] == 2);
    CHECK(doc["contributions"][0]["r_cost"] == 1);
    CHECK(doc["contributions"][1]["r_edge"] == 1);
    CHECK(doc["contributions"][1]["r_cost"] == 3);
    CHECK(all_numbers_are_integers(doc));
}

TEST_CASE("bound renders tree-edge contributions in json") {
    TempFile input(kQuad);
    RunResult r = run_cli({"bound", "--input", input.path(), "--impose", "#0,#3", "--format",
                           "json"});
    REQUIRE(r.code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["contributions"][0]["r_edge"].is_null());
    CHECK(doc["contributions"][0]["r_cost"] == 0);
    CHECK(doc["lower_bound"] == 7);
}

TEST_CASE("mst handles the single-node graph") {
    TempFile input("p 1 0\n");
    RunResult r = run_cli({"mst", "--input", input.path()});
    CHECK(r.code == 0);
    CHECK(r.out.find("total cost: 0") != std::string::npos);
}

TEST_CASE("mst prints the quad tree") {
    TempFile input(kQuad);
    RunResult r = run_cli({"mst", "--input", input.path()});
    CHECK(r.code == 0);
    CHECK(r.out.find("total cost: 6") != std::string::npos);
    CHECK(r.out.find("edge #0 (0-1) cost 1") != std::string::npos);
}

TEST_CASE("impose reports an imposed cycle as infeasible") {
    TempFile input(kTriangle);
    RunResult r = run_cli({"impose", "--input", input.path(), "--impose", "#0,#1,#2"});
    CHECK(r.code == 1);
    CHECK(r.err.rfind("error:infeasible:", 0) == 0);
    CHECK(r.err.find("#0") != std::string::npos);
}

TEST_CASE("impose walks the swap history") {
    TempFile input(kQuad);
    RunResult r = run_cli({"impose", "--input", input.path(), "--impose", "#3,#4"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("step 1: impose #3 (0-3), removed #2 (2-3), cost 6 -> 7") !=
          std::string::npos);
    CHECK(r.out.find("final cost: 10") != std::string::npos);
}

TEST_CASE("edge selectors") {
    TempFile quad(kQuad);
    SUBCASE("endpoints match either orientation") {
        RunResult r = run_cli({"impose", "--input", quad.path(), "--impose", "3-0"});
        CHECK(r.code == 0);
        CHECK(r.out.find("impose #3") != std::string::npos);
    }
    SUBCASE("parallel edges need the id form") {
        TempFile parallel("p 2 2\ne 0 1 5\ne 0 1 3\n");
        RunResult r = run_cli({"impose", "--input", parallel.path(), "--impose", "0-1"});
        CHECK(r.code == 2);
        CHECK(r.err.rfind("error:usage:", 0) == 0);
        CHECK(r.err.find("parallel") != std::string::npos);
    }
    SUBCASE("unmatched endpoints") {
        RunResult r = run_cli({"impose", "--input", quad.path(), "--impose", "1-3"});
        CHECK(r.code == 2);
        CHECK(r.err.rfind("error:usage:", 0) == 0);
    }
    SUBCASE("id out of range") {
        RunResult r = run_cli({"impose", "--input", quad.path(), "--impose", "#9"});
        CHECK(r.code == 2);
    }
    SUBCASE("garbage selector") {
        RunResult r = run_cli({"impose", "--input", quad.path(), "--impose", "zzz"});
        CHECK(r.code == 2);
    }
}

TEST_CASE("usage and parse failures exit with 2") {
    SUBCASE("missing input file") {
        RunResult r = run_cli({"mst", "--input", "/nonexistent/graph.txt"});
        CHECK(r.code == 2);
        CHECK(r.err.rfind("error:usage:", 0) == 0);
    }
    SUBCASE("malformed graph") {
        TempFile bad("p 2 1\ne 0 0 5\n");
        RunResult r = run_cli({"mst", "--input", bad.path()});
        CHECK(r.code == 2);
        CHECK(r.err.rfind("error:parse:", 0) == 0);
        CHECK(r.err.find("line 2") != std::string::npos);
    }
    SUBCASE("no subcommand") {
        RunResult r = run_cli({});
        CHECK(r.code == 2);
    }
    SUBCASE("unknown flag") {
        RunResult r = run_cli({"mst", "--bogus"});
        CHECK(r.code == 2);
    }
    SUBCASE("verify without instances") {
        RunResult r = run_cli({"verify"});
        CHECK(r.code == 2);
    }
}

TEST_CASE("disconnected input is infeasible") {
    TempFile input("p 4 2\ne 0 1 1\ne 2 3 1\n");
    RunResult r = run_cli({"mst", "--input", input.path()});
    CHECK(r.code == 1);
    CHECK(r.err.rfind("error:infeasible:", 0) == 0);
}

TEST_CASE("verify passes on the quad graph") {
    TempFile input(kQuad);
    RunResult r = run_cli({"verify", "--input", input.path()});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify: PASS") != std::string::npos);
    CHECK(r.out.find("optimality_conditions") != std::string::npos);
}

TEST_CASE("verify skips oversized graphs") {
    std::ostringstream big;
    big << "p 9 8\n";
    for (int i = 1; i < 9; ++i) {
        big << "e 0 " << i << " 1\n";
    }
    TempFile input(big.str());
    RunResult r = run_cli({"verify", "--input", input.path()});
    CHECK(r.code == 0);
    CHECK(r.out.find("skipped") != std::string::npos);
}

TEST_CASE("verify output is byte-identical for a fixed seed") {
    for (const char* format : {"text", "json"}) {
        RunResult a = run_cli({"verify", "--random", "6", "10", "4", "--seed", "42", "--format",
                               format});
        RunResult b = run_cli({"verify", "--random", "6", "10", "4", "--seed", "42", "--format",
                               format});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}

TEST_CASE("verify --random validates its shape") {
    RunResult r = run_cli({"verify", "--random", "9", "12", "1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("oracle cap") != std::string::npos);
}

TEST_CASE("verify json output is structured and integral") {
    RunResult r = run_cli({"verify", "--random", "5", "8", "2", "--seed", "7", "--format",
                           "json"});
    REQUIRE(r.code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["passed"] == true);
    CHECK(doc["violations"] == 0);
    CHECK(doc["instances"].size() == 2);
    CHECK(doc["instances"][0]["properties"].size() == 6);
    CHECK(all_numbers_are_integers(doc));
}

TEST_CASE("MST_IMPOSE_BUDGET overrides the oracle tree cap") {
    TempFile input(kQuad);
    SUBCASE("a tiny cap aborts verification") {
        ::setenv("MST_IMPOSE_BUDGET", "1", 1);
        RunResult r = run_cli({"verify", "--input", input.path()});
        ::unsetenv("MST_IMPOSE_BUDGET");
        CHECK(r.code == 2);
        CHECK(r.err.rfind("error:budget:", 0) == 0);
    }
    SUBCASE("an invalid value is a usage error") {
        ::setenv("MST_IMPOSE_BUDGET", "banana", 1);
        RunResult r = run_cli({"verify", "--input", input.path()});
        ::unsetenv("MST_IMPOSE_BUDGET");
        CHECK(r.code == 2);
        CHECK(r.err.rfind("error:usage:", 0) == 0);
    }
}

TEST_CASE("bound text output lists contributions") {
    TempFile input(kQuad);
    RunResult r = run_cli({"bound", "--input", input.path(), "--impose", "0-3,0-2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("base mst cost: 6") != std::string::npos);
    CHECK(r.out.find("lower bound: 10") != std::string::npos);
    CHECK(r.out.find("exact cost: 10") != std::string::npos);
    CHECK(r.out.find("gap: 0") != std::string::npos);
}
