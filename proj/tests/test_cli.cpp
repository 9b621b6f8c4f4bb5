#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "vinc/scheme.hpp"

namespace {

struct CommandResult {
    int status = -1;
    std::string out;
    std::string err;
};

std::string scratch_path(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "vinc_cli_tests";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Arguments are passed through a shell, so call sites quote anything with
// spaces or braces themselves.
CommandResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string out_file = scratch_path("out" + std::to_string(counter));
    std::string err_file = scratch_path("err" + std::to_string(counter));
    ++counter;
    std::string command =
        std::string(VINC_CLI_PATH) + " " + args + " >" + out_file + " 2>" + err_file;
    int raw = std::system(command.c_str());
    CommandResult result;
    result.status = raw < 0 ? raw : WEXITSTATUS(raw);
    result.out = slurp(out_file);
    result.err = slurp(err_file);
    std::filesystem::remove(out_file);
    std::filesystem::remove(err_file);
    return result;
}

bool mentions(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("discover writes a loadable scheme file") {
    std::string path = scratch_path("scheme_23_1.json");
    CommandResult r = run_cli("discover '23-1' -d 2 -M 2 --out " + path);
    CHECK(r.status == 0);
    CHECK(mentions(r.out, "scheme for 23-1"));
    CHECK(mentions(r.out, "depth 2, 4 triples"));

    vinc::Scheme scheme = vinc::deserialize(slurp(path));
    CHECK(scheme.triples.size() == 4);
    CHECK(scheme.patterns == vinc::parse_pattern_set("23-1"));
    std::filesystem::remove(path);
}

TEST_CASE("discover reports blocking prefixes and honors the reverse fallback") {
    CommandResult direct = run_cli("discover '2-3-1' -d 5 -M 2");
    CHECK(direct.status == 3);
    CHECK(mentions(direct.out, "blocking prefixes"));
    CHECK(mentions(direct.out, "54321"));

    CommandResult reversed = run_cli("discover '2-3-1' -d 5 -M 2 --try-reverse");
    CHECK(reversed.status == 0);
    CHECK(mentions(reversed.out, "scheme for 1-3-2"));
    CHECK(mentions(reversed.out, "reverse of 2-3-1"));

    CommandResult json = run_cli("discover '2-3-1' --try-reverse --json");
    CHECK(json.status == 0);
    auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["variant"] == "reverse");
    CHECK(doc["scheme"]["patterns"] == nlohmann::json::array({"1-3-2"}));
}

TEST_CASE("discover rejects malformed pattern input") {
    CHECK(run_cli("discover ''").status == 2);
    CHECK(run_cli("discover '10-2'").status == 2);
    CHECK(run_cli("discover '1-32' -d 0").status == 2);
}

TEST_CASE("enumerate prints the avoidance sequence") {
    CommandResult r = run_cli("enumerate '143-2' 10");
    CHECK(r.status == 0);
    CHECK(r.out == "1\n2\n6\n23\n107\n582\n3622\n25369\n197523\n1692535\n");
}

TEST_CASE("enumerate accepts a scheme file and emits json") {
    std::string path = scratch_path("scheme_for_enum.json");
    REQUIRE(run_cli("discover '23-1' --out " + path).status == 0);
    CommandResult r = run_cli("enumerate " + path + " 6 --json");
    CHECK(r.status == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc == nlohmann::json::array({"1", "2", "5", "15", "52", "203"}));
    std::filesystem::remove(path);
}

TEST_CASE("enumerate falls back to the reversed set for plain counting") {
    CommandResult r = run_cli("enumerate '2-3-1' 5");
    CHECK(r.status == 0);
    CHECK(r.out == "1\n2\n5\n14\n42\n");
    CHECK(mentions(r.err, "reversed set 1-3-2"));
}

TEST_CASE("enumerate refines by inversion number") {
    CommandResult r = run_cli("enumerate '1-32' 5 --by-inversions");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "1\n"
          "1\n"
          "1 1\n"
          "1 1 2 1\n"
          "1 1 2 4 3 3 1\n"
          "1 1 2 4 7 8 9 9 6 4 1\n");

    CommandResult no_reverse = run_cli("enumerate '2-3-1' 5 --by-inversions");
    CHECK(no_reverse.status == 3);
}

TEST_CASE("oracle check confirms scheme counts") {
    CommandResult r = run_cli("oracle-check '214-3' --n 8");
    CHECK(r.status == 0);
    CHECK(mentions(r.out, "n=7: 3637 ok"));
    CHECK(mentions(r.out, "n=8: 25548 ok"));
    CHECK(mentions(r.out, "all 8 values match"));

    CHECK(run_cli("oracle-check '23-1' --n 12").status == 2);
}

TEST_CASE("oracle check flags a corrupted scheme file") {
    std::string good_path = scratch_path("good_scheme.json");
    REQUIRE(run_cli("discover '23-1' --out " + good_path).status == 0);

    auto doc = nlohmann::json::parse(slurp(good_path));
    for (auto& triple : doc["triples"])
        if (triple["prefix"] == nlohmann::json::array({1}))
            triple["gap_basis"] = nlohmann::json::array({{0, 0}});
    std::string bad_path = scratch_path("bad_scheme.json");
    {
        std::ofstream out(bad_path);
        out << doc.dump(2) << "\n";
    }

    CommandResult r = run_cli("oracle-check " + bad_path + " --n 6");
    CHECK(r.status == 4);
    CHECK(mentions(r.out, "n=1"));
    CHECK(mentions(r.out, "mismatch"));
    std::filesystem::remove(good_path);
    std::filesystem::remove(bad_path);
}

TEST_CASE("survey summarizes symmetry classes") {
    CommandResult r = run_cli("survey 3");
    CHECK(r.status == 0);
    CHECK(mentions(r.out, "length 3: 7 classes, 7 with schemes"));
    CHECK(mentions(r.out, "1-3-2"));

    CommandResult block = run_cli("survey '(2,2)' --json");
    CHECK(block.status == 0);
    auto doc = nlohmann::json::parse(block.out);
    CHECK(doc["total"] == 8);
    CHECK(doc["successful"] == 3);

    CommandResult sets = run_cli("survey '{2,2}'");
    CHECK(sets.status == 0);
    CHECK(mentions(sets.out, "{2,2}: 3 classes, 3 with schemes"));
}

TEST_CASE("survey enforces its budget and rejects bad shapes") {
    CommandResult big = run_cli("survey '{4,4}'");
    CHECK(big.status == 2);
    CHECK(mentions(big.err, "budget exceeded"));
    CHECK(run_cli("survey 5").status == 2);
    CHECK(run_cli("survey junk").status == 2);
}

TEST_CASE("classify groups patterns and reports divergence") {
    CommandResult r = run_cli("classify '123-4, 132-4' --n 6");
    CHECK(r.status == 0);
    CHECK(mentions(r.out, "group 1: 123-4"));
    CHECK(mentions(r.out, "group 2: 132-4"));
    CHECK(mentions(r.out, "first diverge at n=5"));

    CommandResult json = run_cli("classify '13-24, 12-34' --n 6 --json");
    CHECK(json.status == 0);
    auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["groups"].size() == 1);
    CHECK(doc["unclassifiable"] == nlohmann::json::array({"13-24"}));
}

TEST_CASE("usage errors exit with the usage status") {
    CHECK(run_cli("").status == 2);
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("enumerate '143-2' 0").status == 2);
    CHECK(run_cli("enumerate '143-2'").status == 2);
}
