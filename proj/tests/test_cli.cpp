#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "polyneigh/construct.hpp"
#include "polyneigh/json_io.hpp"

using namespace polyneigh;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string command =
        env_prefix + std::string(POLYNEIGH_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    while (std::size_t n = fread(buffer, 1, sizeof(buffer), pipe))
        result.out.append(buffer, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "polyneigh_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_scratch(const std::string& name, const std::string& contents) {
    const fs::path path = scratch_dir() / name;
    std::ofstream out(path, std::ios::binary);
    out << contents;
    return path.string();
}

std::string fixture(const std::string& stem) {
    return std::string(POLYNEIGH_FIXTURES_DIR) + "/" + stem + ".json";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("facets subcommand enumerates fixtures", "[cli]") {
    const auto r46 = run_cli("facets --input " + fixture("p46"));
    REQUIRE(r46.exit_code == 0);
    CHECK(json::parse(r46.out)["facets"].size() == 9);

    const auto r59 = run_cli("facets --input " + fixture("p59"));
    REQUIRE(r59.exit_code == 0);
    CHECK(json::parse(r59.out)["facets"].size() == 16);

    const auto incr = run_cli("facets --algorithm incremental --input " + fixture("p46"));
    REQUIRE(incr.exit_code == 0);
    CHECK(incr.out == r46.out);
}

TEST_CASE("facets subcommand handles a hand-written simplex", "[cli]") {
    const Polytope s3 = make_polytope(
        3, {{Rational(0), Rational(0), Rational(0)},
            {Rational(1), Rational(0), Rational(0)},
            {Rational(0), Rational(1), Rational(0)},
            {Rational(0), Rational(0), Rational(1)}},
        "3-simplex");
    const std::string path = write_scratch("simplex.json", dump_json(polytope_to_json(s3)));
    const auto r = run_cli("facets --input " + path);
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["facets"].size() == 4);
}

TEST_CASE("facets exit codes distinguish parse from validation errors", "[cli]") {
    const std::string garbled = write_scratch("garbled.json", "{not json");
    CHECK(run_cli("facets --input " + garbled).exit_code == 2);

    const std::string missing = (scratch_dir() / "does_not_exist.json").string();
    CHECK(run_cli("facets --input " + missing).exit_code == 2);

    // Full-rank failure: a square embedded in 3-space.
    const std::string flat = write_scratch(
        "flat.json",
        R"({"ambient_dim": 3, "vertices": [["0","0","0"],["1","0","0"],["0","1","0"],["1","1","0"]]})");
    CHECK(run_cli("facets --input " + flat).exit_code == 3);

    // A point interior to the square is not a vertex.
    const std::string redundant = write_scratch(
        "redundant.json",
        R"({"ambient_dim": 2, "vertices": [["0","0"],["2","0"],["0","2"],["2","2"],["1","1"]]})");
    CHECK(run_cli("facets --input " + redundant).exit_code == 3);

    CHECK(run_cli("facets").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("check subcommand reports classification and gates on flags", "[cli]") {
    const auto pass = run_cli("check --input " + fixture("p610") + " --neighborly 2");
    REQUIRE(pass.exit_code == 0);
    const json report = json::parse(pass.out);
    CHECK(report["max_neighborly_k"] == 2);

    const auto simplicial = run_cli("check --input " + fixture("p58") + " --simplicial 3");
    CHECK(simplicial.exit_code == 0);

    std::vector<Point> cube_vertices;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z)
                cube_vertices.push_back({Rational(x), Rational(y), Rational(z)});
    const std::string cube_path = write_scratch(
        "cube.json", dump_json(polytope_to_json(make_polytope(3, cube_vertices, "cube"))));
    const auto fail = run_cli("check --input " + cube_path + " --neighborly 2");
    CHECK(fail.exit_code == 1);
    CHECK(json::parse(fail.out)["max_neighborly_k"] == 1);
    const auto simple_ok = run_cli("check --input " + cube_path + " --simple 2");
    CHECK(simple_ok.exit_code == 0);
}

TEST_CASE("construct subcommands emit polytope JSON", "[cli]") {
    const auto cyc = run_cli("construct cyclic --dim 4 --vertices 7");
    REQUIRE(cyc.exit_code == 0);
    const json jc = json::parse(cyc.out);
    CHECK(jc["ambient_dim"] == 4);
    CHECK(jc["vertices"].size() == 7);
    const std::string cyc_path = write_scratch("cyclic47.json", cyc.out);
    const auto cyc_facets = run_cli("facets --input " + cyc_path);
    REQUIRE(cyc_facets.exit_code == 0);
    CHECK(json::parse(cyc_facets.out)["facets"].size() == 14);

    const auto ex = run_cli("construct example --name P58");
    REQUIRE(ex.exit_code == 0);
    CHECK(ex.out == slurp(fixture("p58")));

    const auto joined = run_cli("construct join --a " + fixture("p46") + " --b " + fixture("p46"));
    REQUIRE(joined.exit_code == 0);
    const json jj = json::parse(joined.out);
    CHECK(jj["ambient_dim"] == 9);
    CHECK(jj["vertices"].size() == 12);

    const auto pyr = run_cli("construct pyramid --base " + fixture("p46") + " --folds 2");
    REQUIRE(pyr.exit_code == 0);
    const json jp = json::parse(pyr.out);
    CHECK(jp["ambient_dim"] == 6);
    CHECK(jp["vertices"].size() == 8);

    CHECK(run_cli("construct example --name P47").exit_code == 2);
    CHECK(run_cli("construct cyclic --dim 4 --vertices 3").exit_code == 2);
}

TEST_CASE("construct writes to --output", "[cli]") {
    const std::string out_path = (scratch_dir() / "p46_out.json").string();
    const auto r = run_cli("construct example --name P46 --output " + out_path);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(out_path) == slurp(fixture("p46")));
}

TEST_CASE("bound subcommands print bound reports", "[cli]") {
    const auto msn_r = run_cli("bound msn --dim 5 --vertices 8");
    REQUIRE(msn_r.exit_code == 0);
    const json jm = json::parse(msn_r.out);
    CHECK(jm["name"] == "msn");
    CHECK(jm["value"] == 20);

    const auto known = run_cli("bound mn-known --dim 5 --vertices 8");
    REQUIRE(known.exit_code == 0);
    const json jk = json::parse(known.out);
    CHECK(jk["exact"] == true);
    CHECK(jk["value"] == 12);

    const auto bracket = run_cli("bound mn-known --dim 6 --vertices 10");
    REQUIRE(bracket.exit_code == 0);
    const json jb = json::parse(bracket.out);
    CHECK(jb["lower"] == 13);
    CHECK(jb["upper"] == 14);
    CHECK(jb["exact"] == false);

    CHECK(json::parse(run_cli("bound dim5 --vertices 9").out)["value"] == 12);
    CHECK(json::parse(run_cli("bound barnette --dim 6 --vertices 10").out)["value"] == 22);
    CHECK(json::parse(run_cli("bound neighborly --k 2 --vertices 8").out)["value"] == 20);
    CHECK(json::parse(run_cli("bound gtheorem --dim 5 --vertices 8 --k 2 --j 4").out)["value"] ==
          20);

    CHECK(run_cli("bound msn --dim 3 --vertices 7").exit_code == 2);
    CHECK(run_cli("bound msn --dim 5").exit_code == 2);
}

TEST_CASE("verify-paper passes on the shipped fixtures", "[cli]") {
    const std::string report_path = (scratch_dir() / "verify.json").string();
    const auto r = run_cli("verify-paper --fixtures " + std::string(POLYNEIGH_FIXTURES_DIR) +
                           " --output " + report_path);
    INFO(r.out);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    const json report = json::parse(slurp(report_path));
    CHECK(report["summary"]["failed"] == 0);
    CHECK(report["summary"]["passed"].get<int>() > 40);
}

TEST_CASE("verify-paper respects --filter", "[cli]") {
    const auto r =
        run_cli("verify-paper --fixtures " + std::string(POLYNEIGH_FIXTURES_DIR) + " --filter fig1");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line.rfind("[PASS]", 0) == 0) {
            ++rows;
            CHECK(line.find("fig1") != std::string::npos);
        }
    }
    CHECK(rows > 0);
    CHECK(rows < 20);
}

TEST_CASE("verify-paper fails on a corrupted fixture", "[cli]") {
    const fs::path dir = scratch_dir() / "bad_fixtures";
    fs::create_directories(dir);
    for (const char* stem : {"p46", "p58", "p59", "p610"})
        fs::copy_file(fixture(stem), dir / (std::string(stem) + ".json"),
                      fs::copy_options::overwrite_existing);
    // Flip one coordinate of P4,6.
    json doctored = json::parse(slurp((dir / "p46.json").string()));
    doctored["vertices"][5][0] = "0";
    std::ofstream(dir / "p46.json") << dump_json(doctored);

    const auto r = run_cli("verify-paper --fixtures " + dir.string());
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("[FAIL] fig1.p46.facets") != std::string::npos);

    const auto missing = run_cli("verify-paper --fixtures " + (dir / "nope").string());
    CHECK(missing.exit_code == 2);
}

TEST_CASE("cli output is deterministic across runs", "[cli]") {
    const auto a = run_cli("facets --input " + fixture("p610"));
    const auto b = run_cli("facets --input " + fixture("p610"));
    CHECK(a.out == b.out);
}
