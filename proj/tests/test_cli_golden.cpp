#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string command = std::string(PCHG_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(PCHG_GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string fixture_path(const std::string& name) {
    return std::string(PCHG_FIXTURES_DIR) + "/" + name;
}

} // namespace

TEST_CASE("verify golden") {
    RunResult r = run_cli("verify --hypergraph " + fixture_path("fano.json") + " --coloring " +
                          fixture_path("c1.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output == golden("verify_fano_c1.json"));
}

TEST_CASE("refine golden") {
    RunResult r = run_cli("refine --hypergraph " + fixture_path("fano.json") + " --seed " +
                          fixture_path("mono7.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output == golden("refine_fano_mono.json"));
}

TEST_CASE("demo fano golden") {
    RunResult r = run_cli("demo fano");
    CHECK(r.exit_code == 0);
    CHECK(r.output == golden("demo_fano.json"));
}

TEST_CASE("exit codes") {
    CHECK(run_cli("params --hypergraph " + fixture_path("fano.json") + " --coloring " +
                  fixture_path("c1.json"))
              .exit_code == 0);

    // Validation error: malformed file.
    RunResult bad = run_cli("verify --hypergraph /dev/null --coloring " + fixture_path("c1.json"));
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("\"status\": \"error\"") != std::string::npos);

    // Not perfect: params on a bad coloring exits 3.
    std::string tmp = std::string(PCHG_GOLDEN_DIR) + "/../bad_coloring_tmp.json";
    {
        std::ofstream out(tmp);
        out << "{\"colors\": [0,0,1,1,1,1,1]}\n";
    }
    RunResult not_perfect =
        run_cli("params --hypergraph " + fixture_path("fano.json") + " --coloring " + tmp);
    CHECK(not_perfect.exit_code == 3);
    std::remove(tmp.c_str());

    // Unknown demo scenario.
    CHECK(run_cli("demo unknown").exit_code == 2);

    // Guard: transversals on 31 vertices.
    std::string big = std::string(PCHG_GOLDEN_DIR) + "/../big_tmp.json";
    {
        std::ofstream out(big);
        out << "{\"n\": 31, \"edges\": []}\n";
    }
    CHECK(run_cli("transversals --hypergraph " + big + " --k 1").exit_code == 5);
    std::remove(big.c_str());
}

TEST_CASE("tensor, eigen and transversal subcommands") {
    RunResult tensor = run_cli("tensor --hypergraph " + fixture_path("fano.json") +
                               " --coloring " + fixture_path("c1.json"));
    CHECK(tensor.exit_code == 0);
    CHECK(tensor.output.find("\"1/2\"") != std::string::npos);

    RunResult eigen = run_cli("eigen --hypergraph " + fixture_path("fano.json") + " --coloring " +
                              fixture_path("c1.json"));
    CHECK(eigen.exit_code == 0);
    CHECK(eigen.output.find("eigenvalues") != std::string::npos);

    RunResult spectrum = run_cli("transversal-spectrum --d 3 --r 6 --k 1");
    CHECK(spectrum.exit_code == 0);
    CHECK(spectrum.output.find("\"eigenvalues\"") != std::string::npos);

    RunResult transversals =
        run_cli("transversals --hypergraph " + fixture_path("fano.json") + " --k 1");
    CHECK(transversals.exit_code == 0);
    CHECK(transversals.output.find("\"count\": 0") != std::string::npos);
}

TEST_CASE("cover subcommands round trip through files") {
    std::string dir = std::string(PCHG_GOLDEN_DIR) + "/..";
    auto write = [&](const std::string& name, const std::string& body) {
        std::ofstream out(dir + "/" + name);
        out << body;
        return dir + "/" + name;
    };
    std::string mono3 = write("mono3_tmp.json", "{\"colors\": [0,0,0]}\n");

    RunResult common = run_cli("cover-common --hypergraph " + fixture_path("fano.json") +
                               " --coloring " + fixture_path("mono7.json") + " --hypergraph2 " +
                               fixture_path("f3.json") + " --coloring2 " + mono3);
    REQUIRE(common.exit_code == 0);
    auto payload = nlohmann::json::parse(common.output);
    std::string cover = write("cover_tmp.json", payload["cover"].dump());
    nlohmann::json map = payload["phi1"];
    map["source"] = "cover_tmp.json";
    map["target"] = fixture_path("fano.json");
    std::string phi1 = write("phi1_tmp.json", map.dump());

    // Explicit flags.
    RunResult verified = run_cli("cover-verify --cover " + cover + " --hypergraph " +
                                 fixture_path("fano.json") + " --map " + phi1);
    CHECK(verified.exit_code == 0);
    CHECK(verified.output.find("\"k\": 9") != std::string::npos);

    // File references inside the map JSON resolve relative to the map file.
    RunResult by_reference = run_cli("cover-verify --map " + phi1);
    CHECK(by_reference.exit_code == 0);
    CHECK(by_reference.output.find("\"k\": 9") != std::string::npos);

    RunResult lifted = run_cli("lift-coloring --map " + phi1 + " --coloring " +
                               fixture_path("c1.json"));
    CHECK(lifted.exit_code == 0);
    CHECK(nlohmann::json::parse(lifted.output)["colors"].size() == 63);

    RunResult multipartite =
        run_cli("cover-multipartite --hypergraph " + fixture_path("fano.json"));
    CHECK(multipartite.exit_code == 0);

    std::remove(mono3.c_str());
    std::remove(cover.c_str());
    std::remove(phi1.c_str());
}
