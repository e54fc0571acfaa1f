#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "triality/cli.hpp"

namespace {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

CliResult run(std::initializer_list<std::string> args) {
    std::vector<std::string> storage{"triality"};
    storage.insert(storage.end(), args);
    std::vector<const char*> argv;
    argv.reserve(storage.size());
    for (const std::string& s : storage) {
        argv.push_back(s.c_str());
    }
    std::ostringstream out, err;
    const int code =
        triality::run_cli(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data_path(const char* name) {
    return std::string(TRIALITY_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("analyze: Bell state report on stdout") {
    const CliResult r = run({"analyze", "--input", data_path("bell.json")});
    CHECK(r.exit_code == 0);
    CHECK(r.err.empty());
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["pure"] == true);
    CHECK(j["concurrence"] == 1.0);
    CHECK(j["eof"] == 1.0);
    CHECK(j["bell"] == 2.82842712475);
}

TEST_CASE("analyze: csv format and --out file") {
    namespace fs = std::filesystem;
    const fs::path tmp = fs::temp_directory_path() / "triality_report.csv";
    const CliResult r = run({"analyze", "--input", data_path("werner05.json"),
                             "--format", "csv", "--out", tmp.string()});
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream in(tmp);
    REQUIRE(in.good());
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(header.rfind("concurrence,V1,V2", 0) == 0);
    CHECK(row.rfind("0.25,", 0) == 0);  // Werner p=0.5 concurrence
    fs::remove(tmp);

    const CliResult bad = run({"analyze", "--input", data_path("bell.json"),
                               "--format", "yaml"});
    CHECK(bad.exit_code == 2);
}

TEST_CASE("verify: clean run, determinism, honest failure") {
    const CliResult a = run({"verify", "--samples", "40", "--seed", "9"});
    CHECK(a.exit_code == 0);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["pass"] == true);
    CHECK(j["seed"] == 9);
    REQUIRE(j["suites"].size() == 4);
    CHECK(j["suites"][0]["name"] == "triality");
    CHECK(j["suites"][3]["name"] == "bell");
    for (const auto& suite : j["suites"]) {
        CHECK(suite["pass"] == true);
    }

    const CliResult b = run({"verify", "--samples", "40", "--seed", "9"});
    CHECK(b.out == a.out);

    // an impossible tolerance must fail loudly, not silently pass
    const CliResult c = run({"verify", "--samples", "40", "--seed", "9",
                             "--tol.triality=1e-18"});
    CHECK(c.exit_code == 1);
    const auto jc = nlohmann::json::parse(c.out);
    CHECK(jc["pass"] == false);
    CHECK(jc["suites"][0]["pass"] == false);
    CHECK(jc["suites"][1]["pass"] == true);

    // space-separated tolerance spelling
    const CliResult d = run({"verify", "--samples", "40", "--seed", "9",
                             "--tol.bell", "1e-18"});
    CHECK(d.exit_code == 1);
}

TEST_CASE("sweep: csv shape and json variant") {
    const CliResult r = run({"sweep", "--family", "schmidt", "--points", "3"});
    CHECK(r.exit_code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "parameter,C,V1,P1,S1,E,D1,c1,B");
    int rows = 0;
    while (std::getline(in, line)) {
        if (!line.empty()) {
            ++rows;
        }
    }
    CHECK(rows == 3);

    const CliResult w = run({"sweep", "--family", "werner", "--points", "5",
                             "--format", "json"});
    CHECK(w.exit_code == 0);
    const auto j = nlohmann::json::parse(w.out);
    REQUIRE(j.size() == 5);
    CHECK(j[0]["parameter"] == 0.0);
    CHECK(j[4]["parameter"] == 1.0);
    CHECK(j[4]["C"] == 1.0);
    CHECK(!j[0].contains("B"));

    const CliResult bad = run({"sweep", "--family", "ghz"});
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("UnknownFamily") != std::string::npos);
}

TEST_CASE("simulate: pure and mixed summaries") {
    const CliResult pure =
        run({"simulate", "--input", data_path("bell.json"), "--grid", "32"});
    CHECK(pure.exit_code == 0);
    const auto j = nlohmann::json::parse(pure.out);
    CHECK(j["kind"] == "pure");
    CHECK(j["transducers"] == "schmidt_aligned");
    CHECK(j["grid_n"] == 32);
    CHECK(std::abs(j["v12"].get<double>() - 1.0) < 1e-9);
    CHECK(std::abs(j["triality_residual_1"].get<double>()) < 1e-9);

    const CliResult mixed = run(
        {"simulate", "--input", data_path("bell_mixture.json"), "--grid", "32"});
    CHECK(mixed.exit_code == 0);
    const auto jm = nlohmann::json::parse(mixed.out);
    CHECK(jm["kind"] == "mixed");
    CHECK(jm["transducers"] == "symmetric");
    CHECK(jm["concurrence"] == 0.0);
    CHECK(std::abs(jm["v12"].get<double>() - 1.0 / 3.0) < 1e-9);
    CHECK(jm["v12_exceeds_concurrence"] == true);

    const CliResult tiny =
        run({"simulate", "--input", data_path("bell.json"), "--grid", "4"});
    CHECK(tiny.exit_code == 2);
}

TEST_CASE("simulate: fringe CSV lands in --out") {
    namespace fs = std::filesystem;
    const fs::path tmp = fs::temp_directory_path() / "triality_fringes.csv";
    const CliResult r = run({"simulate", "--input", data_path("bell.json"),
                             "--grid", "16", "--out", tmp.string()});
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["csv"] == tmp.string());

    std::ifstream in(tmp);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "phi1,phi2,p12,p1,p2");
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) {
            ++rows;
        }
    }
    CHECK(rows == 256);
    fs::remove(tmp);
}

TEST_CASE("bell: formula vs optimizer") {
    const CliResult r = run({"bell", "--input", data_path("bell.json")});
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["formula"] == 2.82842712475);
    CHECK(j["pass"] == true);
    CHECK(j["gap"].get<double>() <= 1e-3);

    const CliResult m = run({"bell", "--input", data_path("werner05.json")});
    CHECK(m.exit_code == 0);
    const auto jm = nlohmann::json::parse(m.out);
    CHECK(jm["mixed"] == true);
    CHECK(jm.contains("optimized"));
}

TEST_CASE("usage errors exit 2, help exits 0") {
    const CliResult missing = run({"analyze"});
    CHECK(missing.exit_code == 2);
    CHECK(!missing.err.empty());

    const CliResult nofile =
        run({"analyze", "--input", "/definitely/not/here.json"});
    CHECK(nofile.exit_code == 2);
    CHECK(nofile.err.find("ParseError") != std::string::npos);

    const CliResult unknown = run({"frobnicate"});
    CHECK(unknown.exit_code == 2);

    const CliResult badtol = run({"verify", "--tol.nope=1"});
    CHECK(badtol.exit_code == 2);

    const CliResult badval = run({"verify", "--tol.bell=abc"});
    CHECK(badval.exit_code == 2);

    const CliResult help = run({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("analyze") != std::string::npos);
    CHECK(help.out.find("simulate") != std::string::npos);

    const CliResult none = run({});
    CHECK(none.exit_code == 2);
}
