#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mobius/cli.hpp"
#include "mobius/reference_tables.hpp"
#include "mobius/spectrum.hpp"
#include "mobius/thermo.hpp"

using namespace mobius;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
}

} // namespace

TEST_CASE("spectrum command emits one row per (n, m)") {
    const auto r = run({"spectrum", "--n-min", "0", "--n-max", "3"});
    CHECK(r.code == cli::kExitOk);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 13); // header + 4 n * 3 m
    CHECK(lines[0] == "n,m,E");

    // emitted values round-trip through re-parse bit-exactly
    const auto model = tables::reference_model(1);
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto cells = split_csv(lines[i]);
        REQUIRE(cells.size() == 3);
        const int n = std::stoi(cells[0]);
        const double m = std::stod(cells[1]);
        const double e = std::stod(cells[2]);
        CHECK(e == spectrum::energy(model, {n, m}));
    }
}

TEST_CASE("spectrum command json format") {
    const auto r = run({"spectrum", "--n-min", "0", "--n-max", "0",
                        "--m-list", "0", "--format", "json"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("\"E\"") != std::string::npos);
    CHECK(r.out.find("\"n\": 0") != std::string::npos);
}

TEST_CASE("spectrum command with empty ranges emits only the header") {
    const auto r = run({"spectrum", "--n-min", "2", "--n-max", "1"});
    CHECK(r.code == cli::kExitOk);
    CHECK(lines_of(r.out).size() == 1);
}

TEST_CASE("spectrum command ordering is deterministic") {
    const auto a = run({"spectrum"});
    const auto b = run({"spectrum"});
    CHECK(a.out == b.out);
}

TEST_CASE("invalid config exits with the config error code") {
    {
        std::ofstream f("bad_config.json");
        f << R"({"V0":0.2,"a":1,"b":1,"q":0.1,"eta":0.3,"alpha":0,
                 "tau0":0,"zeta":0,"flux_model":"linear","units":"natural"})";
    }
    const auto r = run({"spectrum", "--config", "bad_config.json"});
    CHECK(r.code == cli::kExitConfigError);
    CHECK(!r.err.empty());
    std::remove("bad_config.json");

    const auto missing = run({"spectrum", "--config", "no_such_file.json"});
    CHECK(missing.code == cli::kExitConfigError);
}

TEST_CASE("usage errors exit with the usage code") {
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"unknown"}).code == cli::kExitUsage);
    CHECK(run({"spectrum", "positional"}).code == cli::kExitUsage);
    CHECK(run({"spectrum", "--n-min"}).code == cli::kExitUsage);
    CHECK(run({"figure", "--id", "17"}).code == cli::kExitUsage);
    CHECK(run({"figure", "--id", "3", "--panel", "e"}).code == cli::kExitUsage);
    CHECK(run({"figure", "--panel", "a"}).code == cli::kExitUsage);
}

TEST_CASE("figure command emits x,y sweep data") {
    const auto r = run({"figure", "--id", "1", "--panel", "d"});
    CHECK(r.code == cli::kExitOk);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 22); // header + integer grid 0..20
    CHECK(lines[0] == "n_max,Z");
    // monotone increase with the level count
    double prev = -1.0;
    for (size_t i = 1; i < lines.size(); ++i) {
        const double z = std::stod(split_csv(lines[i])[1]);
        CHECK(z > prev);
        prev = z;
    }
}

TEST_CASE("figure 1a grid is monotone along both axes") {
    // one strict direction along tau0 for each level count, and strict
    // growth across the level-count axis at fixed tau0 (the quantized
    // spacing of the plotted family)
    const auto model = tables::reference_model(1);
    thermo::ThermoInput in;
    in.beta = 1.0;
    std::vector<std::vector<double>> family;
    for (int n_max : {2, 3, 4}) {
        in.n_max = n_max;
        cli::SweepSpec spec(model, in);
        spec.variable = cli::SweepVariable::Tau0;
        spec.start = 0.0;
        spec.stop = 2.0;
        spec.steps = 50;
        std::vector<double> z;
        for (const auto& pt : cli::run_sweep(spec)) z.push_back(pt.props.Z);
        for (size_t i = 1; i < z.size(); ++i) CHECK(z[i] < z[i - 1]);
        family.push_back(z);
    }
    for (size_t k = 1; k < family.size(); ++k)
        for (size_t i = 0; i < family[k].size(); ++i)
            CHECK(family[k][i] > family[k - 1][i]);
}

TEST_CASE("tables command produces the full reproduction report") {
    const auto r = run({"tables", "--which", "table1", "--format", "csv"});
    CHECK(r.code == cli::kExitOk);
    const auto lines = lines_of(r.out);
    CHECK(lines.size() == 49); // header + 12 (n, m) rows x 4 field columns

    const auto rj = run({"tables", "--which", "table2"});
    CHECK(rj.code == cli::kExitOk);
    CHECK(rj.out.find("\"rows\"") != std::string::npos);
    CHECK(rj.out.find("\"checks\"") != std::string::npos);
    CHECK(rj.out.find("\"convention_note\"") != std::string::npos);

    CHECK(run({"tables", "--which", "table3"}).code == cli::kExitUsage);
}

TEST_CASE("reproduction report covers every cell exactly once") {
    for (int table : {1, 2}) {
        const auto report = cli::reproduce_table(table);
        CHECK(report.rows.size() == 48);
        // uniqueness of (n, m, zeta, tau0)
        for (size_t i = 0; i < report.rows.size(); ++i)
            for (size_t j = i + 1; j < report.rows.size(); ++j) {
                const auto& a = report.rows[i];
                const auto& b = report.rows[j];
                CHECK((a.n != b.n || a.m != b.m || a.zeta != b.zeta ||
                       a.tau0 != b.tau0));
            }
        for (const auto& c : report.checks)
            if (c.name != "sign_agreement_count") CHECK(c.pass);
    }
}

TEST_CASE("thermo command sweeps") {
    const auto r = run({"thermo", "--sweep", "beta", "--start", "0.5", "--stop",
                        "2.0", "--steps", "10"});
    CHECK(r.code == cli::kExitOk);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 11);
    CHECK(lines[0] == "beta,Z,F,U,S,C,M,chi,I,method_deviation");
    CHECK(split_csv(lines[1])[0] == "0.5");
}

TEST_CASE("thermo command json format") {
    const auto r = run({"thermo", "--beta", "1", "--format", "json"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("\"Z\"") != std::string::npos);
}

TEST_CASE("validate fast passes on a fresh build") {
    const auto r = run({"validate", "--level", "fast"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("\"all_pass\": true") != std::string::npos);
}

TEST_CASE("output lands in the file named by --out") {
    const auto r = run({"spectrum", "--out", "spectrum_test_out.csv"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.empty());
    std::ifstream f("spectrum_test_out.csv");
    REQUIRE(f.good());
    std::string header;
    std::getline(f, header);
    CHECK(header == "n,m,E");
    f.close();
    std::remove("spectrum_test_out.csv");
}
