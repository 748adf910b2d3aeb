#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "floquet/cli.hpp"

using namespace floquet;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("run with zero noise prints a zero mean") {
    const auto r = cli({"run", "--code", "honeycomb", "--layout", "falcon27",
                        "--p", "0", "--shots", "1000", "--threads", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("mean=0.000000") != std::string::npos);
    CHECK(r.out.find("max=0.000000") != std::string::npos);
}

TEST_CASE("identical seeds give byte-identical output files") {
    const std::string path1 = "cli_run_a.csv";
    const std::string path2 = "cli_run_b.csv";
    for (const auto& path : {path1, path2}) {
        const auto r =
            cli({"run", "--code", "honeycomb", "--layout", "falcon27", "--p",
                 "0.05", "--shots", "500", "--seed", "7", "--threads",
                 path == path1 ? "1" : "3", "--out", path});
        REQUIRE(r.code == 0);
    }
    CHECK(slurp(path1) == slurp(path2));
    std::remove(path1.c_str());
    std::remove(path2.c_str());
}

TEST_CASE("color run on hummingbird reports 16 plaquette-basis rates") {
    const std::string path = "cli_color.csv";
    const auto r = cli({"run", "--code", "color", "--layout", "hummingbird65",
                        "--p", "0.02", "--shots", "300", "--threads", "2",
                        "--out", path});
    REQUIRE(r.code == 0);
    std::ifstream in(path);
    std::string line;
    int data_rows = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("code,", 0) == 0)
            continue;
        ++data_rows;
    }
    CHECK(data_rows == 17);  // 8 plaquettes x 2 bases + ALL row
    std::remove(path.c_str());
}

TEST_CASE("sweep emits one aggregate row per p") {
    const auto r = cli({"sweep", "--code", "honeycomb", "--layout",
                        "falcon27", "--p-list", "0,0.05,0.1", "--shots",
                        "300", "--threads", "2"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::vector<double> means;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("code,", 0) == 0)
            continue;
        // code,layout,reset,p,shots,seed,mean,min,max
        size_t pos = 0;
        for (int field = 0; field < 6; ++field) pos = line.find(',', pos) + 1;
        means.push_back(std::stod(line.substr(pos, line.find(',', pos) - pos)));
    }
    REQUIRE(means.size() == 3);
    CHECK(means[0] == 0.0);
    CHECK(means[0] < means[1]);
    CHECK(means[1] < means[2]);
}

TEST_CASE("sweep without p values is a usage error") {
    const auto r = cli({"sweep", "--code", "honeycomb"});
    CHECK(r.code != 0);
    CHECK(r.err.find("empty p list") != std::string::npos);
}

TEST_CASE("sweep config file supplies defaults, flags override") {
    const std::string cfg = "sweep_cfg.json";
    {
        std::ofstream out(cfg);
        out << R"({"code": "honeycomb", "layout": "patch:1x1",
                   "p_list": [0.0], "shots": 200, "seed": 3})";
    }
    const auto r = cli({"sweep", "--config", cfg, "--threads", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("patch1x1") != std::string::npos);
    CHECK(r.out.find("0.000000,0.000000,0.000000") != std::string::npos);
    std::remove(cfg.c_str());
}

TEST_CASE("detectors subcommand prints one line per detector") {
    const auto r = cli({"detectors", "--code", "honeycomb", "--layout",
                        "falcon27"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        CHECK(line.rfind("D", 0) == 0);
        CHECK(line.find("plaquette=") != std::string::npos);
        CHECK(line.find("basis=native") != std::string::npos);
        CHECK(line.find("records=") != std::string::npos);
        ++lines;
    }
    CHECK(lines == 2);

    const auto rc = cli({"detectors", "--code", "color", "--layout",
                         "falcon27"});
    REQUIRE(rc.code == 0);
    std::istringstream cin(rc.out);
    int clines = 0;
    while (std::getline(cin, line)) ++clines;
    CHECK(clines == 4);
}

TEST_CASE("layout export round trips through the CLI") {
    const std::string path = "cli_layout.json";
    const auto r = cli({"layout", "--name", "falcon27", "--export", path});
    REQUIRE(r.code == 0);
    const Layout back = layout_from_json(slurp(path));
    CHECK(back.name == "falcon27");
    CHECK(back.plaquettes.size() == 2);
    CHECK(validate_coloring(back).empty());
    std::remove(path.c_str());

    const auto rv = cli({"layout", "--name", "patch:2x2", "--validate"});
    CHECK(rv.code == 0);
    CHECK(rv.out.find("0 violations") != std::string::npos);
}

TEST_CASE("calib summarize prints percentages with two decimals") {
    const std::string path = "cli_cal.json";
    {
        std::ofstream out(path);
        // All entries equal to 0.02 (idle extrapolation is identity here).
        out << R"({"device": "uniform", "meas_duration": 1.0,
                   "qubits": [{"id": 0, "prep_error": 0.02,
                               "meas_error": 0.02, "id_error": 0.02,
                               "id_duration": 1.0}],
                   "couplings": []})";
    }
    const auto r = cli({"calib", "summarize", path});
    CHECK(r.code == 0);
    CHECK(r.out == "uniform,2.00,0.00\n");
    std::remove(path.c_str());
}

TEST_CASE("errors surface as nonzero exits with messages") {
    const auto r = cli({"run", "--layout", "osprey433", "--shots", "10"});
    CHECK(r.code != 0);
    CHECK(r.err.find("unknown device") != std::string::npos);

    const auto r2 = cli({"run", "--code", "color", "--rounds", "6",
                         "--shots", "10"});
    CHECK(r2.code != 0);

    const auto r3 = cli({"frobnicate"});
    CHECK(r3.code != 0);
}

TEST_CASE("dump-shots writes a loadable table") {
    const std::string path = "cli_shots.bin";
    const auto r = cli({"run", "--code", "honeycomb", "--layout", "patch:1x1",
                        "--p", "0.1", "--shots", "64", "--seed", "5",
                        "--threads", "2", "--dump-shots", path});
    REQUIRE(r.code == 0);
    const ShotTable t = ShotTable::load_binary(path);
    CHECK(t.shots == 64);
    CHECK(t.num_records == 15);
    CHECK(t.base_seed == 5);
    std::remove(path.c_str());
}

TEST_CASE("json output mode") {
    const auto r = cli({"run", "--code", "honeycomb", "--layout", "patch:1x1",
                        "--p", "0", "--shots", "100", "--threads", "2",
                        "--json"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("\"aggregate\"") != std::string::npos);
    CHECK(r.out.find("\"mean\": 0.0") != std::string::npos);
}
