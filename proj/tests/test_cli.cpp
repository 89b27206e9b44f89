#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pncc/cli.hpp"

using pncc::cli::parse_degrees;
using pncc::cli::run_cli;

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content) : path(name) {
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

const char* kGf7Config =
    "field p=7 m=1\nset 0 1\nset subgroup:2,withzero\nset subgroup:2,withzero\n";
const char* kPlaneConfig = "field p=2 m=1\nset 0 1\nset 0 1\nset 0 1\n";
const char* kTowerConfig = "field p=5 m=2\nset subfield:5\nset subfield:5\nset subfield:25\n";

}  // namespace

TEST_CASE("validate classifies specs and reports violations") {
    TempFile gf7("cli_gf7.cfg", kGf7Config);
    CliRun r = run({"validate", "--spec", gf7.path});
    CHECK(r.code == 0);
    CHECK(r.out == "valid=true\nclassification=nested-general\n");

    TempFile tower("cli_tower.cfg", kTowerConfig);
    r = run({"validate", "--spec", tower.path});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "valid=true\n"
          "classification=product-of-fields\n"
          "orders=5,5,25\n"
          "exponents=1,2,1\n");

    TempFile bad("cli_bad.cfg", "field p=2 m=2\nset 0 1 2\nset 0 1 2\n");
    r = run({"validate", "--spec", bad.path});
    CHECK(r.code == 1);
    CHECK(r.out ==
          "valid=false\n"
          "violation=closure violated: 2 * 2 = 3 is in A_1 * A_0 but not in A_1\n");

    r = run({"validate", "--spec", "missing_file.cfg"});
    CHECK(r.code == 2);
    CHECK(r.err.find("config error:") == 0);
}

TEST_CASE("table emits the parameter rows") {
    TempFile gf7("cli_gf7_table.cfg", kGf7Config);
    CliRun r = run({"table", "--spec", gf7.path, "--degree", "3", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "degree,length,dimension,distance,status\n"
          "1,21,3,16,conjectured\n"
          "2,21,6,12,conjectured\n"
          "3,21,10,8,conjectured\n");

    TempFile tower("cli_tower_table.cfg", kTowerConfig);
    r = run({"table", "--spec", tower.path, "--degrees", "1..10,25", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "degree,length,dimension,distance,status\n"
          "1,151,3,125,exact\n"
          "2,151,6,100,exact\n"
          "3,151,10,75,exact\n"
          "4,151,15,50,exact\n"
          "5,151,21,25,exact\n"
          "6,151,27,24,exact\n"
          "7,151,33,23,exact\n"
          "8,151,39,22,exact\n"
          "9,151,45,21,exact\n"
          "10,151,51,20,exact\n"
          "25,151,141,5,exact\n");

    // Degree 0 produces just the header.
    r = run({"table", "--spec", gf7.path, "--degree", "0", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "degree,length,dimension,distance,status\n");

    // json and text render the same rows; two runs are byte-identical.
    CliRun j1 = run({"table", "--spec", gf7.path, "--degree", "2", "--format", "json"});
    CliRun j2 = run({"table", "--spec", gf7.path, "--degree", "2", "--format", "json"});
    CHECK(j1.code == 0);
    CHECK(j1.out == j2.out);
    CHECK(j1.out.find("\"rows\"") != std::string::npos);
    CliRun t = run({"table", "--spec", gf7.path, "--degree", "2", "--format", "table"});
    CHECK(t.code == 0);
    CHECK(t.out.find("degree") != std::string::npos);

    r = run({"table", "--spec", gf7.path, "--degree", "2", "--format", "yaml"});
    CHECK(r.code == 2);
}

TEST_CASE("table --out writes exactly the stdout bytes") {
    TempFile gf7("cli_gf7_out.cfg", kGf7Config);
    const std::string out_path = "cli_table_out.csv";
    CliRun direct = run({"table", "--spec", gf7.path, "--degree", "3", "--format", "csv"});
    CliRun filed =
        run({"table", "--spec", gf7.path, "--degree", "3", "--format", "csv", "--out", out_path});
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    CHECK(slurp(out_path) == direct.out);
    std::remove(out_path.c_str());
}

TEST_CASE("genmat writes the evaluation matrix") {
    TempFile line("cli_line.cfg", "field p=2 m=1\nset 0 1\nset 0 1\n");
    const std::string out_path = "cli_line_matrix.txt";
    CliRun r = run({"genmat", "--spec", line.path, "--degree", "1", "--out", out_path});
    CHECK(r.code == 0);
    CHECK(r.out == "rank=2\n");
    CHECK(slurp(out_path) == "2 1 1 1 2 3\n0 1 1\n1 1 0\n");
    std::remove(out_path.c_str());

    r = run({"genmat", "--spec", line.path, "--degree", "1"});
    CHECK(r.code == 2);  // --out is required
}

TEST_CASE("mindist agrees with the oracle on small exact codes") {
    TempFile plane("cli_plane.cfg", kPlaneConfig);
    CliRun r = run({"mindist", "--spec", plane.path, "--degree", "1"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "degree=1\n"
          "length=7\n"
          "formula=4\n"
          "status=exact\n"
          "witness_weight=4\n"
          "oracle=4\n"
          "result=agree\n");
}

TEST_CASE("mindist skips oversized spaces but keeps the witness check") {
    TempFile tower("cli_tower_mindist.cfg", kTowerConfig);
    CliRun r = run({"mindist", "--spec", tower.path, "--degree", "3"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "degree=3\n"
          "length=151\n"
          "formula=75\n"
          "status=exact\n"
          "witness_weight=75\n"
          "oracle=skipped-budget\n"
          "result=skipped\n");

    TempFile gf7("cli_gf7_mindist.cfg", kGf7Config);
    r = run({"mindist", "--spec", gf7.path, "--degree", "2", "--budget-codewords", "100"});
    CHECK(r.code == 0);
    CHECK(r.out.find("oracle=skipped-budget\n") != std::string::npos);
    CHECK(r.out.find("result=skipped\n") != std::string::npos);
}

TEST_CASE("mindist output is worker-count independent") {
    TempFile gf7("cli_gf7_workers.cfg", kGf7Config);
    CliRun one = run({"mindist", "--spec", gf7.path, "--degree", "2", "--workers", "1"});
    CliRun eight = run({"mindist", "--spec", gf7.path, "--degree", "2", "--workers", "8"});
    CHECK(one.code == 0);
    CHECK(one.out == eight.out);
    CHECK(one.out.find("oracle=12\n") != std::string::npos);
    CHECK(one.out.find("result=agree\n") != std::string::npos);

    CliRun bad = run({"mindist", "--spec", gf7.path, "--degree", "2", "--workers", "0"});
    CHECK(bad.code == 2);
}

TEST_CASE("conjecture emits the serialized report") {
    TempFile gf7("cli_gf7_conj.cfg", kGf7Config);
    CliRun r = run({"conjecture", "--spec", gf7.path, "--degrees", "1,2"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "spec p=7 m=1 sets=0,1;0,1,2,4;0,1,2,4 length=21\n"
          "degree=1 conjectured=16 measured=16 status=verified\n"
          "degree=2 conjectured=12 measured=12 status=verified\n");

    const std::string out_path = "cli_conj_out.txt";
    CliRun filed = run({"conjecture", "--spec", gf7.path, "--degrees", "1,2", "--out", out_path});
    CHECK(filed.code == 0);
    CHECK(slurp(out_path) == r.out);
    std::remove(out_path.c_str());

    TempFile plane("cli_plane_conj.cfg", kPlaneConfig);
    r = run({"conjecture", "--spec", plane.path, "--degrees", "1..3"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "spec p=2 m=1 sets=0,1;0,1;0,1 length=7\n"
          "degree=1 conjectured=4 measured=4 status=exact-theorem\n"
          "degree=2 conjectured=2 measured=2 status=exact-theorem\n"
          "degree=3 conjectured=1 measured=1 status=exact-theorem\n");
}

TEST_CASE("prm tabulates projective Reed-Muller parameters") {
    CliRun r = run({"prm", "--n", "2", "--q", "2", "--degrees", "1..3", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "degree,length,dimension,distance,status\n"
          "1,7,3,4,exact\n"
          "2,7,6,2,exact\n"
          "3,7,7,1,exact\n");

    r = run({"prm", "--n", "1", "--q", "4", "--degrees", "1..2", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "degree,length,dimension,distance,status\n"
          "1,5,2,4,exact\n"
          "2,5,3,3,exact\n");

    CHECK(run({"prm", "--n", "2", "--q", "6", "--degree", "1"}).code == 2);
    CHECK(run({"prm", "--n", "0", "--q", "2", "--degree", "1"}).code == 2);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"table"}).code == 2);            // --spec required
    CHECK(run({"mindist", "--spec"}).code == 2);
    CliRun help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("table") != std::string::npos);
}

TEST_CASE("degree lists parse ranges and reject junk") {
    CHECK(parse_degrees("1..10,25") ==
          std::vector<long long>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 25});
    CHECK(parse_degrees("5") == std::vector<long long>{5});
    CHECK(parse_degrees("3..3") == std::vector<long long>{3});
    CHECK(parse_degrees("2,4,8") == std::vector<long long>{2, 4, 8});

    CHECK_THROWS_AS(parse_degrees(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_degrees("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_degrees("5..3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_degrees("-3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_degrees("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_degrees("1.."), std::invalid_argument);
    CHECK_THROWS_AS(parse_degrees("..5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_degrees("1..2000000"), std::invalid_argument);
    CHECK_THROWS_AS(parse_degrees("3x"), std::invalid_argument);
}
