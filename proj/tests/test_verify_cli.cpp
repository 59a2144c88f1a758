#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "rcg/cli.hpp"
#include "rcg/verify.hpp"

using namespace rcg;

namespace {

Permutation P(std::vector<int> v) { return Permutation::from_one_line(std::move(v)); }

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("verify: schubert backends") {
    const auto rep = verify::schubert_backends(P({3, 2, 1, 5, 4}), 5);
    CHECK(rep.passed());
    CHECK(rep.checks.size() == 2);
    CHECK(rep.w == "3,2,1,5,4");
    CHECK(rep.text() == "PASS w=3,2,1,5,4 checks=2");
    CHECK(rep.text().find("elapsed") == std::string::npos);

    const auto j = nlohmann::json::parse(rep.json());
    CHECK(j["pass"] == true);
    CHECK(j["w"] == "3,2,1,5,4");
    CHECK(j["checks"].size() == 2);
    CHECK(j["elapsed_ms"].is_number());
}

TEST_CASE("verify: pieri identity") {
    const auto rep = verify::pieri_identity(P({2, 1, 3}), 2, 1);
    CHECK(rep.passed());
    CHECK(rep.has_rm);
    bool monk_seen = false;
    for (const auto& c : rep.checks) monk_seen |= c.name == "monk-targets";
    CHECK(monk_seen);
    CHECK(rep.text() == "PASS w=2,1,3 r=2 m=1 checks=4");

    CHECK(verify::pieri_identity(P({1, 3, 2}), 2, 2).passed());
    CHECK(verify::pieri_identity(P({3, 1, 2}), 1, 3).passed());
}

TEST_CASE("verify: insertion bijection") {
    CHECK(verify::insertion_bijection(P({2, 1, 3}), 2, 1, false).passed());
    const auto rep = verify::insertion_bijection(P({1, 3, 2}), 2, 2, true);
    CHECK(rep.passed());
    bool rollback_seen = false;
    for (const auto& c : rep.checks)
        rollback_seen |= c.name == "rollback-recovers-w";
    CHECK(rollback_seen);
}

TEST_CASE("verify: sweep composes reports") {
    verify::SweepOptions so;
    so.include_backends = true;
    const auto reports = verify::sweep(2, 1, 1, so);
    CHECK(reports.size() == 2 * 3);  // backends + identity + bijection per w
    for (const auto& rep : reports) CHECK(rep.passed());
}

TEST_CASE("verify: monk targets") {
    CHECK(verify::monk_targets(P({2, 1, 3}), 1) ==
          std::vector<Permutation>{P({3, 1, 2})});
    CHECK(verify::monk_targets(P({2, 1, 3}), 2) ==
          std::vector<Permutation>{P({2, 3, 1}), P({3, 1, 2})});
    CHECK(verify::monk_targets(Permutation(), 1) ==
          std::vector<Permutation>{P({2, 1})});
}

TEST_CASE("cli: schubert") {
    auto res = run_cli({"schubert", "--w", "3,2,1"});
    CHECK(res.code == 0);
    CHECK(res.out == "x1^2*x2\n");

    res = run_cli({"schubert", "--w", "2,1,4,3", "--backend", "rc"});
    CHECK(res.out == "x1^2 + x1*x2 + x1*x3\n");

    res = run_cli({"schubert", "--w", "1,3,2", "--backend", "ddiff", "--n", "4"});
    CHECK(res.out == "x1 + x2\n");

    res = run_cli({"schubert", "--w", "2,2"});
    CHECK(res.code == 2);
    CHECK_FALSE(res.err.empty());

    res = run_cli({"schubert", "--w", "3,1,2", "--backend", "nope"});
    CHECK(res.code == 2);
}

TEST_CASE("cli: rc enumeration") {
    auto res = run_cli({"rc", "--w", "1,3,2", "--count"});
    CHECK(res.code == 0);
    CHECK(res.out == "2\n");

    res = run_cli({"rc", "--w", "1,3,2"});
    CHECK(res.out == "{\"window\":3,\"crossings\":[[1,2]]}\n"
                     "{\"window\":3,\"crossings\":[[2,1]]}\n");

    res = run_cli({"rc", "--w", "2,1", "--render"});
    CHECK(res.code == 0);
    CHECK(res.out == "  12\n1 +.\n2 ..\n");
}

TEST_CASE("cli: insert with trace") {
    auto res = run_cli({"insert", "--graph", R"({"window":2,"crossings":[[1,1]]})",
                    "--r", "2", "--comp", "0,1", "--trace"});
    CHECK(res.code == 0);
    CHECK(res.out ==
          "ROW 2\n"
          "ADD (2,1) pair=(2,3) case=1\n"
          "ROW 1\n"
          "{\"window\":3,\"crossings\":[[1,1],[2,1]]}\n"
          "ledger: (2,3)\n");

    res = run_cli({"insert", "--r", "1", "--comp", "2"});
    CHECK(res.code == 0);
    CHECK(res.out == "{\"window\":3,\"crossings\":[[1,1],[1,2]]}\n"
                     "ledger: (1,2),(1,3)\n");

    res = run_cli({"insert", "--r", "2", "--comp", "0,0", "--check-steps"});
    CHECK(res.code == 0);
    CHECK(res.out == "{\"window\":1,\"crossings\":[]}\n"
                     "ledger: (none)\n");

    res = run_cli({"insert", "--r", "2", "--comp", "1"});
    CHECK(res.code == 2);  // part count mismatch

    res = run_cli({"insert", "--graph", "junk", "--r", "1", "--comp", "1"});
    CHECK(res.code == 2);
}

TEST_CASE("cli: invert") {
    auto res = run_cli({"invert", "--graph",
                    R"({"window":3,"crossings":[[1,1],[2,1]]})", "--w", "2,1,3",
                    "--r", "2", "--ledger", "(2,3)", "--trace"});
    CHECK(res.code == 0);
    CHECK(res.out ==
          "ROW 1\n"
          "ROW 2\n"
          "DEL (2,1) pair=(2,3)\n"
          "{\"window\":2,\"crossings\":[[1,1]]}\n"
          "comp: 0,1\n");

    // ledger derived from the expansion when omitted
    res = run_cli({"invert", "--graph", R"({"window":3,"crossings":[[1,1],[2,1]]})",
               "--w", "2,1,3", "--r", "2"});
    CHECK(res.code == 0);
    CHECK(res.out == "{\"window\":2,\"crossings\":[[1,1]]}\ncomp: 0,1\n");

    res = run_cli({"invert", "--graph", R"({"window":3,"crossings":[[1,1],[2,1]]})",
               "--w", "2,1,3", "--r", "2", "--ledger", "(9"});
    CHECK(res.code == 2);
}

TEST_CASE("cli: graph argument from a file") {
    const std::string path = "cli_graph_arg.json";
    {
        std::ofstream f(path);
        f << R"({"window":2,"crossings":[[1,1]]})";
    }
    const auto res = run_cli({"render", "--graph", "@" + path});
    CHECK(res.code == 0);
    CHECK(res.out == "  12\n1 +.\n2 ..\n");
    std::remove(path.c_str());

    CHECK(run_cli({"render", "--graph", "@missing_file.json"}).code == 2);
}

TEST_CASE("cli: expand") {
    const auto res = run_cli({"expand", "--w", "2,1,3", "--r", "2", "--m", "1"});
    CHECK(res.code == 0);
    CHECK(res.out == "2,3,1 ledger: (2,3)\n3,1,2 ledger: (1,3)\n");

    const auto zero = run_cli({"expand", "--w", "2,1", "--r", "1", "--m", "0"});
    CHECK(zero.out == "2,1 ledger: (none)\n");
}

TEST_CASE("cli: pieri verify") {
    auto res = run_cli({"pieri", "verify", "--w", "2,1,3", "--r", "2", "--m", "1"});
    CHECK(res.code == 0);
    CHECK(res.out.find("PASS w=2,1,3 r=2 m=1") != std::string::npos);
    CHECK(res.out.find("summary: 2 reports, 0 failures\n") != std::string::npos);

    res = run_cli({"pieri", "verify", "--w", "2,1,3", "--r", "2", "--m", "1",
               "--all", "--json"});
    CHECK(res.code == 0);
    std::istringstream lines(res.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j["pass"] == true);
        ++count;
    }
    CHECK(count == 3);

    res = run_cli({"pieri", "verify", "--n", "2", "--rmax", "1", "--mmax", "1"});
    CHECK(res.code == 0);
    CHECK(res.out.find("summary: 4 reports, 0 failures\n") != std::string::npos);

    CHECK(run_cli({"pieri", "verify"}).code == 2);
    CHECK(run_cli({"pieri", "verify", "--w", "2,1", "--n", "2"}).code == 2);
    CHECK(run_cli({"pieri", "verify", "--w", "2,1"}).code == 2);
}

TEST_CASE("cli: usage errors and help") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"schubert"}).code == 2);          // missing --w
    CHECK(run_cli({"schubert", "--bogus"}).code == 2);
    const auto help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("schubert") != std::string::npos);
}
