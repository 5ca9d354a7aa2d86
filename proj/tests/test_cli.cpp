#include <doctest.h>

#include <sstream>

#include "hamfree/cli.hpp"
#include "hamfree/canonical.hpp"
#include "hamfree/graph6.hpp"
#include "hamfree/constructions.hpp"

using namespace hamfree;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = run_cli(std::move(args), in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("formula subcommands") {
    auto r = cli({"formula", "turan-edges", "--n", "10", "--r", "4"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "37\n");
    auto b = cli({"formula", "bound", "--property", "ham", "--n", "7", "--r", "5"});
    CHECK(b.exit_code == 0);
    CHECK(b.out == "15\n");
    auto refused = cli({"formula", "bound", "--property", "ham", "--n", "9", "--r", "4"});
    CHECK(refused.exit_code == 3);
    CHECK(refused.out.find("hypotheses_not_met") != std::string::npos);
    CHECK(refused.out.find("\"min_n\":11") != std::string::npos);
}

TEST_CASE("construct and check pipe through graph6") {
    auto turan = cli({"construct", "turan", "--n", "10", "--r", "4"});
    CHECK(turan.exit_code == 0);
    Graph t = from_graph6(turan.out.substr(0, turan.out.size() - 1));
    CHECK(t.edge_count() == 37);

    auto multi = cli({"construct", "multipartite", "--parts", "6,2,2,1"});
    std::string g6 = multi.out.substr(0, multi.out.size() - 1);
    auto check = cli({"check", "--property", "ham", g6});
    CHECK(check.exit_code == 0);
    CHECK(check.out.find("\"holds\":false") != std::string::npos);

    Graph cycle5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    auto c5 = cli({"check", "--property", "ham", "--stdin"}, to_graph6(cycle5) + "\n");
    CHECK(c5.exit_code == 0);
    CHECK(c5.out.find("\"holds\":true") != std::string::npos);
}

TEST_CASE("construct family and g-star") {
    auto fam = cli({"construct", "family", "--family", "g", "--n", "7", "--r", "5", "--ell", "0"});
    CHECK(fam.exit_code == 0);
    std::istringstream lines(fam.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        CHECK_NOTHROW(from_graph6(line));
        ++count;
    }
    CHECK(count == 2);
    auto gs = cli({"construct", "g-star", "--n", "11", "--r", "4", "--ell", "0"});
    auto ct = cli({"construct", "colex-turan", "--m", "38", "--r", "4"});
    CHECK(canonical_form(from_graph6(gs.out.substr(0, gs.out.size() - 1))) ==
          canonical_form(from_graph6(ct.out.substr(0, ct.out.size() - 1))));
}

TEST_CASE("count cliques") {
    auto r = cli({"count", "--cliques", "3", "--stdin"}, "Bw\n");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");
}

TEST_CASE("enumerate emits one graph6 line per class") {
    auto r = cli({"enumerate", "--n", "4"});
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        CHECK_NOTHROW(from_graph6(line));
        ++count;
    }
    CHECK(count == 11);
    auto refused = cli({"enumerate", "--n", "13"});
    CHECK(refused.exit_code == 3);
}

TEST_CASE("verify: exit codes and determinism across --jobs") {
    auto a = cli({"verify", "--theorem", "ham", "--n", "7", "--r", "5", "--jobs", "1"});
    CHECK(a.exit_code == 0);
    auto b = cli({"verify", "--theorem", "ham", "--n", "7", "--r", "5", "--jobs", "8"});
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"verdict\":\"match\"") != std::string::npos);

    auto refused = cli({"verify", "--theorem", "ham", "--n", "9", "--r", "4"});
    CHECK(refused.exit_code == 3);

    auto witness = cli({"verify", "--theorem", "witness"});
    CHECK(witness.exit_code == 0);

    auto csv = cli({"verify", "--theorem", "trace", "--n", "6", "--r", "4", "--csv"});
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.find("theorem,n,r") == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(cli({"check"}).exit_code == 2);
    CHECK(cli({"nonsense"}).exit_code == 2);
    CHECK(cli({"check", "--property", "bogus", "Bw"}).exit_code == 2);
    CHECK(cli({"check", "--property", "ham", "not-a-graph"}).exit_code == 2);
}
