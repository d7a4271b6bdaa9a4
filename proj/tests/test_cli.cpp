#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "syzstab/cli.hpp"
#include "syzstab/serialize.hpp"

using namespace syzstab;

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream o, e;
    const int code = cli::run_cli(args, o, e);
    return {code, o.str(), e.str()};
}

bool has(const std::string& s, const std::string& sub) {
    return s.find(sub) != std::string::npos;
}

} // namespace

TEST_CASE("check certifies the hirzebruch desk example") {
    const auto r = run({"check", "--surface", "hirzebruch:1", "--L", "1,2", "--H", "L"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "\"criterion\": \"cor36\""));
    CHECK(has(r.out, "\"verdict\": \"HStable\""));
    CHECK(r.err.empty());
}

TEST_CASE("check certifies the anti-canonical desk example") {
    const auto r = run({"check", "--surface", "delpezzo:6", "--L", "1,0,0,0,0,0,0",
                        "--H", "antiK"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "\"criterion\": \"thm37\""));
    CHECK(has(r.out, "\"verdict\": \"HStable\""));
    CHECK(has(r.out, "\"H\": \"antiK\""));
}

TEST_CASE("an inconclusive verdict still exits zero") {
    const auto r = run({"check", "--surface", "p2", "--L", "0", "--H", "1"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "\"verdict\": \"Inconclusive\""));
}

TEST_CASE("invalid input exits two with a one-line diagnostic") {
    const auto length = run({"check", "--surface", "p2", "--L", "1,2"});
    CHECK(length.code == 2);
    CHECK(has(length.err, "error:"));
    CHECK(has(length.err, "--L"));

    const auto surface = run({"check", "--surface", "p3", "--L", "1"});
    CHECK(surface.code == 2);
    CHECK(has(surface.err, "p3"));

    const auto token = run({"check", "--surface", "p2", "--L", "1x"});
    CHECK(token.code == 2);
    CHECK(has(token.err, "1x"));

    const auto assert_tok = run({"check", "--surface", "p2", "--L", "2",
                                 "--assert", "ample,bogus"});
    CHECK(assert_tok.code == 2);
    CHECK(has(assert_tok.err, "bogus"));

    const auto crit = run({"check", "--surface", "p2", "--L", "2", "--criterion", "thm21"});
    CHECK(crit.code == 2);
    CHECK(has(crit.err, "thm21"));

    const auto mismatch = run({"check", "--surface", "p2", "--L", "2",
                               "--criterion", "cor36"});
    CHECK(mismatch.code == 2);

    const auto missing = run({"check", "--surface", "hirzebruch:1"});
    CHECK(missing.code == 2);

    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"check", "--surface", "p2", "--L", "2", "--format", "csv"}).code == 2);
}

TEST_CASE("help is not an error") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "check"));
    CHECK(has(r.out, "sweep"));
    CHECK(run({"check", "--help"}).code == 0);
}

TEST_CASE("bound desk examples") {
    const auto n1 = run({"bound", "--surface", "p2", "--L", "1", "--D", "0", "--H", "1"});
    CHECK(n1.code == 0);
    CHECK(has(n1.out, "\"n\": 1"));

    const auto n4 = run({"bound", "--surface", "p2", "--L", "1", "--D", "-3", "--H", "1"});
    CHECK(n4.code == 0);
    CHECK(has(n4.out, "\"n\": 4"));
    CHECK(has(n4.out, "\"verdict\": \"HStable\""));

    const auto f1 = run({"bound", "--surface", "hirzebruch:1", "--L", "1,2", "--H", "1,2"});
    CHECK(f1.code == 0);
    CHECK(has(f1.out, "\"n\": 1"));

    const auto numeric = run({"bound", "--surface", "numeric:L2=10,LK=0,K2=0,chiO=1,q=0"});
    CHECK(numeric.code == 0);
    CHECK(has(numeric.out, "\"verdict\": \"Inconclusive\""));
    CHECK_FALSE(has(numeric.out, "\"n\":"));

    const auto window = run({"bound", "--surface", "p2", "--L", "1", "--D", "-3", "--H", "1",
                             "--nmax", "3"});
    CHECK(window.code == 0);
    CHECK(has(window.out, "\"verdict\": \"Inconclusive\""));

    const auto badm = run({"bound", "--surface", "p2", "--L", "1", "--H", "1",
                           "--m-mult", "0"});
    CHECK(badm.code == 2);
}

TEST_CASE("sweep emits the fixed csv layout") {
    const auto r = run({"sweep", "--surface", "p2", "--a", "1..10"});
    CHECK(r.code == 0);
    const auto rows = [&] {
        std::vector<std::string> v;
        std::istringstream is(r.out);
        std::string line;
        while (std::getline(is, line)) v.push_back(line);
        return v;
    }();
    REQUIRE(rows.size() == 11);
    CHECK(rows[0] == "coords,ample,generated,neg_LK,h0,rank,slope,criterion,verdict");
    CHECK(rows[3] == "\"3\",true,true,9,10,9,-1/1,cor33,HStable");
    for (size_t i = 1; i < rows.size(); ++i) CHECK(has(rows[i], "HStable"));
}

TEST_CASE("sweep ranges broadcast to remaining coordinates") {
    const auto r = run({"sweep", "--surface", "delpezzo:2", "--a", "3..3", "--b", "-1..-1",
                        "--range", "-1..0"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "\"3,-1,-1\""));
    CHECK(has(r.out, "\"3,-1,0\""));

    const auto missing = run({"sweep", "--surface", "delpezzo:2", "--a", "0..1"});
    CHECK(missing.code == 2);
    CHECK(has(missing.err, "--b"));

    const auto tail = run({"sweep", "--surface", "delpezzo:2", "--a", "0..1", "--b", "0..1"});
    CHECK(tail.code == 2);
    CHECK(has(tail.err, "--range"));

    const auto empty = run({"sweep", "--surface", "p2", "--a", "5..1"});
    CHECK(empty.code == 2);
    CHECK(has(empty.err, "empty sweep range"));

    const auto numeric = run({"sweep", "--surface", "numeric:L2=10,LK=0,K2=0,chiO=1,q=0",
                              "--a", "0..1"});
    CHECK(numeric.code == 2);

    const auto badrange = run({"sweep", "--surface", "p2", "--a", "1-3"});
    CHECK(badrange.code == 2);
    CHECK(has(badrange.err, "lo..hi"));
}

TEST_CASE("info prints the lattice model") {
    const auto dp2 = run({"info", "--surface", "delpezzo:2"});
    CHECK(dp2.code == 0);
    CHECK(has(dp2.out, "extremal rays (3)"));

    const auto f3 = run({"info", "--surface", "hirzebruch:3"});
    CHECK(f3.code == 0);
    CHECK(has(f3.out, "K:       (-2,-5)"));
    CHECK(has(f3.out, "K^2:     8"));

    const auto j = run({"info", "--surface", "p2", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(has(j.out, "\"K2\": 9"));

    const auto numeric = run({"info", "--surface", "numeric:L2=10,LK=0,K2=0,chiO=1,q=0"});
    CHECK(numeric.code == 0);
    CHECK(has(numeric.out, "L^2:     10"));
}

TEST_CASE("check output round-trips through the parser") {
    const auto r = run({"check", "--surface", "delpezzo:2", "--L", "3,-1,-1",
                        "--criterion", "cor33"});
    REQUIRE(r.code == 0);
    const Certificate c = certificate_from_json_text(r.out);
    CHECK(to_json(c).dump(2) + "\n" == r.out);
    CHECK(c.verdict == Verdict::h_stable);
}

TEST_CASE("identical invocations are byte-identical") {
    const std::vector<std::string> args{"check", "--surface", "hirzebruch:2", "--L", "1,3"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
}

TEST_CASE("text format and file output") {
    const auto text = run({"check", "--surface", "p2", "--L", "2", "--format", "text"});
    CHECK(text.code == 0);
    CHECK(has(text.out, "verdict:   HStable"));
    CHECK(has(text.out, "[Verified]"));

    const std::string path = "cli_test_out.json";
    const auto filed = run({"check", "--surface", "p2", "--L", "2", "--out", path});
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(has(ss.str(), "\"verdict\": \"HStable\""));
    std::remove(path.c_str());
}

TEST_CASE("assertions and cliff bounds reach the certificate") {
    const auto r = run({"check", "--surface", "numeric:L2=10,LK=0,K2=0,chiO=1,q=0",
                        "--criterion", "cor37", "--cliff-bound", "2",
                        "--assert", "ample,generated,irreducible-member"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "\"verdict\": \"HStable\""));
    CHECK(has(r.out, "\"Asserted\""));

    const auto neg = run({"check", "--surface", "p2", "--L", "2", "--cliff-bound", "-1"});
    CHECK(neg.code == 2);
}
