#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qgw/io.hpp"
#include "support.hpp"

using namespace qgw;

namespace {
void check_round_trip(const HopfPtr& h) {
    std::string text = dump_qgw1(hopf_to_json(*h));
    HopfPtr back = hopf_from_json(parse_qgw1(text));
    REQUIRE(back->dim == h->dim);
    CHECK(back->labels == h->labels);
    CHECK(back->unit == h->unit);
    CHECK(back->counit == h->counit);
    CHECK(back->antipode == h->antipode);
    CHECK(back->star == h->star);
    for (int i = 0; i < h->dim; ++i) {
        CHECK(back->coproduct(h->basis(i)) == h->coproduct(h->basis(i)));
        for (int j = 0; j < h->dim; ++j) CHECK(back->basis_product(i, j) == h->basis_product(i, j));
    }
    CHECK(dump_qgw1(hopf_to_json(*back)) == text);
}

struct CliRun {
    int status;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    std::string cmd = std::string(QGW_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}
} // namespace

TEST_CASE("cyclotomic numbers serialize exactly") {
    CycNum a = CycNum::zeta(12, 5) * CycNum(7, 3) + CycNum(-2, 9);
    CHECK(cyc_from_json(cyc_to_json(a)) == a);
    mpq_class big("123456789012345678901234567890/7");
    CycNum b(big);
    Json j = cyc_to_json(b);
    CHECK(j["coeffs"][0][0].is_string());
    CHECK(cyc_from_json(j) == b);
    CHECK_QGW_THROWS(cyc_from_json(Json::parse(R"({"order": 4, "coeffs": [[1, 0]]})")), "ParseError");
}

TEST_CASE("qgw-1 round trips") {
    for (int K : {2, 3, 4, 6}) {
        check_round_trip(function_algebra(make_dihedral(K), lcm4(K)));
        check_round_trip(group_algebra(make_dihedral(K), lcm4(K)));
    }
    for (int K : {2, 4, 6, 8}) check_round_trip(dihedral_minus_one(K).algebra);
    check_round_trip(function_algebra(make_klein(), 4));
}

TEST_CASE("malformed documents are rejected") {
    CHECK_QGW_THROWS(parse_qgw1("{not json"), "ParseError");
    Json doc = hopf_to_json(*function_algebra(make_cyclic(2)));
    Json wrong = doc;
    wrong["format_version"] = "qgw-0";
    CHECK_QGW_THROWS(hopf_from_json(wrong), "ParseError");
    Json missing = doc;
    missing.erase("comult");
    CHECK_QGW_THROWS(hopf_from_json(missing), "ParseError");
    Json range = doc;
    range["mult"][0][2] = 9;
    CHECK_QGW_THROWS(hopf_from_json(range), "ParseError");
}

TEST_CASE("companion sections") {
    auto d = dihedral_minus_one(4);
    Json g = group_to_json(make_dihedral(4));
    CHECK(g["order"] == 8);
    Json c = cocycle_to_json(d.cocycle);
    CHECK(c.contains("table"));
    auto co = quotient_coideal(restriction_quotient(4), nullptr);
    CHECK(coideal_to_json(co)["dim"] == co.dim());
}

TEST_CASE("command line") {
    std::string path = "qgw_cli_test_d4.json";
    auto b = run_cli("build --k 4 --twisted -o " + path);
    CHECK(b.status == 0);
    auto v = run_cli("verify " + path);
    CHECK(v.status == 0);
    CHECK(v.out.find("FAIL") == std::string::npos);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    HopfPtr h = hopf_from_json(parse_qgw1(ss.str()));
    CHECK(check_cqg(h).ok());
    std::remove(path.c_str());

    auto s = run_cli("o2 scan-regular --k-bound 12 --cutoff 24");
    CHECK(s.status == 0);
    CHECK(s.out.find("alpha^(1)\t24") != std::string::npos);
    CHECK(s.out.find("beta^(2)_1/2\t24") != std::string::npos);
    auto c1 = run_cli("count --k 2,4,6 --jobs 1");
    auto c3 = run_cli("count --k 2,4,6 --jobs 3");
    CHECK(c1.status == 0);
    CHECK(c1.out == c3.out);
    CHECK(c1.out.find("ties\t2") != std::string::npos);
    CHECK(run_cli("count --k 3").status == 2);
    CHECK(run_cli("o2 scan-regular --k-bound 12 --cutoff 10").status == 2);
    CHECK(run_cli("frobnicate").status == 2);
    CHECK(run_cli("verify does-not-exist.json").status == 2);
    auto err = run_cli("count --k 3");
    CHECK(err.out.find("\"code\":\"BadParams\"") != std::string::npos);
}
