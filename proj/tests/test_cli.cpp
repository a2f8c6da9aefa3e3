#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "tgwa/cli.hpp"
#include "tgwa/json_io.hpp"

using namespace tgwa;
using namespace testing_support;

namespace {

struct Run {
    int code;
    std::string out, err;
    json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "tgwa");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

std::string preset_doc(const std::string& name, size_t n = 2) {
    const Run r = run({"preset", name, "--n", std::to_string(n)});
    REQUIRE(r.code == 0);
    return r.out;
}

}  // namespace

TEST_CASE("preset piped into invariant-lattice") {
    const Run r = run({"invariant-lattice"}, preset_doc("hayashi"));
    REQUIRE(r.code == 0);
    CHECK(r.doc()["generators"] == json::parse("[[1,0,1,0],[0,1,0,1]]"));
    CHECK(r.doc()["monomials"] == json::parse(R"(["u1*v1","u2*v2"])"));
    const Run j = run({"invariant-lattice"}, preset_doc("jordan", 3));
    CHECK(j.doc()["generators"] == json::parse("[[1,0,0,0,0,0],[0,1,0,-1,0,0],[0,0,1,0,-1,0]]"));
    CHECK(run({"invariant-lattice"}, preset_doc("benkart")).doc()["generators"].empty());
}

TEST_CASE("check-consistency") {
    const MTWAParams p = hayashi_params(2);
    const Run r = run({"check-consistency"}, to_json(p).dump());
    CHECK(r.code == 0);
    CHECK(r.doc() == json::parse(R"({"consistent": true})"));
    // perturbed mu in an explicit datum document
    TGWDatum d = build_datum(p);
    d.mu[0][1] = Scalar(2) * d.mu[0][1];
    const Run bad = run({"check-consistency"}, json{{"datum", to_json(d)}}.dump());
    CHECK(bad.code == 1);
    CHECK(bad.doc()["consistent"] == false);
    CHECK(bad.doc()["witness"]["i"] == 1);
    CHECK(bad.doc()["witness"]["j"] == 2);
}

TEST_CASE("cartan") {
    const Run r = run({"cartan"}, preset_doc("example-3.5"));
    REQUIRE(r.code == 0);
    CHECK(r.doc()["cartan"] == json::parse("[[2,-1],[-1,2]]"));
    CHECK(r.doc()["type"] == "A2");
    const Run q = run({"cartan"}, preset_doc("quantized-weyl", 3));
    CHECK(q.doc()["type"] == "(A1)^3");
}

TEST_CASE("domain, quotient and certificates") {
    CHECK(run({"is-domain"}, preset_doc("jordan")).doc()["domain"] == true);
    json torsion = {{"n", 1}, {"k", 2}, {"r", {{"-1"}}}, {"s", {{"2"}}}, {"lambda", {{"1"}}}};
    const Run t = run({"is-domain"}, torsion.dump());
    CHECK(t.code == 0);
    CHECK(t.doc()["domain"] == false);
    CHECK(t.doc()["elementary_divisors"] == json::parse(R"(["2"])"));

    const Run q = run({"quotient"}, preset_doc("hayashi"));
    REQUIRE(q.code == 0);
    CHECK(q.doc()["is_quotient"] == true);
    CHECK(q.doc()["point"] == json::parse(R"(["1","1"])"));
    const Run c = run({"simplicity-cert", "--depth", "4", "--radius", "2"}, q.out);
    CHECK(c.code == 0);
    CHECK(c.doc()["ok"] == true);
    CHECK(c.doc()["items"].size() == 6);
    CHECK(run({"quotient", "--point", "1,0"}, preset_doc("hayashi")).code == 2);
}

TEST_CASE("weight-module") {
    const Run r = run({"weight-module", "--alpha", "2,q", "--beta", "1/2,1/q", "--radius", "2"}, preset_doc("hayashi"));
    REQUIRE(r.code == 0);
    const json d = r.doc();
    CHECK(d["shape"] == json::parse("[0,-1]"));
    CHECK(d["box_radius"] == 2);
    CHECK(d["oracle"]["ok"] == true);
    CHECK(d["relations"]["ok"] == true);
    CHECK(d["actions"].size() == 5 * 3 * 4);
    for (const auto& a : d["actions"])
        if (a["gen"] == "X2" && a["g"][1] == 0) CHECK(a["target"].is_null());
    // the weight must lie on the quotient
    CHECK(run({"weight-module", "--alpha", "2,2", "--beta", "2,2"}, preset_doc("hayashi")).code == 2);
    CHECK(run({"weight-module"}, preset_doc("hayashi")).code == 2);
}

TEST_CASE("whittaker") {
    const Run r = run({"whittaker", "--zeta", "2,q", "--radius", "2"}, preset_doc("hayashi"));
    REQUIRE(r.code == 0);
    CHECK(r.doc()["whittaker_condition"] == true);
    CHECK(r.doc()["ok"] == true);
    const Run j = run({"whittaker"}, preset_doc("jordan"));
    CHECK(j.code == 1);
    CHECK(j.doc()["whittaker_condition"] == false);
    json doc = json::parse(preset_doc("hayashi"));
    doc.erase("point");
    doc["ideal"] = {{"lattice", json::parse("[[2,0,2,0]]")}, {"values", json::parse(R"(["4"])")}};
    const Run i = run({"whittaker", "--radius", "1"}, doc.dump());
    CHECK(i.code == 0);
    CHECK(i.doc()["ideal"]["lattice"] == json::parse("[[2,0,2,0]]"));
}

TEST_CASE("verify-diagram") {
    const Run r = run({"verify-diagram", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.doc()["ok"] == true);
    const Run p = run({"verify-diagram", "-"}, preset_doc("jordan"));
    CHECK(p.code == 0);
    CHECK(p.doc()["q"] == json::parse(R"(["q","q^2"])"));
}

TEST_CASE("input errors exit with 2") {
    const Run bad = run({"cartan"}, "{not json");
    CHECK(bad.code == 2);
    CHECK(bad.err.find("malformed JSON") != std::string::npos);
    CHECK(run({"cartan"}, "[1,2]").code == 2);
    CHECK(run({"invariant-lattice"}, "{}").code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"preset", "nope"}).code == 2);
    CHECK(run({"--field", "R", "preset", "hayashi"}).code == 2);
    // q is not available over Q
    const Run f = run({"--field", "Q", "invariant-lattice"}, preset_doc("hayashi"));
    CHECK(f.code == 2);
    CHECK(run({"--field", "Q", "is-domain"}, json{{"n", 1}, {"k", 1}, {"r", {{"2"}}}, {"s", {{"3"}}}, {"lambda", {{1}}}}.dump())
              .code == 0);
    json invalid = json::parse(preset_doc("hayashi"));
    invalid["params"]["lambda"][0][0] = "2";
    const Run v = run({"invariant-lattice"}, invalid.dump());
    CHECK(v.code == 2);
    CHECK(v.err.find("lambda_ii") != std::string::npos);
    CHECK(run({"cartan", "/nonexistent/file.json"}).code == 2);
}

TEST_CASE("output file") {
    const std::string path = "test_cli_output.json";
    const Run r = run({"-o", path, "preset", "benkart"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    const json d = json::parse(f);
    CHECK(d["preset"] == "benkart");
    std::remove(path.c_str());
}

TEST_CASE("outputs re-parse and are deterministic") {
    for (const auto& name : preset_names()) {
        const std::string a = preset_doc(name), b = preset_doc(name);
        CHECK(a == b);
        const json d = json::parse(a);
        CHECK(d["check"]["ok"] == true);
        const TGWDatum datum = datum_from_json(d["datum"]);
        CHECK(to_json(datum) == d["datum"]);
        if (d.contains("params")) {
            const MTWAParams p = params_from_json(d["params"]);
            CHECK(to_json(p) == d["params"]);
            CHECK(to_json(build_datum(p)) == d["datum"]);
        }
    }
}

TEST_CASE("scalar and polynomial round trips") {
    std::mt19937 rng(101);
    const auto pool = nonzero_pool();
    for (int t = 0; t < 200; ++t) {
        const Scalar a = pick(rng, pool), b = pick(rng, pool), c = pick(rng, pool);
        const Scalar den = c - b + Scalar(3);
        if (den.is_zero()) continue;
        const Scalar x = (a + b * c) / den + a * a;
        CHECK(scalar_from_json(to_json(x)) == x);
    }
    for (int t = 0; t < 50; ++t) {
        const LaurentPoly p = random_poly(rng, 3, 4, -2, 2);
        CHECK(poly_from_json(to_json(p), 3) == p);
    }
    CHECK_THROWS_AS(poly_from_json(json::parse(R"([[[1,2],"1"]])"), 3), InputError);
    CHECK_THROWS_AS(scalar_from_json(json::parse("1.5")), InputError);
}
