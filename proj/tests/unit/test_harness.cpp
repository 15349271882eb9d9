#include "biortho/harness.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace biortho;
using namespace biortho::harness;

TEST_CASE("check semantics") {
    const auto a = make_check("s", "x", {}, Cx(1.0 + 1e-9), Cx(1.0), 1e-8);
    CHECK(a.pass);
    CHECK(a.rel_err == doctest::Approx(1e-9).epsilon(1e-6));
    // large values pass on relative error alone
    const auto b = make_check("s", "x", {}, Cx(1e6 + 1e-3), Cx(1e6), 1e-8);
    CHECK(b.abs_err > 1e-8);
    CHECK(b.pass);
    const auto c = make_check("s", "x", {}, Cx(0.0, 2e-3), Cx(0.0), 1e-3);
    CHECK(c.rel_err == c.abs_err);
    CHECK_FALSE(c.pass);
}

TEST_CASE("empty report") {
    SuiteReport r;
    r.suite = "empty";
    const auto j = nlohmann::json::parse(emit(r, Format::json));
    CHECK(j.at("checks").is_array());
    CHECK(j.at("checks").empty());
    CHECK(j.at("pass") == true);
    CHECK(j.at("params").at("alpha").is_null());
}

TEST_CASE("json round trip") {
    SuiteReport r;
    r.suite = "demo";
    r.params.alpha = 0.3;
    r.params.terms = 12;
    r.checks.push_back(make_check("demo", "a", {{"x", 0.1}, {"n", 3}}, Cx(0.1, -0.2), Cx(0.1, -0.2 + 1e-17), 1e-12));
    r.checks.push_back(make_check("demo", "b", {}, Cx(1.0 / 3.0), Cx(0.0), 1e-20));
    CheckReport err;
    err.suite = "demo";
    err.id = "c";
    err.abs_err = err.rel_err = std::numeric_limits<double>::infinity();
    err.tol = 1e-6;
    err.error = "domain";
    r.checks.push_back(err);
    r.notes.push_back("a note");
    r.pass = false;
    const SuiteReport back = from_json(nlohmann::json::parse(emit(r, Format::json)));
    CHECK(back == r);
}

TEST_CASE("csv and text output") {
    const auto r = run_suite("q-weber");
    const std::string a = emit(r, Format::csv), b = emit(run_suite("q-weber"), Format::csv);
    CHECK(a == b);
    CHECK(a.substr(0, a.find('\n')) == "suite,id,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,tol,pass,runtime_ms");
    CHECK(a.find("q-weber,qweber2,") != std::string::npos);
    const std::string t = emit(r, Format::text);
    CHECK(t.find("q-weber: 16/16 passed, PASS") != std::string::npos);
    CHECK(parse_format("csv") == Format::csv);
    CHECK_THROWS_AS(parse_format("xml"), UsageError);
}

TEST_CASE("suite registry") {
    const auto& names = suite_names();
    CHECK(names.size() == 10);
    CHECK(names.back() == "all");
    CHECK_THROWS_AS(run_suite("nope"), UsageError);
    CHECK_THROWS_AS(identities("nope"), UsageError);
    const auto r = run_suite("hankel");
    CHECK(r.pass);
    for (const auto& c : r.checks) {
        CHECK(is_identity(c.suite, c.id));
        CHECK(c.runtime_ms == 0.0);
    }
    CHECK(emit(r, Format::json) == emit(run_suite("hankel"), Format::json));
}

TEST_CASE("overrides") {
    SuiteParams p;
    p.k_max = 2;
    const auto r = run_suite("spectrum", p);
    int jh = 0;
    for (const auto& c : r.checks)
        if (c.id == "jh-recurrence") {
            ++jh;
            CHECK(c.rel_err < 1e-10);
            CHECK(c.params.at("k") <= 2);
        }
    CHECK(jh == 20);
    p = {};
    p.tol = 1e-30;
    CHECK_FALSE(run_suite("hankel", p).pass);
    p = {};
    p.alpha = 0.35;
    p.terms = 45;
    const auto h = run_suite("hankel", p);
    CHECK(h.pass);
    for (const auto& c : h.checks) {
        CHECK(c.params.at("alpha") == 0.35);
        CHECK(c.params.at("N") == 45);
    }
    p = {};
    p.timing = true;
    const auto t = run_suite("lemma71", p);
    CHECK(t.runtime_ms > 0.0);
}

TEST_CASE("report io") {
    SuiteReport r;
    r.suite = "x";
    CHECK_THROWS_AS(write_report(r, Format::json, "/nonexistent-dir/report.json"), IoError);
}
