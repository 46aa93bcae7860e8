#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "heckeq/report.hpp"
#include "heckeq/verify.hpp"

using namespace heckeq;

namespace {

SuiteReport sample_report() {
    SuiteReport r;
    r.identity = "sample-identity";
    r.grid = "s in {2, 3}";
    PointResult p1;
    p1.params = {{"s", "2"}, {"x", "0.5"}};
    p1.lhs = cplx(1.25, -0.5);
    p1.rhs = cplx(1.25, -0.5000001);
    p1.residual = 1e-7;
    p1.tolerance = 1e-6;
    PointResult p2;
    p2.params = {{"s", "3"}, {"x", "0.5"}};
    p2.lhs = cplx(0.75, 0.0);
    p2.rhs = cplx(0.75, 0.0);
    p2.residual = 0.0;
    p2.tolerance = 1e-6;
    r.points = {p1, p2};
    r.settings = {{"height", "100"}, {"note", "a \"quoted\" value"}};
    r.runtime_ms = 12.5;
    finalize_report(r);
    return r;
}

}  // namespace

TEST_CASE("complex literals parse") {
    struct Case {
        const char* text;
        double re, im;
    };
    const Case good[] = {
        {"2", 2.0, 0.0},           {"-3.5", -3.5, 0.0},
        {"i", 0.0, 1.0},           {"-i", 0.0, -1.0},
        {"3+4i", 3.0, 4.0},        {"4i", 0.0, 4.0},
        {"-0.5-0.25i", -0.5, -0.25}, {"1.5e-3-2i", 1.5e-3, -2.0},
        {"1e5i", 0.0, 1e5},        {"1e+5i", 0.0, 1e5},
        {"2.5+I", 2.5, 1.0},       {" 1 + 2 i ", 1.0, 2.0},
    };
    for (const auto& c : good) {
        cplx v;
        CAPTURE(c.text);
        REQUIRE(parse_complex(c.text, v));
        CHECK(v.real() == c.re);
        CHECK(v.imag() == c.im);
    }
    for (const char* bad : {"abc", "1+", "2i+3", "", "1..2", "i5", "+-3"}) {
        cplx v;
        CAPTURE(bad);
        CHECK_FALSE(parse_complex(bad, v));
    }
}

TEST_CASE("doubles format losslessly") {
    const double vals[] = {0.0,   1.0,        -1.0,     0.1,  1.0 / 3.0,
                           1e300, -2.5e-308,  3.141592653589793};
    for (double v : vals) {
        const std::string s = format_double(v);
        CHECK(std::stod(s) == v);
    }
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "1e999");
    CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-1e999");
}

TEST_CASE("complex values format and re-parse") {
    const cplx vals[] = {{0.0, 0.0}, {1.5, 0.0}, {0.0, 2.5}, {0.0, -1.0},
                         {3.0, 4.0}, {-0.25, -0.75}, {1e-3, -2e4}};
    for (const cplx& v : vals) {
        cplx back;
        const std::string s = format_complex(v);
        CAPTURE(s);
        REQUIRE(parse_complex(s, back));
        CHECK(back.real() == v.real());
        CHECK(back.imag() == v.imag());
    }
}

TEST_CASE("aggregation over points") {
    SuiteReport r = sample_report();
    CHECK(r.residual == 1e-7);
    CHECK(r.tolerance == 1e-6);
    CHECK(r.pass);
    CHECK(r.points[0].pass);
    CHECK(r.points[1].pass);

    r.points[0].residual = 2e-6;
    finalize_report(r);
    CHECK_FALSE(r.points[0].pass);
    CHECK_FALSE(r.pass);
    CHECK(r.residual == 2e-6);
}

TEST_CASE("json round trip") {
    const SuiteReport r = sample_report();
    const SuiteReport back = from_json(to_json(r));
    CHECK(back == r);

    SuiteReport bare = r;
    bare.include_runtime = false;
    const SuiteReport back2 = from_json(to_json(bare));
    CHECK_FALSE(back2.include_runtime);
    CHECK(back2.runtime_ms == 0.0);

    CHECK_THROWS_AS(from_json("{ not json"), io_error);
    CHECK_THROWS_AS(from_json("[1, 2, 3]"), io_error);
}

TEST_CASE("csv layout") {
    const SuiteReport r = sample_report();
    std::istringstream in(to_csv(r));
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "params,lhs_re,lhs_im,rhs_re,rhs_im,residual,tolerance,pass");
    size_t rows = 0;
    while (std::getline(in, line)) {
        if (!line.empty()) ++rows;
    }
    CHECK(rows == r.points.size());

    // embedded quotes double up inside a quoted field
    SuiteReport q = r;
    q.points[0].params = {{"label", "a\"b"}};
    const std::string out = to_csv(q);
    CHECK(out.find("\"label=a\"\"b\"") != std::string::npos);
}

TEST_CASE("suite output is byte-stable without the clock field") {
    SuiteOverrides ov;
    SuiteReport a = run_suite("fr1", ov);
    SuiteReport b = run_suite("fr1", ov);
    a.include_runtime = false;
    b.include_runtime = false;
    CHECK(to_json(a) == to_json(b));
    CHECK(a.pass);
}

TEST_CASE("suite names are exposed and unknown names are rejected") {
    const auto& names = suite_names();
    CHECK(names.size() == 15);
    CHECK(names.front() == "hecke-eigenvalues");
    CHECK_THROWS_AS(run_suite("no-such-suite", {}), std::invalid_argument);
}
