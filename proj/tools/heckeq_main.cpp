#include <cstdio>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "heckeq/gl1.hpp"
#include "heckeq/gl2_analytic.hpp"
#include "heckeq/gl2_arith.hpp"
#include "heckeq/gl2_operators.hpp"
#include "heckeq/report.hpp"
#include "heckeq/specfun.hpp"
#include "heckeq/verify.hpp"

using namespace heckeq;

namespace {

cplx parse_cplx_flag(const std::string& text, const char* flag) {
    cplx v;
    if (!parse_complex(text, v))
        throw std::domain_error(std::string(flag) + ": cannot parse complex literal '" +
                                text + "'");
    return v;
}

void print_value(const char* name, cplx v) {
    std::printf("%s = %s\n", name, format_complex(v).c_str());
}

void print_value(const char* name, double v) {
    std::printf("%s = %s\n", name, format_double(v).c_str());
}

struct EvalArgs {
    std::string s = "2";
    std::string z = "1";
    std::string tau = "i";
    std::string gamma1 = "0";
    std::string gamma2 = "0";
    double t = 1.0;
    double x = 1.0;
    long n = 2;
    long level = 3;
    long height = 300;
    long cutoff = 100;
};

int run_eval(const std::string& object, const EvalArgs& a) {
    if (object == "zeta") {
        print_value("value", riemann_zeta(parse_cplx_flag(a.s, "--s")));
        return 0;
    }
    if (object == "completed-zeta") {
        print_value("value", completed_zeta(parse_cplx_flag(a.s, "--s")));
        return 0;
    }
    if (object == "gamma") {
        print_value("value", gamma_complex(parse_cplx_flag(a.z, "--z")));
        return 0;
    }
    if (object == "archimedean-l") {
        print_value("value", archimedean_L_gl1(parse_cplx_flag(a.s, "--s")));
        return 0;
    }
    if (object == "theta") {
        print_value("value", theta_constant(parse_cplx_flag(a.tau, "--tau")));
        return 0;
    }
    if (object == "theta-congruence") {
        print_value("value", theta_congruence(a.level, parse_cplx_flag(a.tau, "--tau")));
        return 0;
    }
    const SpectralParamGL2 gamma{parse_cplx_flag(a.gamma1, "--gamma1"),
                                 parse_cplx_flag(a.gamma2, "--gamma2")};
    if (object == "spherical") {
        print_value("value", spherical_vector(gamma, a.x));
        return 0;
    }
    const cplx tau = parse_cplx_flag(a.tau, "--tau");
    const IwasawaPoint p{tau.real(), tau.imag(), a.t};
    if (object == "eisenstein") {
        const auto r = eisenstein(gamma, p, a.height);
        print_value("value", r.value);
        print_value("tail", r.error);
        return 0;
    }
    if (object == "hecke-eigenvalue") {
        const auto r = hecke_T_apply(a.n, gamma, p, a.height);
        const cplx lam = lambda_closed_form(a.n, gamma);
        print_value("value", r.eigenvalue);
        print_value("closed_form", lam);
        print_value("residual", std::abs(r.eigenvalue - lam));
        print_value("tail", r.tail);
        return 0;
    }
    if (object == "gl2-zeta") {
        const auto r = gl2_zeta(parse_cplx_flag(a.s, "--s"), a.cutoff);
        print_value("value", r.value);
        print_value("tail", r.error);
        return 0;
    }
    throw std::domain_error("unknown eval object: " + object);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hecke-Baxter operator calculator: GL(1)/GL(2) kernels, Eisenstein "
                 "series, and eigenvalue verification suites"};
    app.set_config("--config", "", "key=value defaults file ([eval]/[verify] sections)");
    app.require_subcommand(1);

    EvalArgs ea;
    std::string object;
    auto* eval = app.add_subcommand("eval", "evaluate one object, print value and error");
    eval->add_option("object", object,
                     "zeta | completed-zeta | gamma | archimedean-l | theta | "
                     "theta-congruence | spherical | eisenstein | hecke-eigenvalue | gl2-zeta")
        ->required();
    eval->add_option("--s", ea.s, "complex parameter s (literal a+bi)");
    eval->add_option("--z", ea.z, "complex argument for gamma");
    eval->add_option("--tau", ea.tau, "upper half-plane point");
    eval->add_option("--gamma1", ea.gamma1, "spectral parameter gamma1");
    eval->add_option("--gamma2", ea.gamma2, "spectral parameter gamma2");
    eval->add_option("--t", ea.t, "determinant coordinate t > 0");
    eval->add_option("--x", ea.x, "real argument");
    eval->add_option("--n", ea.n, "Hecke index n >= 1");
    eval->add_option("--level", ea.level, "congruence level N > 1");
    eval->add_option("--height", ea.height, "lattice truncation height");
    eval->add_option("--cutoff", ea.cutoff, "determinant cutoff");

    std::string suite, s_flag, fmt = "json", outpath;
    long cutoff_flag = 0, height_flag = 0, nmax_flag = 0;
    int order_flag = 0;
    double tol_flag = 0.0, c0_flag = 0.0;
    bool no_runtime = false;
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", suite, [] {
               std::string all;
               for (const auto& n : suite_names()) all += (all.empty() ? "" : " | ") + n;
               return all;
           }())
        ->required();
    verify->add_option("--s", s_flag, "override the suite's s");
    verify->add_option("--cutoff", cutoff_flag, "override the determinant/index cutoff");
    verify->add_option("--height", height_flag, "override the lattice height");
    verify->add_option("--n-max", nmax_flag, "override the largest Hecke index");
    verify->add_option("--order", order_flag, "override the quadrature order");
    verify->add_option("--tol", tol_flag, "override the pass tolerance");
    verify->add_option("--c0", c0_flag, "fix the normalization constant instead of estimating");
    verify->add_option("--format", fmt, "report format")->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--out", outpath, "also write the report to this path");
    verify->add_flag("--no-runtime", no_runtime, "omit wall time for byte-stable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) return run_eval(object, ea);

        SuiteOverrides ov;
        if (verify->count("--s")) ov.s = parse_cplx_flag(s_flag, "--s");
        if (verify->count("--cutoff")) ov.cutoff = cutoff_flag;
        if (verify->count("--height")) ov.height = height_flag;
        if (verify->count("--n-max")) ov.n_max = nmax_flag;
        if (verify->count("--order")) ov.order = order_flag;
        if (verify->count("--tol")) ov.tolerance = tol_flag;
        if (verify->count("--c0")) ov.c0 = c0_flag;

        SuiteReport rep = run_suite(suite, ov);
        rep.include_runtime = !no_runtime;
        const std::string body = fmt == "csv" ? to_csv(rep) : to_json(rep);
        std::fputs(body.c_str(), stdout);
        if (!outpath.empty()) write_report_file(rep, fmt, outpath);
        return rep.pass ? 0 : 1;
    } catch (const io_error& e) {
        std::fprintf(stderr, "error: io: %s\n", e.what());
        return 4;
    } catch (const precision_error& e) {
        std::fprintf(stderr, "error: precision: %s\n", e.what());
        return 3;
    } catch (const std::overflow_error& e) {
        std::fprintf(stderr, "error: precision: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: domain: %s\n", e.what());
        return 2;
    }
}
