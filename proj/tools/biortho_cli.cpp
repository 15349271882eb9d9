#include "biortho/harness.hpp"
#include "biortho/orthopoly.hpp"
#include "biortho/qspec.hpp"
#include "biortho/specfun.hpp"
#include "biortho/spectrum.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

using namespace biortho;
namespace h = biortho::harness;

namespace {

enum Exit { ok = 0, failed = 1, usage = 2, io = 3 };

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

// key=value lines; '#' starts a comment
std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw h::UsageError("cannot read config file '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw h::UsageError(path + ":" + std::to_string(no) + ": expected key=value");
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

double to_double(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    double d = 0.0;
    try {
        d = std::stod(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != v.size() || v.empty()) throw h::UsageError("config: '" + key + "' needs a number, got '" + v + "'");
    return d;
}

int to_int(const std::string& key, const std::string& v) {
    const double d = to_double(key, v);
    if (d != static_cast<int>(d)) throw h::UsageError("config: '" + key + "' needs an integer, got '" + v + "'");
    return static_cast<int>(d);
}

struct VerifyArgs {
    std::string suite;
    std::optional<double> alpha, beta, q, tol;
    std::optional<int> terms, k_max;
    std::string format = "text";
    std::string out;
    std::string config;
    bool timing = false;
};

int run_verify(CLI::App& cmd, VerifyArgs& a) {
    if (!a.config.empty()) {
        for (const auto& [k, v] : read_config(a.config)) {
            auto given = [&](const char* flag) { return cmd.get_option(flag)->count() > 0; };
            if (k == "alpha") {
                if (!given("--alpha")) a.alpha = to_double(k, v);
            } else if (k == "beta") {
                if (!given("--beta")) a.beta = to_double(k, v);
            } else if (k == "q") {
                if (!given("--q")) a.q = to_double(k, v);
            } else if (k == "tol") {
                if (!given("--tol")) a.tol = to_double(k, v);
            } else if (k == "terms") {
                if (!given("--terms")) a.terms = to_int(k, v);
            } else if (k == "k_max" || k == "k-max") {
                if (!given("--k-max")) a.k_max = to_int(k, v);
            } else if (k == "format") {
                if (!given("--format")) a.format = v;
            } else if (k == "out") {
                if (!given("--out")) a.out = v;
            } else if (k == "timing") {
                if (!given("--timing")) a.timing = v == "1" || v == "true" || v == "yes";
            } else {
                throw h::UsageError("config: unknown key '" + k + "'");
            }
        }
    }
    const h::Format fmt = h::parse_format(a.format);
    h::SuiteParams p;
    p.alpha = a.alpha;
    p.beta = a.beta;
    p.q = a.q;
    p.tol = a.tol;
    p.terms = a.terms;
    p.k_max = a.k_max;
    p.timing = a.timing;
    if (p.q && !(*p.q > 0.0 && *p.q < 1.0)) throw h::UsageError("--q must lie in (0,1)");
    if (p.terms && *p.terms < 1) throw h::UsageError("--terms must be >= 1");
    if (p.k_max && *p.k_max < 1) throw h::UsageError("--k-max must be >= 1");
    if (p.tol && !(*p.tol > 0.0)) throw h::UsageError("--tol must be positive");
    h::SuiteReport rep;
    try {
        rep = h::run_suite(a.suite, p);
    } catch (const std::domain_error& e) {
        // parameter overrides outside a suite's domain
        throw h::UsageError(e.what());
    }
    h::write_report(rep, fmt, a.out);
    return rep.pass ? ok : failed;
}

struct EvalArgs {
    std::string function;
    std::optional<double> nu, x, alpha, beta, t, a, w, q;
    std::optional<int> n, k, sign;
};

template <class T>
T need(const std::optional<T>& o, const char* flag, const std::string& fn) {
    if (!o) throw h::UsageError("eval " + fn + " needs " + flag);
    return *o;
}

void print(double v) { std::printf("%.15g\n", v); }
void print(Cx v) { std::printf("(%.15g, %.15g)\n", v.real(), v.imag()); }

int run_eval(const EvalArgs& e) {
    const std::string& f = e.function;
    if (f == "bessel") {
        print(bessel_j(need(e.nu, "--nu", f), need(e.x, "--x", f)));
    } else if (f == "dunkl-kernel") {
        print(dunkl_kernel(need(e.alpha, "--alpha", f), need(e.x, "--x", f)));
    } else if (f == "gengeg") {
        const GenGegenbauerFamily fam(Params(need(e.alpha, "--alpha", f), need(e.beta, "--beta", f)));
        print(fam(need(e.n, "--n", f), need(e.t, "--t", f)));
    } else if (f == "qbessel3") {
        const QContext ctx = QContext::with_defaults(need(e.q, "--q", f));
        print(qbessel3(ctx, need(e.nu, "--nu", f), need(e.x, "--x", f)));
    } else if (f == "lommel") {
        print(modified_lommel(need(e.n, "--n", f), need(e.a, "--a", f), need(e.w, "--w", f)));
    } else if (f == "zeros") {
        const int k = need(e.k, "--k", f);
        if (k < 1) throw h::UsageError("eval zeros: --k must be >= 1");
        print(bessel_zeros(need(e.nu, "--nu", f), k)[k]);
    } else if (f == "eigenvalue") {
        const int k = need(e.k, "--k", f);
        const int sign = e.sign.value_or(1);
        if (sign != 1 && sign != -1) throw h::UsageError("eval eigenvalue: --sign must be 1 or -1");
        const SpectralProblem sp(Params(need(e.alpha, "--alpha", f), need(e.beta, "--beta", f)), 10, std::max(k, 1));
        print(eigenvalue(sp, k, sign));
    } else {
        throw h::UsageError("unknown function '" + f + "' (bessel, dunkl-kernel, gengeg, qbessel3, lommel, zeros, eigenvalue)");
    }
    return ok;
}

void list_suites() {
    for (const auto& s : h::suite_names()) {
        std::printf("%s\n", s.c_str());
        if (s == "all") continue;
        for (const auto& id : h::identities(s)) std::printf("  %-28s %s\n", id.id.c_str(), id.description.c_str());
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Biorthogonal expansion verification harness"};
    app.require_subcommand(0, 1);
    bool list = false;
    app.add_flag("--list-suites", list, "List suites and the identities they check");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", va.suite, "Suite name (see --list-suites)")->required();
    verify->add_option("--alpha", va.alpha, "Override alpha");
    verify->add_option("--beta", va.beta, "Override beta");
    verify->add_option("--q", va.q, "Override q");
    verify->add_option("--terms", va.terms, "Override the number of terms N");
    verify->add_option("--tol", va.tol, "Override check tolerances");
    verify->add_option("--k-max", va.k_max, "Number of eigenvalues in the spectrum suite");
    verify->add_option("--format", va.format, "json, csv or text");
    verify->add_option("--out", va.out, "Report file (default stdout)");
    verify->add_option("--config", va.config, "key=value file; flags take precedence");
    verify->add_flag("--timing", va.timing, "Record runtimes (reports are then not byte-stable)");

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "Evaluate a function");
    eval->add_option("function", ea.function, "bessel, dunkl-kernel, gengeg, qbessel3, lommel, zeros, eigenvalue")->required();
    eval->add_option("--nu", ea.nu);
    eval->add_option("--x", ea.x);
    eval->add_option("--alpha", ea.alpha);
    eval->add_option("--beta", ea.beta);
    eval->add_option("--n", ea.n);
    eval->add_option("--t", ea.t);
    eval->add_option("--a", ea.a);
    eval->add_option("--w", ea.w);
    eval->add_option("--k", ea.k);
    eval->add_option("--q", ea.q);
    eval->add_option("--sign", ea.sign);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? ok : usage;
    }
    try {
        if (list) {
            list_suites();
            return ok;
        }
        if (*verify) return run_verify(*verify, va);
        if (*eval) return run_eval(ea);
        std::cerr << app.help();
        return usage;
    } catch (const h::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return io;
    } catch (const h::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
}
