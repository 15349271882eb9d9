// Acceptance criteria A1-A9. Usage: acceptance <path to the biortho CLI>
#include "biortho/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace biortho::harness;

namespace {

struct Rows {
    std::vector<const CheckReport*> v;
    double ms = 0.0;

    std::size_t size() const { return v.size(); }
    double max(const std::function<double(const CheckReport&)>& f) const {
        double m = 0.0;
        for (const auto* c : v) m = std::max(m, f(*c));
        return m;
    }
    bool any_error() const {
        return std::any_of(v.begin(), v.end(), [](const CheckReport* c) { return !c->error.empty(); });
    }
};

Rows rows(const SuiteReport& r, const std::string& id, const std::function<bool(const CheckReport&)>& keep = {}) {
    Rows out;
    for (const auto& c : r.checks)
        if (c.id == id && (!keep || keep(c))) {
            out.v.push_back(&c);
            out.ms += c.runtime_ms;
        }
    return out;
}

double abs_err(const CheckReport& c) { return c.abs_err; }
double rel_err(const CheckReport& c) { return c.rel_err; }
double param(const CheckReport& c, const char* k) { return c.params.at(k); }

int failures = 0;

void line(const char* name, bool ok, const std::string& detail) {
    std::printf("%s %s  %s\n", name, ok ? "PASS" : "FAIL", detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: acceptance <biortho CLI>\n");
        return 2;
    }
    SuiteParams timing;
    timing.timing = true;
    const SuiteReport all = run_suite("all", timing);

    {
        const auto r = rows(all, "geg-planewave");
        const double e = r.max(abs_err);
        line("A1", r.size() == 72 && !r.any_error() && e <= 1e-10 && r.ms < 1000.0,
             fmt("classical plane wave, %g points, max abs err %.2e <= 1e-10, %.1f ms < 1 s", r.size(), e, r.ms));
    }
    {
        const auto r = rows(all, "dunkl-planewave");
        const auto c = rows(all, "planewave-classical-limit");
        const double e = r.max(abs_err), ec = c.max(abs_err);
        line("A2", r.size() == 144 && c.size() == 48 && !r.any_error() && !c.any_error() && e <= 1e-9 && ec <= 1e-12,
             fmt("Dunkl plane wave, %g points, max abs err %.2e <= 1e-9; alpha = -1/2 vs classical %.2e <= 1e-12", r.size(), e,
                 ec));
    }
    {
        const auto r = rows(all, "neumann-gram");
        const double e = r.max(abs_err);
        line("A3", r.size() == 6 * 81 && !r.any_error() && e <= 1e-8,
             fmt("Gram matrices n,m <= 8 for 6 (alpha,beta), max |G - I| %.2e <= 1e-8", e));
    }
    {
        // I-minus / I-plus rows hold quadrature / closed, so abs_err is the relative error
        const auto m = rows(all, "I-minus"), p = rows(all, "I-plus"), v = rows(all, "I-minus-vanish");
        const double e = std::max(m.max(abs_err), p.max(abs_err)), ev = v.max(abs_err);
        const double ms = m.ms + p.ms + v.ms;
        line("A4", m.size() == 6 && p.size() == 6 && v.size() == 3 && !m.any_error() && !p.any_error() && !v.any_error() &&
                       e <= 1e-5 && ev <= 1e-5 && ms < 20000.0,
             fmt("Bessel-Jacobi integral closed forms, max rel err %.2e <= 1e-5; |I_-(1.5)| %.2e <= 1e-5; %.1f ms < 20 s", e, ev, ms));
    }
    {
        const auto r = rows(all, "dunkl-sampling");
        std::map<int, double> sup;
        for (const auto* c : r.v) sup[static_cast<int>(param(*c, "N"))] = std::max(sup[static_cast<int>(param(*c, "N"))], c->abs_err);
        bool dec = sup.size() == 4 && !r.any_error();
        std::string detail = "sup errors";
        double prev = INFINITY;
        for (const auto& [N, e] : sup) {
            dec = dec && e < prev;
            prev = e;
            detail += fmt(" N=%g: %.2e", N, e);
        }
        const double thr = sampling_threshold(400);
        const bool below = sup.count(400) && sup[400] < thr;
        line("A5", dec && below, detail + (dec ? ", strictly decreasing" : ", NOT decreasing") + fmt(", N=400 < %.1e", thr));
    }
    {
        const auto res = rows(all, "eigen-residual");
        const auto ef = rows(all, "eigenfunction");
        const auto jh = rows(all, "jh-recurrence", [](const CheckReport& c) { return param(c, "n") <= 10; });
        // perturbed rows hold 1e-2 / residual
        const auto pr = rows(all, "perturbed-residual");
        double pmin = INFINITY;
        for (const auto* c : pr.v) pmin = std::min(pmin, 1e-2 / c->lhs.real());
        const double er = res.max(abs_err), ee = ef.max(abs_err), ej = jh.max(abs_err);
        const double ms = res.ms + ef.ms + jh.ms + pr.ms;
        const bool err = res.any_error() || ef.any_error() || jh.any_error() || pr.any_error();
        line("A6", res.size() == 6 && ef.size() == 30 && pr.size() == 6 && jh.size() == 30 && !err && er <= 1e-6 &&
                       ee <= 1e-8 && ej <= 1e-10 && pmin >= 1e-2 && ms < 5000.0,
             fmt("eigen-residual %.2e <= 1e-6, eigenfunction %.2e <= 1e-8, JH %.2e <= 1e-10, ", er, ee, ej) +
                 fmt("perturbed residual %.2e >= 1e-2, %.1f ms < 5 s", pmin, ms));
    }
    {
        const auto o = rows(all, "little-qjacobi-ortho");
        const auto w = rows(all, "qweber2");
        const auto p = rows(all, "q-planewave");
        const auto h = rows(all, "q-hankel-inversion");
        const double eo = o.max(abs_err), ew = w.max(rel_err), ep = p.max(abs_err), eh = h.max(abs_err);
        double ms = 0.0;
        for (const auto& c : all.checks)
            if (c.suite == "q-core" || c.suite == "q-weber" || c.suite == "q-planewave") ms += c.runtime_ms;
        const bool err = o.any_error() || w.any_error() || p.any_error() || h.any_error();
        line("A7", o.size() == 36 && w.size() == 6 && p.size() == 16 && h.size() == 7 && !err && eo <= 1e-12 && ew <= 1e-12 &&
                       ep <= 1e-10 && eh <= 1e-11 && ms < 5000.0,
             fmt("q-Jacobi ortho %.2e <= 1e-12, q-Weber %.2e <= 1e-12, q plane wave %.2e <= 1e-10, ", eo, ew, ep) +
                 fmt("q-Hankel inversion %.2e <= 1e-11, q suites %.1f ms < 5 s", eh, ms));
    }
    {
        const auto l = rows(all, "lcn-lowering");
        const auto t = rows(all, "lambda-T");
        const auto o = rows(all, "orthocomplement");
        const double el = l.max(abs_err), et = t.max(abs_err), eo = o.max(abs_err);
        line("A8", l.size() == 10 && t.size() == 9 && o.size() == 6 && !l.any_error() && !t.any_error() && !o.any_error() &&
                       el <= 1e-12 && et <= 1e-12 && eo <= 1e-8,
             fmt("LCn coefficient residual %.2e <= 1e-12 (n <= 10), Lambda T %.2e <= 1e-12, orthocomplement %.2e <= 1e-8", el,
                 et, eo));
    }
    {
        const std::string cmd = std::string("\"") + argv[1] + "\" verify all --format json --out /dev/null";
        const auto t0 = std::chrono::steady_clock::now();
        const int st = std::system(cmd.c_str());
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const int code = st != -1 && WIFEXITED(st) ? WEXITSTATUS(st) : -1;
        line("A9", code == 0 && s < 60.0, fmt("verify all exit %g, %.2f s < 60 s", code, s));
    }
    return failures == 0 ? 0 : 1;
}
