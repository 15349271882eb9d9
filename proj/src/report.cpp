#include "biortho/harness.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace biortho::harness {

using nlohmann::json;

namespace {

// JSON has no infinities; errors of checks that threw are written as null.
json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }
double num_back(const json& j) { return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>(); }

template <class T>
json opt(const std::optional<T>& o) {
    return o ? json(*o) : json(nullptr);
}

template <class T>
std::optional<T> opt_back(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string short_fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string params_string(const std::map<std::string, double>& p) {
    std::string s;
    for (const auto& [k, v] : p) {
        if (!s.empty()) s += ';';
        char buf[48];
        std::snprintf(buf, sizeof buf, "%s=%.15g", k.c_str(), v);
        s += buf;
    }
    return s;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

} // namespace

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "text") return Format::text;
    throw UsageError("unknown format '" + s + "' (json, csv, text)");
}

json to_json(const SuiteReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json p = json::object();
        for (const auto& [k, v] : c.params) p[k] = v;
        json jc = {{"suite", c.suite},       {"id", c.id},           {"params", p},
                   {"lhs_re", c.lhs.real()}, {"lhs_im", c.lhs.imag()}, {"rhs_re", c.rhs.real()},
                   {"rhs_im", c.rhs.imag()}, {"abs_err", num(c.abs_err)}, {"rel_err", num(c.rel_err)},
                   {"tol", c.tol},           {"pass", c.pass},       {"runtime_ms", c.runtime_ms}};
        if (!c.error.empty()) jc["error"] = c.error;
        checks.push_back(std::move(jc));
    }
    json j = {{"suite", r.suite},
              {"params",
               {{"alpha", opt(r.params.alpha)},
                {"beta", opt(r.params.beta)},
                {"q", opt(r.params.q)},
                {"terms", opt(r.params.terms)},
                {"tol", opt(r.params.tol)},
                {"k_max", opt(r.params.k_max)}}},
              {"checks", checks},
              {"pass", r.pass},
              {"runtime_ms", r.runtime_ms}};
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

SuiteReport from_json(const json& j) {
    SuiteReport r;
    r.suite = j.at("suite").get<std::string>();
    const json& p = j.at("params");
    r.params.alpha = opt_back<double>(p, "alpha");
    r.params.beta = opt_back<double>(p, "beta");
    r.params.q = opt_back<double>(p, "q");
    r.params.terms = opt_back<int>(p, "terms");
    r.params.tol = opt_back<double>(p, "tol");
    r.params.k_max = opt_back<int>(p, "k_max");
    for (const auto& jc : j.at("checks")) {
        CheckReport c;
        c.suite = jc.value("suite", "");
        c.id = jc.at("id").get<std::string>();
        for (const auto& [k, v] : jc.at("params").items()) c.params[k] = v.get<double>();
        c.lhs = Cx(jc.at("lhs_re").get<double>(), jc.at("lhs_im").get<double>());
        c.rhs = Cx(jc.at("rhs_re").get<double>(), jc.at("rhs_im").get<double>());
        c.abs_err = num_back(jc.at("abs_err"));
        c.rel_err = num_back(jc.at("rel_err"));
        c.tol = jc.at("tol").get<double>();
        c.pass = jc.at("pass").get<bool>();
        c.runtime_ms = jc.value("runtime_ms", 0.0);
        c.error = jc.value("error", "");
        r.checks.push_back(std::move(c));
    }
    if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
    r.pass = j.at("pass").get<bool>();
    r.runtime_ms = j.at("runtime_ms").get<double>();
    return r;
}

std::string csv_header() {
    return "suite,id,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,tol,pass,runtime_ms";
}

std::string emit(const SuiteReport& r, Format f) {
    std::ostringstream os;
    switch (f) {
    case Format::json: os << to_json(r).dump(2) << '\n'; break;
    case Format::csv:
        os << csv_header() << '\n';
        for (const auto& c : r.checks)
            os << csv_field(c.suite) << ',' << csv_field(c.id) << ',' << csv_field(params_string(c.params)) << ','
               << fmt(c.lhs.real()) << ',' << fmt(c.lhs.imag()) << ',' << fmt(c.rhs.real()) << ',' << fmt(c.rhs.imag())
               << ',' << fmt(c.abs_err) << ',' << fmt(c.rel_err) << ',' << fmt(c.tol) << ',' << (c.pass ? "true" : "false")
               << ',' << fmt(c.runtime_ms) << '\n';
        break;
    case Format::text: {
        std::size_t wid = 8, wp = 6;
        for (const auto& c : r.checks) {
            wid = std::max(wid, c.suite.size() + c.id.size() + 1);
            wp = std::max(wp, params_string(c.params).size());
        }
        char line[512];
        std::snprintf(line, sizeof line, "%-*s  %-*s  %10s  %10s  %10s  %s\n", static_cast<int>(wid), "identity",
                      static_cast<int>(wp), "params", "abs_err", "rel_err", "tol", "result");
        os << line;
        std::size_t failed = 0;
        for (const auto& c : r.checks) {
            const std::string id = c.suite + "/" + c.id;
            std::snprintf(line, sizeof line, "%-*s  %-*s  %10s  %10s  %10s  %s", static_cast<int>(wid), id.c_str(),
                          static_cast<int>(wp), params_string(c.params).c_str(), short_fmt(c.abs_err).c_str(),
                          short_fmt(c.rel_err).c_str(), short_fmt(c.tol).c_str(), c.pass ? "PASS" : "FAIL");
            os << line;
            if (!c.error.empty()) os << "  (" << c.error << ')';
            os << '\n';
            failed += c.pass ? 0 : 1;
        }
        for (const auto& n : r.notes) os << "note: " << n << '\n';
        os << r.suite << ": " << r.checks.size() - failed << '/' << r.checks.size() << " passed";
        if (r.runtime_ms > 0.0) os << " in " << r.runtime_ms << " ms";
        os << (r.pass ? ", PASS" : ", FAIL") << '\n';
        break;
    }
    }
    return os.str();
}

void write_report(const SuiteReport& r, Format f, const std::string& path) {
    const std::string s = emit(r, f);
    if (path.empty() || path == "-") {
        std::cout << s << std::flush;
        if (!std::cout) throw IoError("cannot write report to stdout");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << s;
    out.close();
    if (!out) throw IoError("write to '" + path + "' failed");
}

} // namespace biortho::harness
