#pragma once

#include "biortho/types.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace biortho::harness {

struct CheckReport {
    std::string suite;
    std::string id;
    std::map<std::string, double> params;
    Cx lhs, rhs;
    double abs_err = 0.0, rel_err = 0.0, tol = 0.0;
    bool pass = false;
    double runtime_ms = 0.0;
    std::string error; // set when the check threw instead of producing values

    bool operator==(const CheckReport&) const = default;
};

// rel_err = abs_err / |rhs|, or abs_err when rhs = 0. pass iff abs_err <= tol or rel_err <= tol.
CheckReport make_check(std::string suite, std::string id, std::map<std::string, double> params, Cx lhs, Cx rhs,
                       double tol);

// Overrides for a run; unset fields keep the suite's own grids.
struct SuiteParams {
    std::optional<double> alpha, beta, q;
    std::optional<int> terms;
    std::optional<double> tol;
    std::optional<int> k_max;
    bool timing = false; // runtime_ms stays 0 unless set, so reports are byte-stable

    bool operator==(const SuiteParams&) const = default;
};

struct SuiteReport {
    std::string suite;
    SuiteParams params;
    std::vector<CheckReport> checks;
    std::vector<std::string> notes;
    bool pass = true;
    double runtime_ms = 0.0;

    bool operator==(const SuiteReport&) const = default;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Identity {
    std::string id;
    std::string description;
};

// Suite names in registry order; "all" is last.
const std::vector<std::string>& suite_names();
// Identities checked by a suite (throws UsageError for unknown names).
const std::vector<Identity>& identities(const std::string& suite);
bool is_identity(const std::string& suite, const std::string& id);

SuiteReport run_suite(const std::string& name, const SuiteParams& overrides = {});

// Frozen sup-error threshold for the Dunkl sampling series at N terms.
double sampling_threshold(int N);

enum class Format { json, csv, text };
Format parse_format(const std::string& s);

nlohmann::json to_json(const SuiteReport& r);
SuiteReport from_json(const nlohmann::json& j);
std::string csv_header();
std::string emit(const SuiteReport& r, Format f);
// Writes to path, or stdout when path is empty or "-". Throws IoError.
void write_report(const SuiteReport& r, Format f, const std::string& path);

} // namespace biortho::harness
