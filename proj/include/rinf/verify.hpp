#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace rinf::verify {

/// Runtime configuration for the verification suites. Randomized cases
/// draw their trial streams from (seed, case name); trials is the base
/// count for cases specified at 10^3 trials, and cases specified at 10^4
/// use ten times it. Tolerances override per-case thresholds by name.
struct Config {
    std::uint64_t seed = 42;
    int trials = 1000;
    std::map<std::string, double> tolerances;
    int grid_N = 64;
    int flow_steps = 256;

    void validate() const;
    double tol(const std::string& case_name, double fallback) const;
};

struct Case {
    std::string name;
    double metric = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct Report {
    std::string suite;
    std::vector<Case> cases;
    std::int64_t wall_time_ms = 0;

    bool all_pass() const;
};

/// Build a finished case: pass iff metric <= threshold, with the
/// threshold possibly overridden through cfg.tolerances.
Case make_case(const Config& cfg, const std::string& name, double metric,
               double default_threshold);

/// Run one module's invariant suite ("calculus", "sphere", "frames",
/// "glinf", "mapspace") or "all". Deterministic given (name, cfg) except
/// for wall_time_ms. Throws UnknownSuite for other names.
Report run_suite(const std::string& name, const Config& cfg);

std::vector<Case> calculus_cases(const Config& cfg);
std::vector<Case> sphere_cases(const Config& cfg);
std::vector<Case> frames_cases(const Config& cfg);
std::vector<Case> glinf_cases(const Config& cfg);
std::vector<Case> mapspace_cases(const Config& cfg);

/// Run a named demo ("iwasawa", "flow", "bch-order"); returns the
/// human-readable text and fills the JSON sidecar. Throws UnknownDemo.
std::string demo(const std::string& name, const Config& cfg,
                 nlohmann::json& sidecar);

/// Least-squares slope of log y against log x.
double fit_loglog_slope(const std::vector<double>& x,
                        const std::vector<double>& y);

void to_json(nlohmann::json& j, const Case& c);
void from_json(const nlohmann::json& j, Case& c);
void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);
void to_json(nlohmann::json& j, const Config& c);
void from_json(const nlohmann::json& j, Config& c);

}  // namespace rinf::verify
