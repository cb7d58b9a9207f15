#include "rinf/verify.hpp"

#include <chrono>
#include <cmath>

#include <nlohmann/json.hpp>

#include "rinf/errors.hpp"

namespace rinf::verify {

void Config::validate() const {
    if (trials < 1) throw InvalidArgument("Config: trials must be >= 1");
    if (grid_N < 8 || grid_N % 2 != 0)
        throw InvalidArgument("Config: grid_N must be even and >= 8");
    if (flow_steps < 8) throw InvalidArgument("Config: flow_steps must be >= 8");
    for (const auto& [name, value] : tolerances)
        if (!(value > 0.0))
            throw InvalidArgument("Config: tolerance '" + name +
                                  "' must be positive");
}

double Config::tol(const std::string& case_name, double fallback) const {
    const auto it = tolerances.find(case_name);
    return it == tolerances.end() ? fallback : it->second;
}

bool Report::all_pass() const {
    for (const auto& c : cases)
        if (!c.pass) return false;
    return true;
}

Case make_case(const Config& cfg, const std::string& name, double metric,
               double default_threshold) {
    Case c;
    c.name = name;
    c.metric = metric;
    c.threshold = cfg.tol(name, default_threshold);
    c.pass = metric <= c.threshold;
    return c;
}

Report run_suite(const std::string& name, const Config& cfg) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    Report r;
    r.suite = name;
    if (name == "calculus") {
        r.cases = calculus_cases(cfg);
    } else if (name == "sphere") {
        r.cases = sphere_cases(cfg);
    } else if (name == "frames") {
        r.cases = frames_cases(cfg);
    } else if (name == "glinf") {
        r.cases = glinf_cases(cfg);
    } else if (name == "mapspace") {
        r.cases = mapspace_cases(cfg);
    } else if (name == "all") {
        for (const auto* suite :
             {"calculus", "sphere", "frames", "glinf", "mapspace"}) {
            Report part = run_suite(suite, cfg);
            r.cases.insert(r.cases.end(), part.cases.begin(), part.cases.end());
        }
    } else {
        throw UnknownSuite("run_suite: unknown suite '" + name + "'");
    }
    r.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return r;
}

double fit_loglog_slope(const std::vector<double>& x,
                        const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw InvalidArgument("fit_loglog_slope: need matching samples, >= 2");
    const auto n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void to_json(nlohmann::json& j, const Case& c) {
    j = nlohmann::json{{"name", c.name},
                       {"metric", c.metric},
                       {"threshold", c.threshold},
                       {"pass", c.pass}};
}

void from_json(const nlohmann::json& j, Case& c) {
    j.at("name").get_to(c.name);
    j.at("metric").get_to(c.metric);
    j.at("threshold").get_to(c.threshold);
    j.at("pass").get_to(c.pass);
}

void to_json(nlohmann::json& j, const Report& r) {
    j = nlohmann::json{{"suite", r.suite},
                       {"cases", r.cases},
                       {"wall_time_ms", r.wall_time_ms}};
}

void from_json(const nlohmann::json& j, Report& r) {
    j.at("suite").get_to(r.suite);
    j.at("cases").get_to(r.cases);
    j.at("wall_time_ms").get_to(r.wall_time_ms);
}

void to_json(nlohmann::json& j, const Config& c) {
    j = nlohmann::json{{"seed", c.seed},
                       {"trials", c.trials},
                       {"grid_N", c.grid_N},
                       {"flow_steps", c.flow_steps},
                       {"tolerances", c.tolerances}};
}

void from_json(const nlohmann::json& j, Config& c) {
    c = Config{};
    if (j.contains("seed")) j.at("seed").get_to(c.seed);
    if (j.contains("trials")) j.at("trials").get_to(c.trials);
    if (j.contains("grid_N")) j.at("grid_N").get_to(c.grid_N);
    if (j.contains("flow_steps")) j.at("flow_steps").get_to(c.flow_steps);
    if (j.contains("tolerances")) j.at("tolerances").get_to(c.tolerances);
    c.validate();
}

}  // namespace rinf::verify
