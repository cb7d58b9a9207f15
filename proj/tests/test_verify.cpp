#include <doctest.h>

#include <nlohmann/json.hpp>

#include "rinf/errors.hpp"
#include "rinf/verify.hpp"

using rinf::verify::Config;
using rinf::verify::Report;

namespace {
Config small_config() {
    Config cfg;
    cfg.trials = 20;
    cfg.seed = 7;
    return cfg;
}
}  // namespace

TEST_CASE("run_suite is deterministic given (name, config)") {
    const Config cfg = small_config();
    const Report a = rinf::verify::run_suite("sphere", cfg);
    const Report b = rinf::verify::run_suite("sphere", cfg);
    REQUIRE(a.cases.size() == b.cases.size());
    for (std::size_t i = 0; i < a.cases.size(); ++i) {
        CHECK(a.cases[i].name == b.cases[i].name);
        CHECK(a.cases[i].metric == b.cases[i].metric);
        CHECK(a.cases[i].threshold == b.cases[i].threshold);
        CHECK(a.cases[i].pass == b.cases[i].pass);
    }

    nlohmann::json ja = a, jb = b;
    ja.erase("wall_time_ms");
    jb.erase("wall_time_ms");
    CHECK(ja.dump() == jb.dump());
}

TEST_CASE("the aggregated suite contains every module's cases") {
    Config cfg = small_config();
    cfg.trials = 1;
    const Report all = rinf::verify::run_suite("all", cfg);
    int found = 0;
    for (const auto* prefix :
         {"calculus.", "sphere.", "frames.", "glinf.", "mapspace."}) {
        bool any = false;
        for (const auto& c : all.cases)
            if (c.name.starts_with(prefix)) any = true;
        if (any) ++found;
    }
    CHECK(found == 5);
    CHECK(all.suite == "all");
}

TEST_CASE("unknown suites and demos are rejected") {
    CHECK_THROWS_AS(rinf::verify::run_suite("specter", small_config()),
                    rinf::UnknownSuite);
    nlohmann::json sidecar;
    CHECK_THROWS_AS(rinf::verify::demo("specter", small_config(), sidecar),
                    rinf::UnknownDemo);
}

TEST_CASE("case pass flag follows metric <= threshold") {
    const Config cfg;
    const auto pass = rinf::verify::make_case(cfg, "x", 1.0, 1.0);
    CHECK(pass.pass);
    const auto fail = rinf::verify::make_case(cfg, "x", 1.0 + 1e-12, 1.0);
    CHECK_FALSE(fail.pass);
}

TEST_CASE("config tolerances override case thresholds") {
    Config cfg;
    cfg.tolerances["some.case"] = 0.5;
    const auto c = rinf::verify::make_case(cfg, "some.case", 0.4, 1e-10);
    CHECK(c.threshold == 0.5);
    CHECK(c.pass);
}

TEST_CASE("config validation") {
    Config cfg;
    cfg.trials = 0;
    CHECK_THROWS_AS(cfg.validate(), rinf::InvalidArgument);
    cfg = Config{};
    cfg.grid_N = 9;
    CHECK_THROWS_AS(cfg.validate(), rinf::InvalidArgument);
    cfg = Config{};
    cfg.tolerances["x"] = -1.0;
    CHECK_THROWS_AS(cfg.validate(), rinf::InvalidArgument);
}

TEST_CASE("config JSON roundtrip with defaults") {
    const auto j = nlohmann::json::parse(R"({"seed": 9, "trials": 50})");
    const Config cfg = j.get<Config>();
    CHECK(cfg.seed == 9);
    CHECK(cfg.trials == 50);
    CHECK(cfg.grid_N == 64);
    CHECK(cfg.flow_steps == 256);

    const nlohmann::json back = cfg;
    CHECK(back.at("seed") == 9);
    CHECK(back.contains("tolerances"));
}

TEST_CASE("report JSON schema") {
    Config cfg = small_config();
    cfg.trials = 5;
    const Report r = rinf::verify::run_suite("calculus", cfg);
    const nlohmann::json j = r;
    CHECK(j.at("suite") == "calculus");
    CHECK(j.at("cases").is_array());
    CHECK(j.at("cases").size() >= 5);
    for (const auto& c : j.at("cases")) {
        CHECK(c.contains("name"));
        CHECK(c.contains("metric"));
        CHECK(c.contains("threshold"));
        CHECK(c.contains("pass"));
    }
    CHECK(j.contains("wall_time_ms"));
    CHECK(j.get<Report>().cases.size() == r.cases.size());
}

TEST_CASE("demos produce sidecars") {
    const Config cfg = small_config();
    for (const auto* name : {"iwasawa", "flow", "bch-order"}) {
        nlohmann::json sidecar;
        const std::string text = rinf::verify::demo(name, cfg, sidecar);
        CHECK(!text.empty());
        CHECK(sidecar.at("demo") == name);
    }
}

TEST_CASE("loglog slope fit recovers exact power laws") {
    const std::vector<double> x = {1.0, 2.0, 4.0, 8.0};
    std::vector<double> y;
    for (double xi : x) y.push_back(3.0 * xi * xi * xi);
    CHECK(rinf::verify::fit_loglog_slope(x, y) == doctest::Approx(3.0));
}
