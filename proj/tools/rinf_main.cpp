// Command-line harness: configures tolerances and seeds, runs the
// per-module verification suites and demos, and emits JSON reports.
//
// Exit codes: 0 all cases pass, 1 some case failed, 2 usage error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rinf/errors.hpp"
#include "rinf/mapspace.hpp"
#include "rinf/verify.hpp"

namespace {

using rinf::verify::Config;
using rinf::verify::Report;

struct CliOptions {
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::optional<int> grid_N;
    std::optional<int> flow_steps;
    std::string config_path;
    std::string json_path;
    std::vector<std::string> tolerance_args;
};

Config resolve_config(const CliOptions& opt) {
    Config cfg;
    if (!opt.config_path.empty()) {
        std::ifstream in(opt.config_path);
        if (!in) throw rinf::InvalidArgument("cannot open config file: " +
                                             opt.config_path);
        nlohmann::json j;
        in >> j;
        cfg = j.get<Config>();
    }
    if (opt.seed) cfg.seed = *opt.seed;
    if (opt.trials) cfg.trials = *opt.trials;
    if (opt.grid_N) cfg.grid_N = *opt.grid_N;
    if (opt.flow_steps) cfg.flow_steps = *opt.flow_steps;
    for (const auto& t : opt.tolerance_args) {
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw rinf::InvalidArgument("--tolerance expects name=value: " + t);
        cfg.tolerances[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
    }
    cfg.validate();
    return cfg;
}

void write_json(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw rinf::InvalidArgument("cannot write JSON file: " + path);
    out << j.dump(2) << "\n";
}

int emit_report(const Report& report, const std::string& json_path) {
    for (const auto& c : report.cases)
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name
                  << "  metric=" << c.metric << "  threshold=" << c.threshold
                  << "\n";
    std::cout << (report.all_pass() ? "ok" : "FAILED") << ": " << report.suite
              << " (" << report.cases.size() << " cases, "
              << report.wall_time_ms << " ms)\n";
    if (!json_path.empty())
        write_json(json_path, report);
    else
        std::cout << nlohmann::json(report).dump() << "\n";
    return report.all_pass() ? 0 : 1;
}

int run_verify(const std::string& suite, const CliOptions& opt) {
    return emit_report(rinf::verify::run_suite(suite, resolve_config(opt)),
                       opt.json_path);
}

int run_demo(const std::string& name, const CliOptions& opt) {
    nlohmann::json sidecar;
    std::cout << rinf::verify::demo(name, resolve_config(opt), sidecar);
    if (!opt.json_path.empty())
        write_json(opt.json_path, sidecar);
    else
        std::cout << "\nJSON: " << sidecar.dump() << "\n";
    return 0;
}

// Field spec: terms joined by '+', each "constant:<c>", "sin:<amp>:<k>"
// or "cos:<amp>:<k>".
rinf::mapspace::VectorFieldS1 parse_field(const std::string& spec,
                                          const rinf::mapspace::GridS1& grid) {
    std::vector<double> values(static_cast<std::size_t>(grid.N), 0.0);
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const auto next = spec.find('+', pos);
        const std::string term =
            spec.substr(pos, next == std::string::npos ? next : next - pos);
        std::vector<std::string> parts;
        std::size_t p = 0;
        while (p <= term.size()) {
            const auto c = term.find(':', p);
            parts.push_back(
                term.substr(p, c == std::string::npos ? c : c - p));
            if (c == std::string::npos) break;
            p = c + 1;
        }
        auto num = [&](std::size_t i, double fallback) {
            return parts.size() > i && !parts[i].empty() ? std::stod(parts[i])
                                                         : fallback;
        };
        if (parts.empty() || parts[0].empty())
            throw rinf::InvalidArgument("empty field term in spec: " + spec);
        for (int j = 0; j < grid.N; ++j) {
            const double th = grid.theta(j);
            double v = 0.0;
            if (parts[0] == "constant") {
                v = num(1, 1.0);
            } else if (parts[0] == "sin") {
                v = num(1, 1.0) * std::sin(num(2, 1.0) * th);
            } else if (parts[0] == "cos") {
                v = num(1, 1.0) * std::cos(num(2, 1.0) * th);
            } else {
                throw rinf::InvalidArgument("unknown field term '" + parts[0] +
                                            "'");
            }
            values[static_cast<std::size_t>(j)] += v;
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return {grid, std::move(values)};
}

int run_flow(const std::string& field_spec, int steps, const CliOptions& opt) {
    namespace ms = rinf::mapspace;
    const Config cfg = resolve_config(opt);
    const ms::GridS1 grid(cfg.grid_N);
    const ms::VectorFieldS1 X = parse_field(field_spec, grid);

    const ms::CircleDiffeo flow = ms::flow_exp(X, steps);
    std::cout << "time-1 flow of '" << field_spec << "' at N = " << grid.N
              << ", steps = " << steps << "\n";
    for (int j = 0; j < grid.N; j += std::max(1, grid.N / 8))
        std::cout << "  theta = " << grid.theta(j) << "  ->  "
                  << flow.lift()[static_cast<std::size_t>(j)] << "\n";

    // one-parameter defect across a halving ladder gives the observed
    // integrator order
    std::vector<double> ladder, defects;
    for (int s = std::max(8, steps / 8); s <= steps; s *= 2) {
        const ms::CircleDiffeo half = ms::flow_exp(0.5 * X, s);
        const ms::CircleDiffeo full = ms::flow_exp(X, s);
        const ms::CircleDiffeo joined = ms::compose_diffeo(half, half);
        double d = 0.0;
        for (int j = 0; j < grid.N; ++j)
            d = std::max(d,
                         std::abs(joined.lift()[static_cast<std::size_t>(j)] -
                                  full.lift()[static_cast<std::size_t>(j)]));
        ladder.push_back(s);
        defects.push_back(d);
    }
    const double max_error = defects.back();
    double order = 0.0;
    if (max_error > 1e-12 && ladder.size() >= 2)
        order = -rinf::verify::fit_loglog_slope(ladder, defects);
    const bool pass = max_error <= 1e-10 ||
                      (std::abs(order - 4.0) <= 0.5 && max_error <= 1e-4);
    std::cout << "one-parameter defect at steps = " << steps << ": "
              << max_error << " (observed order " << order << ")\n";

    const nlohmann::json j = {{"test", "flow"},
                              {"max_error", max_error},
                              {"order_estimate", order},
                              {"pass", pass}};
    if (!opt.json_path.empty())
        write_json(opt.json_path, j);
    else
        std::cout << "JSON: " << j.dump() << "\n";
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rinf: finite-scale geometry on the space of finite "
                 "sequences"};
    app.require_subcommand(1);

    CliOptions opt;
    auto add_common = [&opt](CLI::App* cmd) {
        cmd->add_option("--seed", opt.seed, "RNG seed");
        cmd->add_option("--trials", opt.trials, "base trial count");
        cmd->add_option("--grid_N", opt.grid_N, "circle grid size (even, >= 8)");
        cmd->add_option("--flow_steps", opt.flow_steps, "RK4 steps for flows");
        cmd->add_option("--config", opt.config_path, "JSON config file");
        cmd->add_option("--json", opt.json_path, "write the JSON report here");
        cmd->add_option("--tolerance", opt.tolerance_args,
                        "override a case threshold, name=value");
    };

    std::string suite = "all";
    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suite", suite,
                       "calculus|sphere|frames|glinf|mapspace|all");
    add_common(verify);

    std::string demo_name;
    CLI::App* demo = app.add_subcommand("demo", "run a named demo");
    demo->add_option("name", demo_name, "iwasawa|flow|bch-order")->required();
    add_common(demo);

    // per-module aliases: `rinf sphere verify`, ...
    std::vector<std::pair<std::string, CLI::App*>> module_verifies;
    for (const auto* name : {"calculus", "sphere", "frames", "glinf", "mapspace"}) {
        CLI::App* mod = app.add_subcommand(name, std::string("the ") + name +
                                                     " module");
        CLI::App* mv = mod->add_subcommand("verify", "run this module's suite");
        add_common(mv);
        module_verifies.emplace_back(name, mv);
        mod->require_subcommand(1);
    }

    std::string field_spec = "sin:1:1";
    int flow_steps_arg = 256;
    CLI::App* mapspace_cmd = nullptr;
    for (auto& [name, sub] : module_verifies)
        if (name == "mapspace") mapspace_cmd = sub->get_parent();
    CLI::App* flow = mapspace_cmd->add_subcommand("flow", "integrate a field");
    flow->add_option("--field", field_spec,
                     "field spec, e.g. 'sin:1:1' or 'constant:0.5+cos:1:2'");
    flow->add_option("--steps", flow_steps_arg, "RK4 step count");
    add_common(flow);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return run_verify(suite, opt);
        if (demo->parsed()) return run_demo(demo_name, opt);
        if (flow->parsed()) return run_flow(field_spec, flow_steps_arg, opt);
        for (const auto& [name, sub] : module_verifies)
            if (sub->parsed()) return run_verify(name, opt);
    } catch (const rinf::UnknownSuite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rinf::UnknownDemo& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rinf::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rinf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
