#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rinf/errors.hpp"
#include "rinf/frames.hpp"
#include "rinf/glinf.hpp"
#include "rinf/mapspace.hpp"
#include "rinf/rng.hpp"
#include "rinf/sampling.hpp"
#include "rinf/verify.hpp"

namespace rinf::verify {

namespace {

std::string demo_iwasawa(const Config&, nlohmann::json& sidecar) {
    std::ostringstream out;
    out << "Iwasawa factorization B = p q (p orthonormal, q upper\n"
           "triangular with positive diagonal)\n\n";

    const frames::Frame ident({FinSeq::unit(0), FinSeq::unit(1)});
    const auto fi = frames::iwasawa(ident);
    out << "standard embedding frame: q = \n" << fi.q << "\n\n";

    std::vector<double> c0 = {2.0};
    std::vector<double> c1 = {1.0, 1.0};
    const frames::Frame B({FinSeq(c0), FinSeq(c1)});
    const auto f = frames::iwasawa(B);
    const frames::Frame back = frames::apply_small(f.p, f.q);
    double resid = 0.0;
    for (std::size_t j = 0; j < B.k(); ++j)
        resid = std::max(resid, sup_norm(back.col(j) - B.col(j)));

    out << "B columns (2 e1, e1 + e2): q = \n" << f.q << "\n";
    out << "reconstruction residual ||B - p q||_max = " << resid << "\n";

    sidecar = nlohmann::json{{"demo", "iwasawa"},
                             {"frame", B},
                             {"q", {{f.q(0, 0), f.q(0, 1)}, {0.0, f.q(1, 1)}}},
                             {"p", f.p},
                             {"residual", resid}};
    return out.str();
}

std::string demo_flow(const Config& cfg, nlohmann::json& sidecar) {
    std::ostringstream out;
    const mapspace::GridS1 grid(cfg.grid_N);

    std::vector<double> ones(static_cast<std::size_t>(grid.N), 1.0);
    const mapspace::CircleDiffeo rot =
        mapspace::flow_exp(mapspace::VectorFieldS1(grid, std::move(ones)),
                           cfg.flow_steps);
    double rot_err = 0.0;
    for (int j = 0; j < grid.N; ++j)
        rot_err = std::max(rot_err,
                           std::abs(rot.lift()[static_cast<std::size_t>(j)] -
                                    (grid.theta(j) + 1.0)));
    out << "flow of the constant field X = 1 (steps = " << cfg.flow_steps
        << "): rotation by 1, max node error " << rot_err << "\n";

    std::vector<double> sines(static_cast<std::size_t>(grid.N));
    for (int j = 0; j < grid.N; ++j)
        sines[static_cast<std::size_t>(j)] = std::sin(grid.theta(j));
    const mapspace::CircleDiffeo flow =
        mapspace::flow_exp(mapspace::VectorFieldS1(grid, std::move(sines)),
                           cfg.flow_steps);
    // separable ODE: theta' = sin theta has time-1 map
    // 2 atan(e tan(theta0 / 2)) between the equilibria
    double sin_err = 0.0;
    for (int j = 1; j < grid.N / 2; ++j) {
        const double th0 = grid.theta(j);
        const double exact =
            2.0 * std::atan(std::exp(1.0) * std::tan(0.5 * th0));
        sin_err = std::max(sin_err,
                           std::abs(flow.lift()[static_cast<std::size_t>(j)] -
                                    exact));
    }
    out << "flow of X = sin(theta): max node error vs the closed form "
        << sin_err << "\n";

    sidecar = nlohmann::json{{"demo", "flow"},
                             {"test", "flow"},
                             {"steps", cfg.flow_steps},
                             {"N", grid.N},
                             {"rotation_error", rot_err},
                             {"max_error", sin_err},
                             {"pass", sin_err <= 1e-6}};
    return out.str();
}

std::string demo_bch_order(const Config& cfg, nlohmann::json& sidecar) {
    std::ostringstream out;
    Rng rng(cfg.seed, "demo.bch-order");
    const glinf::GLInfAlgebra x = random_algebra(rng, 4, 1.0);
    const glinf::GLInfAlgebra y = random_algebra(rng, 4, 1.0);

    const std::vector<double> eps = {0.1, 0.05, 0.025};
    std::vector<double> resid;
    out << "BCH truncation order 4: residual of log(exp(eX) exp(eY))\n";
    for (double e : eps) {
        const glinf::GLInfAlgebra lhs = glinf::log_near_id(
            glinf::compose(glinf::exp(e * x), glinf::exp(e * y)));
        const double r = glinf::max_abs(lhs - glinf::bch(e * x, e * y, 4));
        resid.push_back(r);
        out << "  eps = " << e << "   residual = " << r << "\n";
    }
    const double slope = fit_loglog_slope(eps, resid);
    out << "fitted log-log slope = " << slope << " (expected 5)\n";

    sidecar = nlohmann::json{{"demo", "bch-order"},
                             {"eps", eps},
                             {"residuals", resid},
                             {"slope", slope}};
    return out.str();
}

}  // namespace

std::string demo(const std::string& name, const Config& cfg,
                 nlohmann::json& sidecar) {
    cfg.validate();
    if (name == "iwasawa") return demo_iwasawa(cfg, sidecar);
    if (name == "flow") return demo_flow(cfg, sidecar);
    if (name == "bch-order") return demo_bch_order(cfg, sidecar);
    throw UnknownDemo("demo: unknown demo '" + name + "'");
}

}  // namespace rinf::verify
