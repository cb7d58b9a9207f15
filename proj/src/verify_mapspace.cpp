#include <cmath>

#include "rinf/mapspace.hpp"
#include "rinf/rng.hpp"
#include "rinf/sampling.hpp"
#include "rinf/verify.hpp"

namespace rinf::verify {

using mapspace::CircleDiffeo;
using mapspace::DiscretizedMap;
using mapspace::GridS1;
using mapspace::SectionAlongMap;
using mapspace::Target;
using mapspace::VectorFieldS1;

namespace {

double max_vec_dev(const std::vector<mapspace::TangentVec>& a,
                   const std::vector<mapspace::TangentVec>& b) {
    double m = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t d = 0; d < a[j].size(); ++d)
            m = std::max(m, std::abs(a[j][d] - b[j][d]));
    return m;
}

double max_lift_dev(const CircleDiffeo& a, const CircleDiffeo& b) {
    double m = 0.0;
    for (std::size_t j = 0; j < a.lift().size(); ++j)
        m = std::max(m, std::abs(a.lift()[j] - b.lift()[j]));
    return m;
}

}  // namespace

std::vector<Case> mapspace_cases(const Config& cfg) {
    std::vector<Case> cases;
    const GridS1 grid(cfg.grid_N);
    const std::vector<Target> targets = {Target::circle(), Target::sphere2(),
                                         Target::euclidean(3)};

    {
        Rng rng(cfg.seed, "mapspace.chart_roundtrip");
        double metric = 0.0;
        for (const auto& target : targets) {
            for (int t = 0; t < cfg.trials / 3; ++t) {
                const DiscretizedMap f = random_map(rng, grid, target);
                const DiscretizedMap g = random_nearby(rng, f, 1.0);
                const DiscretizedMap back =
                    mapspace::chart_inverse(f, mapspace::chart_forward(f, g));
                metric = std::max(metric, mapspace::max_sample_dist(back, g));
            }
        }
        cases.push_back(make_case(cfg, "mapspace.chart_roundtrip", metric, 1e-10));
    }

    {
        // chart changes compose along the cocycle
        Rng rng(cfg.seed, "mapspace.cocycle");
        double metric = 0.0;
        for (const auto& target : targets) {
            for (int t = 0; t < std::max(1, cfg.trials / 10); ++t) {
                const DiscretizedMap h = random_map(rng, grid, target);
                const DiscretizedMap g = random_nearby(rng, h, 0.35);
                const DiscretizedMap f = random_nearby(rng, g, 0.35);
                const SectionAlongMap s(
                    h, random_section_vecs(rng, h, 0.35));
                const SectionAlongMap via_g = mapspace::chart_change(
                    f, g, mapspace::chart_change(g, h, s));
                const SectionAlongMap direct = mapspace::chart_change(f, h, s);
                metric = std::max(metric,
                                  max_vec_dev(via_g.vecs(), direct.vecs()));
            }
        }
        cases.push_back(make_case(cfg, "mapspace.cocycle", metric, 1e-9));
    }

    {
        // flow is a one-parameter group up to the RK4 truncation order
        std::vector<double> field_vals(static_cast<std::size_t>(grid.N));
        for (int j = 0; j < grid.N; ++j)
            field_vals[static_cast<std::size_t>(j)] = std::sin(grid.theta(j));
        const VectorFieldS1 X(grid, std::move(field_vals));
        std::vector<double> steps_list = {32, 64, 128, 256};
        std::vector<double> defects;
        for (double sc : steps_list) {
            const int steps = static_cast<int>(sc);
            const CircleDiffeo half = mapspace::flow_exp(0.5 * X, steps);
            const CircleDiffeo full = mapspace::flow_exp(X, steps);
            defects.push_back(
                max_lift_dev(mapspace::compose_diffeo(half, half), full));
        }
        const double order = -fit_loglog_slope(steps_list, defects);
        cases.push_back(make_case(cfg, "mapspace.flow_one_parameter",
                                  std::abs(order - 4.0), 0.5));
    }

    {
        // d/dt u_f(g_t) at t = 0 recovers the generating section
        Rng rng(cfg.seed, "mapspace.tangent_identification");
        double metric = 0.0;
        for (const auto& target : targets) {
            for (int t = 0; t < std::max(1, cfg.trials / 10); ++t) {
                const DiscretizedMap f = random_map(rng, grid, target);
                const auto w = random_section_vecs(rng, f, 1.0);
                auto family = [&](double tt) {
                    std::vector<mapspace::TargetPoint> samples;
                    samples.reserve(f.samples().size());
                    for (int j = 0; j < grid.N; ++j) {
                        const auto& p = f.sample(j);
                        const auto& wj = w[static_cast<std::size_t>(j)];
                        mapspace::TargetPoint q(p.size());
                        for (std::size_t d = 0; d < p.size(); ++d)
                            q[d] = p[d] + tt * wj[d];
                        if (target.kind == mapspace::TargetKind::sphere2) {
                            double n = 0.0;
                            for (double c : q) n += c * c;
                            n = std::sqrt(n);
                            for (auto& c : q) c /= n;
                        }
                        samples.push_back(std::move(q));
                    }
                    return DiscretizedMap(grid, target, std::move(samples));
                };
                const double h = 1e-4;
                const auto sp = mapspace::chart_forward(f, family(h));
                const auto sm = mapspace::chart_forward(f, family(-h));
                std::vector<mapspace::TangentVec> fd(sp.vecs().size());
                for (std::size_t j = 0; j < fd.size(); ++j) {
                    fd[j].resize(sp.vecs()[j].size());
                    for (std::size_t d = 0; d < fd[j].size(); ++d)
                        fd[j][d] = (sp.vecs()[j][d] - sm.vecs()[j][d]) / (2 * h);
                }
                metric = std::max(metric, max_vec_dev(fd, w));
            }
        }
        cases.push_back(
            make_case(cfg, "mapspace.tangent_identification", metric, 1e-6));
    }

    {
        // bracket antisymmetry and the Jacobi identity at spectral accuracy
        Rng rng(cfg.seed, "mapspace.bracket_jacobi");
        double metric = 0.0;
        for (int t = 0; t < std::max(1, cfg.trials / 10); ++t) {
            const VectorFieldS1 x = random_band_limited_field(rng, grid, 4, 1.0);
            const VectorFieldS1 y = random_band_limited_field(rng, grid, 4, 1.0);
            const VectorFieldS1 z = random_band_limited_field(rng, grid, 4, 1.0);
            const VectorFieldS1 anti =
                mapspace::lie_bracket(x, y) + mapspace::lie_bracket(y, x);
            for (double c : anti.values) metric = std::max(metric, std::abs(c));
            const VectorFieldS1 jac =
                mapspace::lie_bracket(x, mapspace::lie_bracket(y, z)) +
                mapspace::lie_bracket(y, mapspace::lie_bracket(z, x)) +
                mapspace::lie_bracket(z, mapspace::lie_bracket(x, y));
            for (double c : jac.values) metric = std::max(metric, std::abs(c));
        }
        cases.push_back(make_case(cfg, "mapspace.bracket_jacobi", metric, 1e-8));
    }

    {
        // double inversion interpolates the (non-band-limited) inverse, so
        // the samples stay tame enough for the grid to resolve it
        Rng rng(cfg.seed, "mapspace.diffeo_involution");
        double metric = 0.0;
        for (int t = 0; t < std::max(1, cfg.trials / 10); ++t) {
            const CircleDiffeo g =
                random_band_limited_diffeo(rng, grid, 2, 0.3);
            const CircleDiffeo back = mapspace::invert_diffeo(
                mapspace::invert_diffeo(g));
            metric = std::max(metric, max_lift_dev(back, g));
        }
        cases.push_back(
            make_case(cfg, "mapspace.diffeo_involution", metric, 1e-8));
    }

    return cases;
}

}  // namespace rinf::verify
