#include <cmath>
#include <numbers>

#include "rinf/errors.hpp"
#include "rinf/rng.hpp"
#include "rinf/sampling.hpp"
#include "rinf/sphere.hpp"
#include "rinf/verify.hpp"

namespace rinf::verify {

using sphere::ChartSign;
using sphere::SpherePoint;
using sphere::StereoChart;

std::vector<Case> sphere_cases(const Config& cfg) {
    std::vector<Case> cases;
    const SpherePoint a(FinSeq::unit(0));
    const StereoChart plus{a, ChartSign::plus};
    const StereoChart minus{a, ChartSign::minus};

    {
        // u- . u+^{-1} against the closed-form inversion, on unit y
        Rng rng(cfg.seed, "sphere.chart_compatibility");
        double metric = 0.0;
        for (int t = 0; t < cfg.trials; ++t) {
            const FinSeq y =
                random_orthogonal_to(rng, a.coords(), 16, 1.0, 1.0);
            const FinSeq composite =
                sphere::stereo_forward(minus, sphere::stereo_inverse(plus, y));
            metric = std::max(metric,
                              weak_norm(composite - sphere::transition(y)));
        }
        cases.push_back(
            make_case(cfg, "sphere.chart_compatibility", metric, 1e-12));
    }

    {
        // stereo_inverse and geodesic land on the sphere
        Rng rng(cfg.seed, "sphere.preservation");
        double metric = 0.0;
        for (int t = 0; t < 10 * cfg.trials; ++t) {
            const FinSeq y =
                random_orthogonal_to(rng, a.coords(), 16, 0.25, 4.0);
            const SpherePoint x = sphere::stereo_inverse(plus, y);
            metric = std::max(
                metric, std::abs(weak_inner(x.coords(), x.coords()) - 1.0));

            FinSeq v = random_finseq(rng, 16);
            v = v - scale(weak_inner(v, x.coords()), x.coords());
            const double n = weak_norm(v);
            if (n > 1e-6) {
                const SpherePoint c =
                    sphere::geodesic(x, scale(1.0 / n, v), rng.uniform(-3.0, 3.0));
                metric = std::max(
                    metric, std::abs(weak_inner(c.coords(), c.coords()) - 1.0));
            }
        }
        cases.push_back(make_case(cfg, "sphere.preservation", metric, 1e-10));
    }

    {
        // chart transport between two poles is bijective on the overlap
        Rng rng(cfg.seed, "sphere.pole_independence");
        double metric = 0.0;
        int done = 0;
        while (done < cfg.trials) {
            const SpherePoint b(random_unit(rng, 8));
            if (std::abs(weak_inner(a.coords(), b.coords())) > 1.0 - 1e-3)
                continue;
            const StereoChart other{b, ChartSign::plus};
            const FinSeq y =
                random_orthogonal_to(rng, a.coords(), 8, 0.25, 4.0);
            const SpherePoint x = sphere::stereo_inverse(plus, y);
            if (weak_inner(x.coords(), b.coords()) > 1.0 - 1e-3) continue;
            const FinSeq yb = sphere::stereo_forward(other, x);
            const SpherePoint x2 = sphere::stereo_inverse(other, yb);
            const FinSeq y2 = sphere::stereo_forward(plus, x2);
            metric = std::max(metric, weak_norm(x2.coords() - x.coords()));
            metric = std::max(metric, weak_norm(y2 - y));
            ++done;
        }
        cases.push_back(
            make_case(cfg, "sphere.pole_independence", metric, 1e-10));
    }

    {
        // geodesic(x,v,s+t) equals restarting at s with the transported
        // velocity, within the closed form on span{x, v/|v|}
        Rng rng(cfg.seed, "sphere.geodesic_group");
        double metric = 0.0;
        for (int t = 0; t < cfg.trials; ++t) {
            const SpherePoint x(random_unit(rng, 12));
            FinSeq v = random_finseq(rng, 12);
            v = v - scale(weak_inner(v, x.coords()), x.coords());
            const double n = weak_norm(v);
            if (n < 1e-6) continue;
            v = scale(1.0 / n, v);  // |v| = 1
            const double s = rng.uniform(-1.5, 1.5);
            const double u = rng.uniform(-1.5, 1.5);
            if (std::abs(s) + std::abs(u) >= std::numbers::pi) continue;
            const SpherePoint mid = sphere::geodesic(x, v, s);
            const FinSeq vel = sphere::geodesic_velocity(x, v, s);
            const SpherePoint direct = sphere::geodesic(x, v, s + u);
            const SpherePoint restarted = sphere::geodesic(mid, vel, u);
            metric = std::max(
                metric, weak_norm(direct.coords() - restarted.coords()));
        }
        cases.push_back(make_case(cfg, "sphere.geodesic_group", metric, 1e-10));
    }

    return cases;
}

}  // namespace rinf::verify
