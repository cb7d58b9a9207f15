#include <cmath>

#include "rinf/glinf.hpp"
#include "rinf/rng.hpp"
#include "rinf/sampling.hpp"
#include "rinf/verify.hpp"

namespace rinf::verify {

using glinf::GLInfAlgebra;
using glinf::GLInfElement;

std::vector<Case> glinf_cases(const Config& cfg) {
    std::vector<Case> cases;

    {
        // exp and log invert each other near the identity
        Rng rng(cfg.seed, "glinf.exp_log_roundtrip");
        double metric = 0.0;
        for (int t = 0; t < cfg.trials; ++t) {
            const std::size_t n = 2 + rng.index(7);
            const GLInfAlgebra x =
                random_algebra(rng, n, rng.uniform(0.01, 0.5));
            const GLInfElement a = glinf::exp(x);
            const GLInfAlgebra back = glinf::log_near_id(a);
            metric = std::max(metric, glinf::max_abs(back - x));
            const GLInfElement fwd = glinf::exp(back);
            const std::size_t m = std::max(fwd.n(), a.n());
            if (m > 0)
                metric = std::max(metric, (fwd.padded(m) - a.padded(m))
                                              .cwiseAbs()
                                              .maxCoeff());
        }
        cases.push_back(
            make_case(cfg, "glinf.exp_log_roundtrip", metric, 1e-8));
    }

    {
        // exp commutes exactly with block padding (inductive limits)
        Rng rng(cfg.seed, "glinf.exp_inductive_limit");
        double metric = 0.0;
        for (int t = 0; t < std::max(1, cfg.trials / 10); ++t) {
            const std::size_t n = 2 + rng.index(5);
            const GLInfAlgebra x = random_algebra(rng, n, 0.8);
            const GLInfAlgebra padded(x.padded(n + 3));
            if (!(glinf::exp(padded) == glinf::exp(x))) metric = 1.0;
        }
        cases.push_back(
            make_case(cfg, "glinf.exp_inductive_limit", metric, 0.0));
    }

    {
        Rng rng(cfg.seed, "glinf.det_homomorphism");
        double metric = 0.0;
        for (int t = 0; t < cfg.trials; ++t) {
            const GLInfElement a =
                glinf::exp(random_algebra(rng, 2 + rng.index(7), 1.0));
            const GLInfElement b =
                glinf::exp(random_algebra(rng, 2 + rng.index(7), 1.0));
            const double lhs = glinf::det(glinf::compose(a, b));
            const double rhs = glinf::det(a) * glinf::det(b);
            metric = std::max(metric, std::abs(lhs - rhs) / std::abs(rhs));
        }
        cases.push_back(
            make_case(cfg, "glinf.det_homomorphism", metric, 1e-8));
    }

    {
        // bracket keeps o(inf) skew and sl(inf) traceless
        Rng rng(cfg.seed, "glinf.bracket_closure");
        double metric = 0.0;
        for (int t = 0; t < cfg.trials; ++t) {
            const std::size_t n = 2 + rng.index(7);
            const GLInfAlgebra sx = random_skew(rng, n, 1.0);
            const GLInfAlgebra sy = random_skew(rng, n, 1.0);
            const GLInfAlgebra sb = glinf::bracket(sx, sy);
            if (sb.n() > 0)
                metric = std::max(metric, (sb.block().transpose() + sb.block())
                                              .cwiseAbs()
                                              .maxCoeff());
            const GLInfAlgebra tx = random_traceless(rng, n, 1.0);
            const GLInfAlgebra ty = random_traceless(rng, n, 1.0);
            metric = std::max(metric,
                              std::abs(glinf::trace(glinf::bracket(tx, ty))));
        }
        cases.push_back(make_case(cfg, "glinf.bracket_closure", metric, 1e-12));
    }

    {
        Rng rng(cfg.seed, "glinf.one_parameter");
        double metric = 0.0;
        for (int t = 0; t < cfg.trials; ++t) {
            const std::size_t n = 2 + rng.index(7);
            const GLInfAlgebra x = random_algebra(rng, n, rng.uniform(0.1, 1.0));
            const double s = rng.uniform(-1.0, 1.0);
            const double u = rng.uniform(-1.0, 1.0);
            const GLInfElement joint = glinf::exp((s + u) * x);
            const GLInfElement split =
                glinf::compose(glinf::exp(s * x), glinf::exp(u * x));
            const std::size_t m = std::max(joint.n(), split.n());
            if (m > 0)
                metric = std::max(metric, (joint.padded(m) - split.padded(m))
                                              .cwiseAbs()
                                              .maxCoeff());
        }
        cases.push_back(make_case(cfg, "glinf.one_parameter", metric, 1e-9));
    }

    {
        // O(inf) members preserve the weak inner product
        Rng rng(cfg.seed, "glinf.isometry_action");
        double metric = 0.0;
        for (int t = 0; t < cfg.trials; ++t) {
            const GLInfElement a = random_isometry(rng, 2 + rng.index(7));
            if (!glinf::in_o(a)) {
                metric = std::max(metric, 1.0);
                continue;
            }
            const FinSeq x = random_finseq(rng, 8);
            const FinSeq y = random_finseq(rng, 8);
            const double lhs = weak_inner(glinf::act(a, x), glinf::act(a, y));
            metric = std::max(metric, std::abs(lhs - weak_inner(x, y)));
        }
        cases.push_back(make_case(cfg, "glinf.isometry_action", metric, 1e-9));
    }

    return cases;
}

}  // namespace rinf::verify
