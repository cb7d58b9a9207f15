#include <cmath>
#include <vector>

#include "rinf/calculus.hpp"
#include "rinf/rng.hpp"
#include "rinf/sampling.hpp"
#include "rinf/verify.hpp"

namespace rinf::verify {

using calculus::MapHandle;
using calculus::TwoArgHandle;

namespace {

// fixed corpus of smooth test maps used by the derivative cases
std::vector<MapHandle> smooth_corpus() {
    std::vector<MapHandle> maps;
    maps.push_back({[](const FinSeq& x) {
                        return scale(weak_inner(x, x), FinSeq::unit(0));
                    },
                    std::nullopt});
    maps.push_back({[](const FinSeq& x) { return scale(3.0, x); }, std::nullopt});
    maps.push_back({[](const FinSeq& x) {
                        std::vector<double> out = {x[0] * x[0], x[0] * x[1],
                                                   x[1] * x[1]};
                        return FinSeq(std::move(out));
                    },
                    2});
    maps.push_back({[](const FinSeq& x) {
                        std::vector<double> out = {
                            std::sin(x[0]), std::cos(x[1]) - 1.0,
                            std::sin(x[2]) * std::cos(x[0])};
                        return FinSeq(std::move(out));
                    },
                    3});
    maps.push_back({[](const FinSeq& x) {
                        std::vector<double> out = {
                            x[0] * x[0] * x[0] - 2.0 * x[1],
                            x[0] * x[1] * x[2], x[3] + 0.5 * x[0] * x[0]};
                        return FinSeq(std::move(out));
                    },
                    4});
    return maps;
}

}  // namespace

std::vector<Case> calculus_cases(const Config& cfg) {
    std::vector<Case> cases;

    {
        // cartesian closure: curry/uncurry roundtrips are definitional and
        // must agree pointwise exactly
        Rng rng(cfg.seed, "calculus.exp_law_roundtrip");
        std::vector<TwoArgHandle> corpus;
        corpus.push_back({[](const FinSeq& x, const FinSeq& y) {
            return scale(weak_inner(x, y), FinSeq::unit(0));
        }});
        corpus.push_back({[](const FinSeq& x, const FinSeq&) { return x; }});
        corpus.push_back({[](const FinSeq& x, const FinSeq& y) {
            return calculus::pair_interleave(x, y);
        }});
        double metric = 0.0;
        for (int t = 0; t < cfg.trials; ++t) {
            const FinSeq x = random_finseq(rng, 8);
            const FinSeq y = random_finseq(rng, 8);
            for (const auto& F : corpus) {
                const TwoArgHandle back = calculus::uncurry(calculus::curry(F));
                if (!(back(x, y) == F(x, y))) metric = 1.0;
            }
            const calculus::CurriedMap G = [](const FinSeq& a) {
                return MapHandle{[a](const FinSeq& b) { return a + b; },
                                 std::nullopt};
            };
            const calculus::CurriedMap back =
                calculus::curry(calculus::uncurry(G));
            if (!(back(x)(y) == G(x)(y))) metric = 1.0;
        }
        cases.push_back(make_case(cfg, "calculus.exp_law_roundtrip", metric, 0.0));
    }

    {
        Rng rng(cfg.seed, "calculus.derivative_linearity");
        const auto corpus = smooth_corpus();
        double metric = 0.0;
        for (int t = 0; t < cfg.trials; ++t) {
            const auto& f = corpus[rng.index(corpus.size())];
            const FinSeq x = random_finseq(rng, 4);
            const FinSeq v = random_finseq(rng, 4);
            const FinSeq w = random_finseq(rng, 4);
            const double a = rng.uniform(-2.0, 2.0);
            const double b = rng.uniform(-2.0, 2.0);
            const FinSeq lhs =
                calculus::directional_derivative(f, x, a * v + b * w);
            const FinSeq rhs = a * calculus::directional_derivative(f, x, v) +
                               b * calculus::directional_derivative(f, x, w);
            metric = std::max(metric, weak_norm(lhs - rhs) /
                                          (1.0 + weak_norm(rhs)));
        }
        cases.push_back(
            make_case(cfg, "calculus.derivative_linearity", metric, 1e-6));
    }

    {
        Rng rng(cfg.seed, "calculus.chain_rule");
        const auto corpus = smooth_corpus();
        double metric = 0.0;
        for (int t = 0; t < cfg.trials; ++t) {
            const auto& f = corpus[rng.index(corpus.size())];
            const auto& g = corpus[rng.index(corpus.size())];
            const FinSeq x = random_finseq(rng, 4);
            const FinSeq v = random_finseq(rng, 4);
            const double resid = calculus::chain_rule_residual(f, g, x, v);
            const FinSeq lhs = calculus::directional_derivative(
                calculus::comp(f, g), x, v);
            metric = std::max(metric, resid / (1.0 + weak_norm(lhs)));
        }
        cases.push_back(make_case(cfg, "calculus.chain_rule", metric, 1e-6));
    }

    {
        // plain central differences on an analytic map: O(h^2) before
        // extrapolation
        const MapHandle f{[](const FinSeq& x) {
                              return scale(std::sin(x[0]), FinSeq::unit(0));
                          },
                          1};
        const FinSeq x = scale(0.3, FinSeq::unit(0));
        const FinSeq v = FinSeq::unit(0);
        const FinSeq exact = scale(std::cos(0.3), FinSeq::unit(0));
        std::vector<double> hs, errs;
        for (double le = -1.0; le >= -3.0 - 1e-9; le -= 0.5) {
            const double h = std::pow(10.0, le);
            hs.push_back(h);
            errs.push_back(
                weak_norm(calculus::central_difference(f, x, v, h) - exact));
        }
        const double slope = fit_loglog_slope(hs, errs);
        cases.push_back(make_case(cfg, "calculus.fd_convergence_order",
                                  std::abs(slope - 2.0), 0.3));
    }

    {
        // acceptance of a Mackey family is inherited by its subsequences
        Rng rng(cfg.seed, "calculus.mackey_monotone");
        double violations = 0.0;
        const int families = std::max(1, cfg.trials / 10);
        for (int t = 0; t < families; ++t) {
            const FinSeq x = random_finseq(rng, 6);
            const FinSeq shape = random_unit(rng, 6);
            const double rho = rng.uniform(0.5, 0.9);
            std::vector<FinSeq> xs;
            double c = rng.uniform(0.5, 2.0);
            for (int n = 0; n < 24; ++n) {
                xs.push_back(x + scale(c, shape));
                c *= rho;
            }
            if (!calculus::mackey_check(xs, x).accepted) {
                violations += 1.0;
                continue;
            }
            std::vector<FinSeq> sub;
            for (const auto& xn : xs)
                if (rng.uniform01() < 0.6) sub.push_back(xn);
            if (sub.size() < 2) sub.assign(xs.begin(), xs.begin() + 2);
            if (!calculus::mackey_check(sub, x).accepted) violations += 1.0;
        }
        cases.push_back(make_case(cfg, "calculus.mackey_monotone", violations, 0.0));
    }

    return cases;
}

}  // namespace rinf::verify
