#include <doctest.h>

#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

#include "rinf/calculus.hpp"
#include "rinf/errors.hpp"
#include "rinf/rng.hpp"

using namespace rinf;
using calculus::CurveHandle;
using calculus::MapHandle;
using calculus::TwoArgHandle;

namespace {

const MapHandle kSqNorm{
    [](const FinSeq& x) { return scale(weak_inner(x, x), FinSeq::unit(0)); },
    std::nullopt};
const MapHandle kIdentity{[](const FinSeq& x) { return x; }, std::nullopt};
const MapHandle kScale3{[](const FinSeq& x) { return scale(3.0, x); },
                        std::nullopt};

FinSeq e(std::size_t i) { return FinSeq::unit(i); }

}  // namespace

TEST_CASE("directional derivative against the analytic oracle") {
    // f(x) = <x,x> e1 has df(x)v = 2 <x,v> e1
    const FinSeq x = e(0);
    FinSeq d = calculus::directional_derivative(kSqNorm, x, e(0));
    CHECK(weak_norm(d - scale(2.0, e(0))) <= 1e-8);

    d = calculus::directional_derivative(kSqNorm, x, e(1));
    CHECK(weak_norm(d) <= 1e-8);

    // a linear map is its own derivative, up to rounding
    rinf::Rng rng(11, "test.dd_linear");
    for (int t = 0; t < 20; ++t) {
        std::vector<double> xv(4), vv(4);
        for (auto& c : xv) c = rng.gaussian();
        for (auto& c : vv) c = rng.gaussian();
        const FinSeq xx(xv), vvq(vv);
        const FinSeq got = calculus::directional_derivative(kIdentity, xx, vvq);
        CHECK(weak_norm(got - vvq) <= 1e-10 * (1.0 + weak_norm(vvq)));
    }
}

TEST_CASE("directional derivative raises NonFinite") {
    // NaN on the whole probed segment around x = 0
    const MapHandle bad{[](const FinSeq& x) {
                            return scale(std::sqrt(x[0] - 10.0), e(0));
                        },
                        1};
    CHECK_THROWS_AS(calculus::directional_derivative(bad, FinSeq::zero(), e(0)),
                    NonFinite);
}

TEST_CASE("chain rule residual") {
    // f = squared-norm e1, g = scale-by-3: d(f.g)(x)v = 18 <x,v> e1
    const FinSeq x = e(0), v = e(0);
    const FinSeq lhs =
        calculus::directional_derivative(calculus::comp(kSqNorm, kScale3), x, v);
    CHECK(weak_norm(lhs - scale(18.0, e(0))) <= 1e-6 * 18.0);
    const double resid = calculus::chain_rule_residual(kSqNorm, kScale3, x, v);
    CHECK(resid <= 1e-6 * 18.0);

    CHECK(calculus::chain_rule_residual(kIdentity, kIdentity, x, v) ==
          doctest::Approx(0.0).epsilon(1e-12));

    // two linear maps collapse the limit exactly
    const MapHandle linA{[](const FinSeq& y) {
                             std::vector<double> out = {2 * y[0] - y[1],
                                                        y[0] + y[2]};
                             return FinSeq(std::move(out));
                         },
                         3};
    const MapHandle linB{[](const FinSeq& y) {
                             std::vector<double> out = {y[1], y[0], y[0] - y[1]};
                             return FinSeq(std::move(out));
                         },
                         2};
    const FinSeq xx({0.3, -0.7});
    const FinSeq vv({1.0, 0.5});
    CHECK(calculus::chain_rule_residual(linA, linB, xx, vv) <= 1e-10);
}

TEST_CASE("curry and uncurry") {
    const TwoArgHandle bilinear{[](const FinSeq& x, const FinSeq& y) {
        return scale(x[0] * y[0], e(0));
    }};
    CHECK(calculus::curry(bilinear)(e(0))(e(0)) == e(0));

    const TwoArgHandle proj1{
        [](const FinSeq& x, const FinSeq&) { return x; }};
    const auto curried = calculus::curry(proj1);
    const FinSeq x({1.0, -2.0, 3.0});
    CHECK(curried(x)(e(5)) == x);
    CHECK(curried(x)(FinSeq::zero()) == x);

    const TwoArgHandle inner{[](const FinSeq& x, const FinSeq& y) {
        return scale(weak_inner(x, y), e(0));
    }};
    // <2 e3, e3> = 2
    CHECK(calculus::curry(inner)(scale(2.0, e(2)))(e(2)) == scale(2.0, e(0)));
}

TEST_CASE("exponential-law roundtrips are exact") {
    const TwoArgHandle F{[](const FinSeq& x, const FinSeq& y) {
        return x + scale(weak_inner(x, y), e(1));
    }};
    const auto back = calculus::uncurry(calculus::curry(F));
    rinf::Rng rng(11, "test.exp_law");
    for (int t = 0; t < 100; ++t) {
        std::vector<double> xv(1 + rng.index(6)), yv(1 + rng.index(6));
        for (auto& c : xv) c = rng.gaussian();
        for (auto& c : yv) c = rng.gaussian();
        const FinSeq x(xv), y(yv);
        CHECK(back(x, y) == F(x, y));
    }

    const calculus::CurriedMap G = [](const FinSeq& a) {
        return MapHandle{[a](const FinSeq& b) { return a + b; }, std::nullopt};
    };
    const auto gback = calculus::curry(calculus::uncurry(G));
    CHECK(gback(e(0))(e(1)) == G(e(0))(e(1)));
    CHECK(calculus::uncurry(G)(e(0), e(1)) == e(0) + e(1));
}

TEST_CASE("canonical mappings ev, ins, comp") {
    CHECK(calculus::ev(kIdentity, e(4)) == e(4));

    const MapHandle scale2{[](const FinSeq& x) { return scale(2.0, x); },
                           std::nullopt};
    CHECK(calculus::comp(scale2, kScale3)(e(0)) == scale(6.0, e(0)));

    // ins(0)(y) is the pair (0, y): odd slots carry y, even slots vanish
    const FinSeq p = calculus::ins(FinSeq::zero())(FinSeq({2.0, 5.0}));
    CHECK(p == calculus::pair_interleave(FinSeq::zero(), FinSeq({2.0, 5.0})));
    CHECK(p[0] == 0.0);
    CHECK(p[1] == 2.0);
    CHECK(p[2] == 0.0);
    CHECK(p[3] == 5.0);

    const auto [a, b] = calculus::unpair(p);
    CHECK(a == FinSeq::zero());
    CHECK(b == FinSeq({2.0, 5.0}));
}

TEST_CASE("pair/unpair roundtrip") {
    rinf::Rng rng(11, "test.pair");
    for (int t = 0; t < 200; ++t) {
        std::vector<double> xv(rng.index(7)), yv(rng.index(7));
        for (auto& c : xv) c = rng.gaussian();
        for (auto& c : yv) c = rng.gaussian();
        const FinSeq x(xv), y(yv);
        const auto [a, b] = calculus::unpair(calculus::pair_interleave(x, y));
        CHECK(a == x);
        CHECK(b == y);
    }
}

TEST_CASE("mackey_check accepts e1/n with the canonical witness") {
    std::vector<FinSeq> xs;
    for (int n = 1; n <= 16; ++n) xs.push_back(scale(1.0 / n, e(0)));
    const auto res = calculus::mackey_check(xs, FinSeq::zero());
    REQUIRE(res.accepted);
    REQUIRE(res.witness.size() == xs.size());
    // |x_n - 0|_inf = 1/n >= 1/n^2, so the canonical witness is exactly n
    for (std::size_t i = 0; i < xs.size(); ++i)
        CHECK(res.witness[i] == doctest::Approx(static_cast<double>(i + 1)));
}

TEST_CASE("mackey_check rejects escaping support") {
    std::vector<FinSeq> xs;
    for (std::size_t n = 0; n < 16; ++n) xs.push_back(e(n));
    CHECK_FALSE(calculus::mackey_check(xs, FinSeq::zero()).accepted);
}

TEST_CASE("mackey_check accepts a constant sequence") {
    const FinSeq x({1.0, -2.0});
    std::vector<FinSeq> xs(12, x);
    const auto res = calculus::mackey_check(xs, x);
    REQUIRE(res.accepted);
    // zero differences hit the 1/n^2 floor: witness n^2
    for (std::size_t i = 0; i < xs.size(); ++i)
        CHECK(res.witness[i] ==
              doctest::Approx(static_cast<double>((i + 1) * (i + 1))));
}

TEST_CASE("mackey_check rejects a non-decaying tail") {
    std::vector<FinSeq> xs(12, e(0));  // x_n = e1, x = 0: no valid witness
    CHECK_FALSE(calculus::mackey_check(xs, FinSeq::zero()).accepted);
}

TEST_CASE("smoothness probe flags a kink and clears smooth maps") {
    const CurveHandle line{[](double t) { return scale(t, e(0)); }};

    const MapHandle poly{[](const FinSeq& x) {
                             return scale(x[0] * x[0] * x[0] - x[0], e(0));
                         },
                         1};
    auto rep = calculus::smoothness_probe(poly, {line}, 4);
    REQUIRE(rep.size() == 4);
    for (const auto& entry : rep) CHECK(entry.bounded);

    const MapHandle kink{[](const FinSeq& x) { return scale(std::abs(x[0]), e(0)); },
                         1};
    rep = calculus::smoothness_probe(kink, {line}, 2);
    REQUIRE(rep.size() == 2);
    CHECK_FALSE(rep[1].bounded);  // second quotients blow up at 0

    const MapHandle constant{[](const FinSeq&) { return e(3); }, std::nullopt};
    rep = calculus::smoothness_probe(constant, {line}, 3);
    for (const auto& entry : rep) {
        CHECK(entry.bounded);
        CHECK(entry.quotient_max <= 1e-9);
    }
}

TEST_CASE("smoothness probe validates order and report shape") {
    const CurveHandle line{[](double t) { return scale(t, e(0)); }};
    CHECK_THROWS_AS(calculus::smoothness_probe(kIdentity, {line}, 5),
                    InvalidArgument);
    const auto rep = calculus::smoothness_probe(kIdentity, {line}, 1);
    const nlohmann::json j = rep.at(0);
    CHECK(j.contains("curve_id"));
    CHECK(j.contains("order"));
    CHECK(j.contains("quotient_max"));
    CHECK(j.contains("bounded_flag"));
}

TEST_CASE("default step follows the configured scaling") {
    const FinSeq x = scale(3.0, e(0));
    const FinSeq v = scale(7.0, e(1));
    CHECK(calculus::default_step(x, v) ==
          doctest::Approx(1e-4 * (1.0 + 3.0) / (1.0 + 7.0)));
}
