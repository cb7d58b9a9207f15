#include <doctest.h>

#include <cmath>
#include <vector>

#include <nlohmann/json.hpp>

#include "rinf/finseq.hpp"
#include "rinf/rng.hpp"

using rinf::FinSeq;

namespace {

// independent coordinatewise oracle for the arithmetic cases
std::vector<double> oracle_add(std::vector<double> a, std::vector<double> b) {
    std::vector<double> out(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    while (!out.empty() && out.back() == 0.0) out.pop_back();
    return out;
}

double oracle_inner(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        s += a[i] * b[i];
    return s;
}

FinSeq seq(std::vector<double> v) { return FinSeq(std::move(v)); }

}  // namespace

TEST_CASE("add matches the coordinatewise oracle and canonicalizes") {
    const FinSeq x = seq({1, 2});
    const FinSeq y = seq({0, -2, 3});
    const FinSeq s = rinf::add(x, y);
    const auto expect = oracle_add({1, 2}, {0, -2, 3});
    REQUIRE(s.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) CHECK(s[i] == expect[i]);
    CHECK(s == seq({1, 0, 3}));

    CHECK(rinf::add(x, FinSeq::zero()) == x);

    const FinSeq cancel = rinf::add(seq({1}), seq({-1}));
    CHECK(cancel.size() == 0);
    CHECK(cancel == FinSeq::zero());
}

TEST_CASE("scale canonicalizes and respects the oracle") {
    CHECK(rinf::scale(0.0, seq({1, 2, 3})) == FinSeq::zero());
    CHECK(rinf::scale(2.0, seq({1, 0, 3})) == seq({2, 0, 6}));
    const FinSeq x = seq({0.5, -1, 7});
    CHECK(rinf::scale(1.0, x) == x);
}

TEST_CASE("weak inner product") {
    CHECK(rinf::weak_inner(FinSeq::unit(0), FinSeq::unit(0)) == 1.0);
    const std::vector<double> a = {1, 2, 3}, b = {4, 5, 6};
    CHECK(rinf::weak_inner(seq(a), seq(b)) == oracle_inner(a, b));
    CHECK(rinf::weak_inner(seq(a), seq(b)) == 32.0);
    CHECK(rinf::weak_inner(seq(a), FinSeq::zero()) == 0.0);
}

TEST_CASE("weak norm") {
    CHECK(rinf::weak_norm(seq({3, 4})) == 5.0);
    CHECK(rinf::weak_norm(FinSeq::zero()) == 0.0);
    for (std::size_t k : {0u, 3u, 17u})
        CHECK(rinf::weak_norm(FinSeq::unit(k)) == 1.0);
}

TEST_CASE("support is the minimal active length") {
    CHECK(rinf::support(seq({1, 0, 2})) == 3);
    CHECK(rinf::support(FinSeq::zero()) == 0);
    CHECK(rinf::support(seq({0, 0, 5})) == 3);
    // scan oracle
    const std::vector<double> raw = {0, 0, 5, 0, 0};
    std::size_t n = raw.size();
    while (n > 0 && raw[n - 1] == 0.0) --n;
    CHECK(rinf::support(seq(raw)) == n);
}

TEST_CASE("equality ignores stored padding") {
    CHECK(seq({1, 2, 0, 0}) == seq({1, 2}));
    CHECK(seq({1, 2}) != seq({1, 2, 3}));
    CHECK(seq({0}) == FinSeq::zero());
}

TEST_CASE("bilinearity within 1e-12 relative on random supports") {
    rinf::Rng rng(2024, "test.bilinearity");
    for (int t = 0; t < 500; ++t) {
        std::vector<double> xv(1 + rng.index(10)), yv(1 + rng.index(10)),
            zv(1 + rng.index(10));
        for (auto& c : xv) c = rng.gaussian();
        for (auto& c : yv) c = rng.gaussian();
        for (auto& c : zv) c = rng.gaussian();
        const FinSeq x = seq(xv), y = seq(yv), z = seq(zv);
        const double a = rng.uniform(-3, 3), b = rng.uniform(-3, 3);
        const double lhs = rinf::weak_inner(a * x + b * y, z);
        const double rhs = a * rinf::weak_inner(x, z) + b * rinf::weak_inner(y, z);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("Cauchy-Schwarz") {
    rinf::Rng rng(2024, "test.cauchy_schwarz");
    for (int t = 0; t < 500; ++t) {
        std::vector<double> xv(1 + rng.index(12)), yv(1 + rng.index(12));
        for (auto& c : xv) c = rng.gaussian();
        for (auto& c : yv) c = rng.gaussian();
        const FinSeq x = seq(xv), y = seq(yv);
        CHECK(std::abs(rinf::weak_inner(x, y)) <=
              rinf::weak_norm(x) * rinf::weak_norm(y) + 1e-12);
    }
}

TEST_CASE("canonicalization idempotence") {
    rinf::Rng rng(2024, "test.canonical");
    for (int t = 0; t < 200; ++t) {
        std::vector<double> xv(1 + rng.index(8)), yv(1 + rng.index(8));
        for (auto& c : xv) c = rng.gaussian();
        for (auto& c : yv) c = rng.gaussian();
        const FinSeq x = seq(xv), y = seq(yv);
        CHECK(rinf::support(rinf::add(x, rinf::scale(0.0, y))) ==
              rinf::support(x));
    }
}

TEST_CASE("inner product is stable under zero padding") {
    const std::vector<double> a = {1.5, -2, 0.25}, b = {3, 0, -1};
    auto padded = [](std::vector<double> v, std::size_t extra) {
        v.insert(v.end(), extra, 0.0);
        return v;
    };
    for (std::size_t extra : {1u, 4u, 9u}) {
        CHECK(rinf::weak_inner(seq(padded(a, extra)), seq(b)) ==
              rinf::weak_inner(seq(a), seq(b)));
        CHECK(rinf::weak_inner(seq(a), seq(padded(b, extra))) ==
              rinf::weak_inner(seq(a), seq(b)));
        CHECK(seq(padded(a, extra)) == seq(a));
    }
}

TEST_CASE("trim drops small entries, plain ops keep them") {
    const FinSeq x = seq({1.0, 1e-14, 2.0, 1e-16});
    CHECK(x.size() == 4);
    const FinSeq t = rinf::trim(x, 1e-12);
    CHECK(t == seq({1.0, 0.0, 2.0}));
}

TEST_CASE("JSON form is the canonical array") {
    const FinSeq x = seq({1.5, 0, -2});
    const nlohmann::json j = x;
    CHECK(j.dump() == "[1.5,0.0,-2.0]");
    CHECK(j.get<FinSeq>() == x);
    CHECK(nlohmann::json::parse("[1.5,0.0,-2.0,0.0]").get<FinSeq>() == x);
}
