#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rinf/finseq.hpp"

namespace rinf::calculus {

/// A map R^inf -> R^inf given by an evaluation callback. Evaluation must
/// be deterministic; if domain_dim_hint is set the map ignores
/// coordinates at indices >= hint.
struct MapHandle {
    std::function<FinSeq(const FinSeq&)> eval;
    std::optional<int> domain_dim_hint;

    FinSeq operator()(const FinSeq& x) const { return eval(x); }
};

/// A curve R -> R^inf.
struct CurveHandle {
    std::function<FinSeq(double)> eval;

    FinSeq operator()(double t) const { return eval(t); }
};

/// A two-argument map (R^inf x R^inf) -> R^inf.
struct TwoArgHandle {
    std::function<FinSeq(const FinSeq&, const FinSeq&)> eval;

    FinSeq operator()(const FinSeq& x, const FinSeq& y) const {
        return eval(x, y);
    }
};

/// Result type of curry: a map-valued map.
using CurriedMap = std::function<MapHandle(const FinSeq&)>;

/// Product encoding E x F inside R^inf: even indices hold the first
/// factor, odd indices the second.
FinSeq pair_interleave(const FinSeq& x, const FinSeq& y);
std::pair<FinSeq, FinSeq> unpair(const FinSeq& z);

/// Base step 1e-4 (1+|x|)/(1+|v|) used when no explicit h0 is supplied.
double default_step(const FinSeq& x, const FinSeq& v);

/// Plain central difference (f(x+hv) - f(x-hv)) / 2h, no extrapolation.
FinSeq central_difference(const MapHandle& f, const FinSeq& x,
                          const FinSeq& v, double h);

/// Estimate of df(x)v: central differences at h0 and h0/2 combined with
/// one Richardson step, (4 D(h0/2) - D(h0)) / 3. Throws NonFinite if an
/// evaluation produces a non-finite coordinate.
FinSeq directional_derivative(const MapHandle& f, const FinSeq& x,
                              const FinSeq& v, double h0);
FinSeq directional_derivative(const MapHandle& f, const FinSeq& x,
                              const FinSeq& v);

/// |d(f.g)(x)v - df(g(x)) dg(x)v|, both sides estimated with
/// directional_derivative at default steps.
double chain_rule_residual(const MapHandle& f, const MapHandle& g,
                           const FinSeq& x, const FinSeq& v);

/// curry(F)(x)(y) = F(x,y); uncurry inverts it. Both are definitional
/// wrappers, so the roundtrips are pointwise exact.
CurriedMap curry(const TwoArgHandle& F);
TwoArgHandle uncurry(const CurriedMap& G);

FinSeq ev(const MapHandle& f, const FinSeq& x);

/// ins(x)(y) = the pair (x, y) in the interleaved product encoding.
MapHandle ins(const FinSeq& x);

MapHandle comp(const MapHandle& f, const MapHandle& g);

/// Finite-scale Mackey convergence diagnostic for xs -> x.
///
/// The canonical witness is lambda_n = 1 / max(|x_n - x|_inf, 1/n^2),
/// capped to be non-decreasing (n is 1-based). The prefix is accepted
/// when (a) the support bound of x_n - x is already attained in the
/// first half of the list (a bounded set of finite sequences must have
/// common finite support, so escaping support means divergence),
/// (b) the capped witness still grows across the tail half, and
/// (c) the witness-scaled differences stay uniformly bounded.
struct MackeyResult {
    bool accepted = false;
    std::vector<double> witness;
};
MackeyResult mackey_check(const std::vector<FinSeq>& xs, const FinSeq& x);

/// One row of a smoothness probe report.
struct ProbeEntry {
    int curve_id = 0;
    int order = 0;
    double quotient_max = 0.0;
    bool bounded = true;
};

/// Lip^k falsifier: for each curve c, k-th difference quotients of f.c
/// are sampled on a shrinking step ladder around a fixed set of probe
/// points; a quotient family that keeps growing as the step halves is
/// flagged unbounded. Bounded flags cannot certify smoothness, they can
/// only refute it. order must be in [1, 4].
std::vector<ProbeEntry> smoothness_probe(const MapHandle& f,
                                         const std::vector<CurveHandle>& curves,
                                         int order);

void to_json(nlohmann::json& j, const ProbeEntry& e);

}  // namespace rinf::calculus
