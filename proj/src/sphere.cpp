#include "rinf/sphere.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "rinf/errors.hpp"

namespace rinf::sphere {

SpherePoint::SpherePoint(FinSeq coords) : coords_(std::move(coords)) {
    if (std::abs(weak_inner(coords_, coords_) - 1.0) > kUnitTol)
        throw InvalidArgument("SpherePoint: |<x,x> - 1| exceeds 1e-10");
}

SpherePoint SpherePoint::normalized(const FinSeq& x) {
    const double n = weak_norm(x);
    if (n == 0.0) throw ZeroInput("SpherePoint::normalized: zero input");
    return SpherePoint(scale(1.0 / n, x));
}

SphereTangent::SphereTangent(SpherePoint foot, FinSeq vec)
    : foot_(std::move(foot)), vec_(std::move(vec)) {
    if (std::abs(weak_inner(foot_.coords(), vec_)) > kTangentTol)
        throw InvalidArgument("SphereTangent: vector is not tangent at foot");
}

namespace {
// The pole excluded by the chart: a for the plus chart, -a for minus.
FinSeq excluded_pole(const StereoChart& chart) {
    return chart.sign == ChartSign::plus ? chart.pole.coords()
                                         : scale(-1.0, chart.pole.coords());
}
}  // namespace

FinSeq stereo_forward(const StereoChart& chart, const SpherePoint& x,
                      double eps_pole) {
    const FinSeq a = chart.pole.coords();
    const double t = weak_inner(x.coords(), a);
    const double denom =
        chart.sign == ChartSign::plus ? 1.0 - t : 1.0 + t;
    if (denom < eps_pole)
        throw PoleProximity("stereo_forward: point too close to the pole");
    return scale(1.0 / denom, x.coords() - scale(t, a));
}

SpherePoint stereo_inverse(const StereoChart& chart, const FinSeq& y) {
    const FinSeq a = chart.pole.coords();
    if (std::abs(weak_inner(y, a)) > 1e-10)
        throw NotInCodomain("stereo_inverse: y is not orthogonal to the pole");
    const double s = weak_inner(y, y);
    const FinSeq ap = excluded_pole(chart);
    return SpherePoint(scale((s - 1.0) / (s + 1.0), ap) +
                       scale(2.0 / (s + 1.0), y));
}

FinSeq transition(const FinSeq& y) {
    const double s = weak_inner(y, y);
    if (s == 0.0) throw ZeroInput("transition: y = 0");
    return scale(1.0 / s, y);
}

FinSeq extended_chart(const StereoChart& chart, const FinSeq& z,
                      double eps_pole) {
    const double n = weak_norm(z);
    if (n == 0.0)
        throw RayExcluded("extended_chart: z = 0 lies on the excluded ray");
    const FinSeq unit = scale(1.0 / n, z);
    const FinSeq ap = excluded_pole(chart);
    // z on (or numerically against) the ray through the excluded pole
    if (weak_inner(unit, ap) > 1.0 - eps_pole)
        throw RayExcluded("extended_chart: z on the ray through the pole");
    const FinSeq chart_part = stereo_forward(chart, SpherePoint(unit), eps_pole);
    return chart_part + scale(n - 1.0, ap);
}

bool tangent_check(const SpherePoint& x, const FinSeq& v) {
    return std::abs(weak_inner(x.coords(), v)) <= kTangentTol;
}

SpherePoint geodesic(const SpherePoint& x, const FinSeq& v, double t) {
    if (!tangent_check(x, v))
        throw InvalidArgument("geodesic: v is not tangent at x");
    const double n = weak_norm(v);
    if (n == 0.0) return x;
    return SpherePoint(scale(std::cos(n * t), x.coords()) +
                       scale(std::sin(n * t) / n, v));
}

SpherePoint geodesic(const SphereTangent& xv, double t) {
    return geodesic(xv.foot(), xv.vec(), t);
}

FinSeq geodesic_velocity(const SpherePoint& x, const FinSeq& v, double t) {
    const double n = weak_norm(v);
    if (n == 0.0) return FinSeq::zero();
    return scale(-n * std::sin(n * t), x.coords()) +
           scale(std::cos(n * t), v);
}

}  // namespace rinf::sphere

rinf::sphere::SpherePoint
nlohmann::adl_serializer<rinf::sphere::SpherePoint>::from_json(const json& j) {
    return rinf::sphere::SpherePoint(j.get<rinf::FinSeq>());
}

void nlohmann::adl_serializer<rinf::sphere::SpherePoint>::to_json(
    json& j, const rinf::sphere::SpherePoint& x) {
    j = x.coords();
}
