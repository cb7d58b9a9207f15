#pragma once

#include <nlohmann/json_fwd.hpp>

#include "rinf/finseq.hpp"

namespace rinf::sphere {

inline constexpr double kUnitTol = 1e-10;
inline constexpr double kTangentTol = 1e-10;
inline constexpr double kDefaultPoleGuard = 1e-8;

/// A point of the unit sphere in R^inf. Construction checks
/// |<x,x> - 1| <= 1e-10.
class SpherePoint {
public:
    explicit SpherePoint(FinSeq coords);

    /// Rescale an arbitrary nonzero sequence onto the sphere.
    static SpherePoint normalized(const FinSeq& x);

    const FinSeq& coords() const { return coords_; }

    friend bool operator==(const SpherePoint&, const SpherePoint&) = default;

private:
    FinSeq coords_;
};

enum class ChartSign { plus, minus };

/// Stereographic chart data: a pole a and a sign choosing the chart
/// domain, U+ = S \ {a} (plus) or U- = S \ {-a} (minus). Both charts
/// map onto the hyperplane {a}^perp.
struct StereoChart {
    SpherePoint pole;
    ChartSign sign = ChartSign::plus;
};

/// A tangent vector at foot: construction checks |<foot, vec>| <= 1e-10.
class SphereTangent {
public:
    SphereTangent(SpherePoint foot, FinSeq vec);

    const SpherePoint& foot() const { return foot_; }
    const FinSeq& vec() const { return vec_; }

private:
    SpherePoint foot_;
    FinSeq vec_;
};

/// u(x) = (x - <x,a>a) / (1 -+ <x,a>); throws PoleProximity when x is
/// within eps_pole of the excluded pole.
FinSeq stereo_forward(const StereoChart& chart, const SpherePoint& x,
                      double eps_pole = kDefaultPoleGuard);

/// Inverse chart ((|y|^2-1)/(|y|^2+1)) a' + (2/(|y|^2+1)) y with a' the
/// excluded pole; throws NotInCodomain unless y is orthogonal to the pole.
SpherePoint stereo_inverse(const StereoChart& chart, const FinSeq& y);

/// The transition u- . u+^{-1}: inversion y / |y|^2 in the unit sphere
/// of {a}^perp. Throws ZeroInput for y = 0.
FinSeq transition(const FinSeq& y);

/// Extended splitting chart: u(z/|z|) + (|z| - 1) a', defined off the ray
/// [0, inf) a' through the excluded pole a'. The a'-component of the
/// result is |z| - 1, which vanishes exactly on the sphere.
FinSeq extended_chart(const StereoChart& chart, const FinSeq& z,
                      double eps_pole = kDefaultPoleGuard);

/// True iff v is tangent at x: |<x,v>| <= 1e-10.
bool tangent_check(const SpherePoint& x, const FinSeq& v);

/// Great-circle geodesic c(t) = cos(|v|t) x + sin(|v|t) v/|v|; v = 0
/// gives the constant curve.
SpherePoint geodesic(const SpherePoint& x, const FinSeq& v, double t);
SpherePoint geodesic(const SphereTangent& xv, double t);

/// Velocity c'(t) of the geodesic, used for the group-property checks.
FinSeq geodesic_velocity(const SpherePoint& x, const FinSeq& v, double t);

}  // namespace rinf::sphere

// SpherePoint serializes as its coordinate sequence.
template <>
struct nlohmann::adl_serializer<rinf::sphere::SpherePoint> {
    static rinf::sphere::SpherePoint from_json(const json& j);
    static void to_json(json& j, const rinf::sphere::SpherePoint& x);
};
