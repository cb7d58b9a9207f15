#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rinf/trig.hpp"

namespace rinf::mapspace {

inline constexpr double kInjectivityGuard = 1e-6;  // cut-locus margin
inline constexpr double kRootTol = 1e-12;          // lift inversion tolerance

enum class TargetKind { circle, sphere2, euclidean };

/// Target manifold of a discretized mapping space. All three choices
/// carry a closed-form Riemannian exponential.
struct Target {
    TargetKind kind = TargetKind::circle;
    int dim = 1;  // point representation length: 1, 3, or m

    static Target circle() { return {TargetKind::circle, 1}; }
    static Target sphere2() { return {TargetKind::sphere2, 3}; }
    static Target euclidean(int m);

    std::string name() const;
    static Target parse(const std::string& name);

    friend bool operator==(const Target&, const Target&) = default;
};

/// A point of the target: an angle in [0, 2 pi) for the circle, a unit
/// 3-vector for the round 2-sphere, an m-vector for euclidean space.
/// Tangent vectors use the same representation (1-dim for the circle).
using TargetPoint = std::vector<double>;
using TangentVec = std::vector<double>;

/// Geodesic exponential exp_p(v) of the target metric.
TargetPoint target_exp(const Target& target, const TargetPoint& p,
                       const TangentVec& v);

/// Inverse exp_p^{-1}(q); throws CutLocus when q is within the guard of
/// the cut locus of p (antipode / half-turn).
TangentVec target_log(const Target& target, const TargetPoint& p,
                      const TargetPoint& q);

/// Geodesic distance, used by tests and the chart-domain guard.
double target_dist(const Target& target, const TargetPoint& p,
                   const TargetPoint& q);

/// Grid samples of a map S^1 -> target. Circle samples are canonicalized
/// into [0, 2 pi); sphere2 samples must be unit within 1e-10.
class DiscretizedMap {
public:
    DiscretizedMap(GridS1 grid, Target target, std::vector<TargetPoint> samples);

    const GridS1& grid() const { return grid_; }
    const Target& target() const { return target_; }
    const std::vector<TargetPoint>& samples() const { return samples_; }
    const TargetPoint& sample(int j) const {
        return samples_[static_cast<std::size_t>(j)];
    }

    friend bool operator==(const DiscretizedMap&, const DiscretizedMap&) = default;

private:
    GridS1 grid_;
    Target target_;
    std::vector<TargetPoint> samples_;
};

/// Trigonometric evaluation of f at an arbitrary angle; exact at grid
/// nodes. Circle-valued maps are unwrapped to a lift of their winding
/// number before interpolation; sphere2 values are interpolated
/// componentwise (and are only spectrally close to unit off the nodes).
TargetPoint evaluate(const DiscretizedMap& f, double theta);

/// Max pointwise geodesic distance between samples.
double max_sample_dist(const DiscretizedMap& f, const DiscretizedMap& g);

/// A section of f*T(target): one tangent vector at f(theta_j) per node.
/// Tangency for sphere2 is checked at construction (1e-10).
class SectionAlongMap {
public:
    SectionAlongMap(DiscretizedMap base, std::vector<TangentVec> vecs);

    const DiscretizedMap& base() const { return base_; }
    const std::vector<TangentVec>& vecs() const { return vecs_; }

    friend bool operator==(const SectionAlongMap&, const SectionAlongMap&) = default;

private:
    DiscretizedMap base_;
    std::vector<TangentVec> vecs_;
};

/// Grid samples of a vector field on S^1 (coefficients of d/dtheta).
struct VectorFieldS1 {
    GridS1 grid;
    std::vector<double> values;

    VectorFieldS1(GridS1 g, std::vector<double> v);

    friend bool operator==(const VectorFieldS1&, const VectorFieldS1&) = default;
};

VectorFieldS1 operator+(const VectorFieldS1& x, const VectorFieldS1& y);
VectorFieldS1 operator-(const VectorFieldS1& x, const VectorFieldS1& y);
VectorFieldS1 operator*(double lambda, const VectorFieldS1& x);

/// An orientation-preserving circle diffeomorphism stored by the values
/// of a lift with winding one. Construction checks strict monotonicity
/// through the spectral derivative of the lift (NotDiffeo otherwise).
class CircleDiffeo {
public:
    CircleDiffeo(GridS1 grid, std::vector<double> lift);

    static CircleDiffeo identity(const GridS1& grid);
    static CircleDiffeo rotation(const GridS1& grid, double alpha);

    const GridS1& grid() const { return grid_; }
    const std::vector<double>& lift() const { return lift_; }

    /// Lift evaluated at an arbitrary real, g(t + 2 pi) = g(t) + 2 pi.
    double lift_at(double t) const;
    double derivative_at(double t) const;

    friend bool operator==(const CircleDiffeo& a, const CircleDiffeo& b) {
        return a.grid_ == b.grid_ && a.lift_ == b.lift_;
    }

private:
    GridS1 grid_;
    std::vector<double> lift_;
    TrigInterp periodic_;  // lift minus identity
};

/// u_f(g): the section j -> exp_{f(j)}^{-1}(g(j)). Throws OutsideChart
/// (with the offending node index) when some pair of samples leaves the
/// injectivity neighborhood of the diagonal.
SectionAlongMap chart_forward(const DiscretizedMap& f, const DiscretizedMap& g);

/// u_f^{-1}(s): the map j -> exp_{f(j)}(s_j). Throws OutsideDomain when a
/// vector leaves the injectivity radius.
DiscretizedMap chart_inverse(const DiscretizedMap& f, const SectionAlongMap& s);

/// Chart change u_f . u_g^{-1}, fiber-respecting over the grid.
SectionAlongMap chart_change(const DiscretizedMap& f, const DiscretizedMap& g,
                             const SectionAlongMap& s);

/// (g . h)(theta_j) = g(h(theta_j)) through the lift interpolants.
CircleDiffeo compose_diffeo(const CircleDiffeo& g, const CircleDiffeo& h);

/// Inverse by monotone root-finding on the lift, to tolerance 1e-12.
CircleDiffeo invert_diffeo(const CircleDiffeo& g);

/// Time-1 flow of X by fixed-step classical RK4 from every node (steps
/// >= 8); the field is evaluated by trigonometric interpolation. Throws
/// FlowBreakdown when the integrated lift fails the monotonicity check
/// at this resolution.
CircleDiffeo flow_exp(const VectorFieldS1& X, int steps);

/// Lie algebra bracket of Diff(S^1): the negative of the usual vector
/// field bracket, -(X Y' - Y X'), with spectral derivatives.
VectorFieldS1 lie_bracket(const VectorFieldS1& X, const VectorFieldS1& Y);

/// Resample f along a diffeomorphism: (f . g)(theta_j) = f(g(theta_j)).
/// sphere2 samples are renormalized onto the sphere after interpolation.
DiscretizedMap compose_maps(const DiscretizedMap& f, const CircleDiffeo& g);

/// Immersion test for euclidean targets: the spectral derivative must be
/// nonzero at every node, relative to the largest node speed.
bool is_immersion(const DiscretizedMap& f, double rel_tol = 1e-8);

}  // namespace rinf::mapspace

// JSON form: {N, target, samples}, target by name ("circle", "sphere2",
// "euclidean(m)").
template <>
struct nlohmann::adl_serializer<rinf::mapspace::DiscretizedMap> {
    static rinf::mapspace::DiscretizedMap from_json(const json& j);
    static void to_json(json& j, const rinf::mapspace::DiscretizedMap& f);
};

template <>
struct nlohmann::adl_serializer<rinf::mapspace::CircleDiffeo> {
    static rinf::mapspace::CircleDiffeo from_json(const json& j);
    static void to_json(json& j, const rinf::mapspace::CircleDiffeo& g);
};

template <>
struct nlohmann::adl_serializer<rinf::mapspace::VectorFieldS1> {
    static rinf::mapspace::VectorFieldS1 from_json(const json& j);
    static void to_json(json& j, const rinf::mapspace::VectorFieldS1& x);
};
