#include "rinf/mapspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <nlohmann/json.hpp>

#include "rinf/errors.hpp"

namespace rinf::mapspace {

namespace {

constexpr double kPi = std::numbers::pi;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace

Target Target::euclidean(int m) {
    if (m < 1) throw InvalidArgument("Target::euclidean: dimension must be >= 1");
    return {TargetKind::euclidean, m};
}

std::string Target::name() const {
    switch (kind) {
        case TargetKind::circle: return "circle";
        case TargetKind::sphere2: return "sphere2";
        case TargetKind::euclidean:
            return "euclidean(" + std::to_string(dim) + ")";
    }
    throw InvalidArgument("Target::name: unknown kind");
}

Target Target::parse(const std::string& name) {
    if (name == "circle") return circle();
    if (name == "sphere2") return sphere2();
    if (name.starts_with("euclidean(") && name.ends_with(")"))
        return euclidean(std::stoi(name.substr(10, name.size() - 11)));
    throw InvalidArgument("Target::parse: unknown target '" + name + "'");
}

TargetPoint target_exp(const Target& target, const TargetPoint& p,
                       const TangentVec& v) {
    if (static_cast<int>(p.size()) != target.dim ||
        static_cast<int>(v.size()) != target.dim)
        throw InvalidArgument("target_exp: dimension mismatch");
    switch (target.kind) {
        case TargetKind::circle:
            return {wrap_2pi(p[0] + v[0])};
        case TargetKind::euclidean: {
            TargetPoint q(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[i] + v[i];
            return q;
        }
        case TargetKind::sphere2: {
            const double r = norm(v);
            if (r == 0.0) return p;
            const double c = std::cos(r), s = std::sin(r) / r;
            TargetPoint q(3);
            for (int i = 0; i < 3; ++i) q[i] = c * p[i] + s * v[i];
            return q;
        }
    }
    throw InvalidArgument("target_exp: unknown target");
}

TangentVec target_log(const Target& target, const TargetPoint& p,
                      const TargetPoint& q) {
    if (static_cast<int>(p.size()) != target.dim ||
        static_cast<int>(q.size()) != target.dim)
        throw InvalidArgument("target_log: dimension mismatch");
    switch (target.kind) {
        case TargetKind::circle: {
            // the chart needs the open interval (-pi, pi); only the exact
            // antipode falls outside
            const double d = wrap_to_pi(q[0] - p[0]);
            if (std::abs(d) >= kPi)
                throw CutLocus("target_log: circle points are antipodal");
            return {d};
        }
        case TargetKind::euclidean: {
            TangentVec v(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) v[i] = q[i] - p[i];
            return v;
        }
        case TargetKind::sphere2: {
            const double c = std::clamp(dot(p, q), -1.0, 1.0);
            TangentVec w(3);
            for (int i = 0; i < 3; ++i) w[i] = q[i] - c * p[i];
            const double s = norm(w);
            const double angle = std::atan2(s, c);
            if (angle >= kPi - kInjectivityGuard)
                throw CutLocus("target_log: sphere2 points are antipodal");
            if (s == 0.0) return {0.0, 0.0, 0.0};
            const double f = angle / s;
            for (auto& wi : w) wi *= f;
            return w;
        }
    }
    throw InvalidArgument("target_log: unknown target");
}

double target_dist(const Target& target, const TargetPoint& p,
                   const TargetPoint& q) {
    switch (target.kind) {
        case TargetKind::circle: return std::abs(wrap_to_pi(q[0] - p[0]));
        case TargetKind::euclidean: {
            double s = 0.0;
            for (std::size_t i = 0; i < p.size(); ++i)
                s += (q[i] - p[i]) * (q[i] - p[i]);
            return std::sqrt(s);
        }
        case TargetKind::sphere2: {
            const double c = std::clamp(dot(p, q), -1.0, 1.0);
            TangentVec w(3);
            for (int i = 0; i < 3; ++i) w[i] = q[i] - c * p[i];
            return std::atan2(norm(w), c);
        }
    }
    throw InvalidArgument("target_dist: unknown target");
}

DiscretizedMap::DiscretizedMap(GridS1 grid, Target target,
                               std::vector<TargetPoint> samples)
    : grid_(grid), target_(target), samples_(std::move(samples)) {
    if (static_cast<int>(samples_.size()) != grid_.N)
        throw InvalidArgument("DiscretizedMap: sample count must equal N");
    for (auto& s : samples_) {
        if (static_cast<int>(s.size()) != target_.dim)
            throw InvalidArgument("DiscretizedMap: sample dimension mismatch");
        if (target_.kind == TargetKind::circle) s[0] = wrap_2pi(s[0]);
        if (target_.kind == TargetKind::sphere2 &&
            std::abs(norm(s) - 1.0) > 1e-10)
            throw InvalidArgument("DiscretizedMap: sphere2 sample not unit");
    }
}

namespace {

// Unwrapped lift of a circle-valued map together with its winding number;
// assumes consecutive samples differ by less than pi.
struct CircleLift {
    std::vector<double> periodic;
    long winding = 0;
};

CircleLift unwrap(const GridS1& grid, const std::vector<TargetPoint>& samples) {
    const int N = grid.N;
    std::vector<double> lift(static_cast<std::size_t>(N));
    lift[0] = samples[0][0];
    for (int j = 1; j < N; ++j)
        lift[static_cast<std::size_t>(j)] =
            lift[static_cast<std::size_t>(j - 1)] +
            wrap_to_pi(samples[static_cast<std::size_t>(j)][0] -
                       samples[static_cast<std::size_t>(j - 1)][0]);
    double total = wrap_to_pi(samples[0][0] -
                              samples[static_cast<std::size_t>(N - 1)][0]);
    total += lift[static_cast<std::size_t>(N - 1)] - lift[0];
    const long w = std::lround(total / (2.0 * kPi));
    CircleLift out;
    out.winding = w;
    out.periodic.resize(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j)
        out.periodic[static_cast<std::size_t>(j)] =
            lift[static_cast<std::size_t>(j)] -
            static_cast<double>(w) * grid.theta(j);
    return out;
}

// Componentwise interpolants of a map, with circle winding split off.
struct MapInterp {
    const DiscretizedMap* f;
    std::vector<TrigInterp> comps;
    long winding = 0;

    explicit MapInterp(const DiscretizedMap& map) : f(&map) {
        const int N = map.grid().N;
        if (map.target().kind == TargetKind::circle) {
            CircleLift lift = unwrap(map.grid(), map.samples());
            winding = lift.winding;
            comps.emplace_back(map.grid(), std::move(lift.periodic));
        } else {
            for (int d = 0; d < map.target().dim; ++d) {
                std::vector<double> v(static_cast<std::size_t>(N));
                for (int j = 0; j < N; ++j)
                    v[static_cast<std::size_t>(j)] =
                        map.sample(j)[static_cast<std::size_t>(d)];
                comps.emplace_back(map.grid(), std::move(v));
            }
        }
    }

    TargetPoint at(double theta) const {
        const GridS1& grid = f->grid();
        const double t = wrap_2pi(theta);
        const auto j = static_cast<long>(
            std::llround(t / (2.0 * kPi / grid.N)));
        if (j >= 0 && j < grid.N && t == grid.theta(static_cast<int>(j)))
            return f->sample(static_cast<int>(j));

        if (f->target().kind == TargetKind::circle)
            return {wrap_2pi(comps[0].value(theta) +
                             static_cast<double>(winding) * t)};
        TargetPoint p(static_cast<std::size_t>(f->target().dim));
        for (std::size_t d = 0; d < p.size(); ++d)
            p[d] = comps[d].value(theta);
        return p;
    }
};

}  // namespace

TargetPoint evaluate(const DiscretizedMap& f, double theta) {
    return MapInterp(f).at(theta);
}

double max_sample_dist(const DiscretizedMap& f, const DiscretizedMap& g) {
    if (f.grid() != g.grid() || f.target() != g.target())
        throw InvalidArgument("max_sample_dist: incompatible maps");
    double m = 0.0;
    for (int j = 0; j < f.grid().N; ++j)
        m = std::max(m, target_dist(f.target(), f.sample(j), g.sample(j)));
    return m;
}

SectionAlongMap::SectionAlongMap(DiscretizedMap base,
                                 std::vector<TangentVec> vecs)
    : base_(std::move(base)), vecs_(std::move(vecs)) {
    if (vecs_.size() != base_.samples().size())
        throw InvalidArgument("SectionAlongMap: one vector per node required");
    for (std::size_t j = 0; j < vecs_.size(); ++j) {
        if (static_cast<int>(vecs_[j].size()) != base_.target().dim)
            throw InvalidArgument("SectionAlongMap: vector dimension mismatch");
        if (base_.target().kind == TargetKind::sphere2 &&
            std::abs(dot(base_.samples()[j], vecs_[j])) > 1e-10)
            throw InvalidArgument("SectionAlongMap: vector not tangent to base");
    }
}

VectorFieldS1::VectorFieldS1(GridS1 g, std::vector<double> v)
    : grid(g), values(std::move(v)) {
    if (static_cast<int>(values.size()) != grid.N)
        throw InvalidArgument("VectorFieldS1: value count must equal N");
    for (double x : values)
        if (!std::isfinite(x))
            throw InvalidArgument("VectorFieldS1: non-finite value");
}

VectorFieldS1 operator+(const VectorFieldS1& x, const VectorFieldS1& y) {
    if (x.grid != y.grid) throw InvalidArgument("vector fields: grids differ");
    std::vector<double> v(x.values.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = x.values[j] + y.values[j];
    return VectorFieldS1(x.grid, std::move(v));
}

VectorFieldS1 operator-(const VectorFieldS1& x, const VectorFieldS1& y) {
    if (x.grid != y.grid) throw InvalidArgument("vector fields: grids differ");
    std::vector<double> v(x.values.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = x.values[j] - y.values[j];
    return VectorFieldS1(x.grid, std::move(v));
}

VectorFieldS1 operator*(double lambda, const VectorFieldS1& x) {
    std::vector<double> v(x.values.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = lambda * x.values[j];
    return VectorFieldS1(x.grid, std::move(v));
}

namespace {
std::vector<double> lift_minus_identity(const GridS1& grid,
                                        const std::vector<double>& lift) {
    std::vector<double> p(lift.size());
    for (int j = 0; j < grid.N; ++j)
        p[static_cast<std::size_t>(j)] =
            lift[static_cast<std::size_t>(j)] - grid.theta(j);
    return p;
}
}  // namespace

CircleDiffeo::CircleDiffeo(GridS1 grid, std::vector<double> lift)
    : grid_(grid),
      lift_(std::move(lift)),
      periodic_(grid_, lift_minus_identity(grid_, lift_)) {
    if (static_cast<int>(lift_.size()) != grid_.N)
        throw InvalidArgument("CircleDiffeo: lift size must equal N");
    for (int j = 0; j < grid_.N; ++j)
        if (!(1.0 + periodic_.derivative_at_node(j) > 0.0))
            throw NotDiffeo("CircleDiffeo: lift is not strictly increasing");
}

CircleDiffeo CircleDiffeo::identity(const GridS1& grid) {
    std::vector<double> lift(static_cast<std::size_t>(grid.N));
    for (int j = 0; j < grid.N; ++j) lift[static_cast<std::size_t>(j)] = grid.theta(j);
    return CircleDiffeo(grid, std::move(lift));
}

CircleDiffeo CircleDiffeo::rotation(const GridS1& grid, double alpha) {
    std::vector<double> lift(static_cast<std::size_t>(grid.N));
    for (int j = 0; j < grid.N; ++j)
        lift[static_cast<std::size_t>(j)] = grid.theta(j) + alpha;
    return CircleDiffeo(grid, std::move(lift));
}

double CircleDiffeo::lift_at(double t) const { return t + periodic_.value(t); }

double CircleDiffeo::derivative_at(double t) const {
    return 1.0 + periodic_.derivative(t);
}

SectionAlongMap chart_forward(const DiscretizedMap& f, const DiscretizedMap& g) {
    if (f.grid() != g.grid() || f.target() != g.target())
        throw InvalidArgument("chart_forward: maps must share grid and target");
    std::vector<TangentVec> vecs;
    vecs.reserve(f.samples().size());
    for (int j = 0; j < f.grid().N; ++j) {
        try {
            vecs.push_back(target_log(f.target(), f.sample(j), g.sample(j)));
        } catch (const CutLocus&) {
            throw OutsideChart("chart_forward: samples leave the chart at node " +
                                   std::to_string(j),
                               j);
        }
    }
    return SectionAlongMap(f, std::move(vecs));
}

DiscretizedMap chart_inverse(const DiscretizedMap& f, const SectionAlongMap& s) {
    if (s.base() != f)
        throw InvalidArgument("chart_inverse: section is not based at f");
    // injectivity radius of the exp chart: sharp pi on the circle, the
    // guarded band on the 2-sphere, unbounded on euclidean targets
    double radius = std::numeric_limits<double>::infinity();
    if (f.target().kind == TargetKind::circle) radius = kPi;
    if (f.target().kind == TargetKind::sphere2) radius = kPi - kInjectivityGuard;
    std::vector<TargetPoint> samples;
    samples.reserve(f.samples().size());
    for (int j = 0; j < f.grid().N; ++j) {
        const TangentVec& v = s.vecs()[static_cast<std::size_t>(j)];
        if (norm(v) >= radius)
            throw OutsideDomain("chart_inverse: vector beyond the injectivity "
                                "radius at node " +
                                std::to_string(j));
        samples.push_back(target_exp(f.target(), f.sample(j), v));
    }
    return DiscretizedMap(f.grid(), f.target(), std::move(samples));
}

SectionAlongMap chart_change(const DiscretizedMap& f, const DiscretizedMap& g,
                             const SectionAlongMap& s) {
    return chart_forward(f, chart_inverse(g, s));
}

CircleDiffeo compose_diffeo(const CircleDiffeo& g, const CircleDiffeo& h) {
    if (g.grid() != h.grid())
        throw InvalidArgument("compose_diffeo: grids differ");
    std::vector<double> lift(static_cast<std::size_t>(g.grid().N));
    for (int j = 0; j < g.grid().N; ++j)
        lift[static_cast<std::size_t>(j)] =
            g.lift_at(h.lift()[static_cast<std::size_t>(j)]);
    return CircleDiffeo(g.grid(), std::move(lift));
}

CircleDiffeo invert_diffeo(const CircleDiffeo& g) {
    const GridS1& grid = g.grid();
    double max_dev = 0.0;
    for (int j = 0; j < grid.N; ++j)
        max_dev = std::max(max_dev,
                           std::abs(g.lift()[static_cast<std::size_t>(j)] -
                                    grid.theta(j)));
    std::vector<double> inv(static_cast<std::size_t>(grid.N));
    for (int j = 0; j < grid.N; ++j) {
        const double target = grid.theta(j);
        double lo = target - max_dev - 1.0, hi = target + max_dev + 1.0;
        // bisection to a safe bracket, then Newton polish
        for (int it = 0; it < 48; ++it) {
            const double mid = 0.5 * (lo + hi);
            (g.lift_at(mid) < target ? lo : hi) = mid;
        }
        double t = 0.5 * (lo + hi);
        for (int it = 0; it < 4; ++it) {
            const double d = g.derivative_at(t);
            if (d <= 0.0) throw NotDiffeo("invert_diffeo: derivative sign lost");
            const double step = (g.lift_at(t) - target) / d;
            t -= step;
            if (std::abs(step) < kRootTol) break;
        }
        inv[static_cast<std::size_t>(j)] = t;
    }
    return CircleDiffeo(grid, std::move(inv));
}

CircleDiffeo flow_exp(const VectorFieldS1& X, int steps) {
    if (steps < 8) throw InvalidArgument("flow_exp: steps must be >= 8");
    const GridS1& grid = X.grid;
    const TrigInterp field(grid, X.values);
    const double h = 1.0 / steps;
    std::vector<double> lift(static_cast<std::size_t>(grid.N));
    for (int j = 0; j < grid.N; ++j) {
        double th = grid.theta(j);
        for (int s = 0; s < steps; ++s) {
            const double k1 = field.value(th);
            const double k2 = field.value(th + 0.5 * h * k1);
            const double k3 = field.value(th + 0.5 * h * k2);
            const double k4 = field.value(th + h * k3);
            th += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        lift[static_cast<std::size_t>(j)] = th;
    }
    try {
        return CircleDiffeo(grid, std::move(lift));
    } catch (const NotDiffeo&) {
        throw FlowBreakdown(
            "flow_exp: integrated lift fails monotonicity at this resolution");
    }
}

VectorFieldS1 lie_bracket(const VectorFieldS1& X, const VectorFieldS1& Y) {
    if (X.grid != Y.grid) throw InvalidArgument("lie_bracket: grids differ");
    const TrigInterp xi(X.grid, X.values), yi(Y.grid, Y.values);
    std::vector<double> out(static_cast<std::size_t>(X.grid.N));
    for (int j = 0; j < X.grid.N; ++j)
        out[static_cast<std::size_t>(j)] =
            -(X.values[static_cast<std::size_t>(j)] * yi.derivative_at_node(j) -
              Y.values[static_cast<std::size_t>(j)] * xi.derivative_at_node(j));
    return VectorFieldS1(X.grid, std::move(out));
}

DiscretizedMap compose_maps(const DiscretizedMap& f, const CircleDiffeo& g) {
    if (f.grid() != g.grid())
        throw InvalidArgument("compose_maps: grids differ");
    const MapInterp interp(f);
    std::vector<TargetPoint> samples;
    samples.reserve(f.samples().size());
    for (int j = 0; j < f.grid().N; ++j) {
        TargetPoint p = interp.at(g.lift()[static_cast<std::size_t>(j)]);
        if (f.target().kind == TargetKind::sphere2) {
            // pull spectral drift back onto the sphere; node hits stay put
            const double n = norm(p);
            if (std::abs(n - 1.0) > 1e-13)
                for (auto& c : p) c /= n;
        }
        samples.push_back(std::move(p));
    }
    return DiscretizedMap(f.grid(), f.target(), std::move(samples));
}

bool is_immersion(const DiscretizedMap& f, double rel_tol) {
    if (f.target().kind != TargetKind::euclidean)
        throw InvalidArgument("is_immersion: euclidean targets only");
    const int N = f.grid().N;
    std::vector<TrigInterp> comps;
    for (int d = 0; d < f.target().dim; ++d) {
        std::vector<double> v(static_cast<std::size_t>(N));
        for (int j = 0; j < N; ++j)
            v[static_cast<std::size_t>(j)] =
                f.sample(j)[static_cast<std::size_t>(d)];
        comps.emplace_back(f.grid(), std::move(v));
    }
    double min_speed = 0.0, max_speed = 0.0, amplitude = 0.0;
    for (int j = 0; j < N; ++j) {
        double s = 0.0, a = 0.0;
        for (const auto& c : comps) {
            const double d = c.derivative_at_node(j);
            s += d * d;
            a += c.values()[static_cast<std::size_t>(j)] *
                 c.values()[static_cast<std::size_t>(j)];
        }
        s = std::sqrt(s);
        if (j == 0) min_speed = s;
        min_speed = std::min(min_speed, s);
        max_speed = std::max(max_speed, s);
        amplitude = std::max(amplitude, std::sqrt(a));
    }
    // the sample amplitude enters the scale so that spectral noise on a
    // (near-)constant map is never mistaken for a nonzero derivative
    const double scale = std::max(max_speed, amplitude);
    return max_speed > 0.0 && min_speed > rel_tol * scale;
}

}  // namespace rinf::mapspace

using rinf::mapspace::CircleDiffeo;
using rinf::mapspace::DiscretizedMap;
using rinf::mapspace::GridS1;
using rinf::mapspace::Target;
using rinf::mapspace::VectorFieldS1;

DiscretizedMap nlohmann::adl_serializer<DiscretizedMap>::from_json(const json& j) {
    return DiscretizedMap(
        GridS1(j.at("N").get<int>()),
        Target::parse(j.at("target").get<std::string>()),
        j.at("samples").get<std::vector<rinf::mapspace::TargetPoint>>());
}

void nlohmann::adl_serializer<DiscretizedMap>::to_json(json& j,
                                                       const DiscretizedMap& f) {
    j = json{{"N", f.grid().N},
             {"target", f.target().name()},
             {"samples", f.samples()}};
}

CircleDiffeo nlohmann::adl_serializer<CircleDiffeo>::from_json(const json& j) {
    return CircleDiffeo(GridS1(j.at("N").get<int>()),
                        j.at("lift").get<std::vector<double>>());
}

void nlohmann::adl_serializer<CircleDiffeo>::to_json(json& j,
                                                     const CircleDiffeo& g) {
    j = json{{"N", g.grid().N}, {"lift", g.lift()}};
}

VectorFieldS1 nlohmann::adl_serializer<VectorFieldS1>::from_json(const json& j) {
    return VectorFieldS1(GridS1(j.at("N").get<int>()),
                         j.at("values").get<std::vector<double>>());
}

void nlohmann::adl_serializer<VectorFieldS1>::to_json(json& j,
                                                      const VectorFieldS1& x) {
    j = json{{"N", x.grid.N}, {"values", x.values}};
}
