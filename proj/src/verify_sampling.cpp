#include "rinf/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rinf/errors.hpp"

namespace rinf::verify {

FinSeq random_finseq(Rng& rng, std::size_t max_support, double amplitude) {
    const std::size_t s = 1 + rng.index(max_support);
    std::vector<double> v(s);
    for (auto& c : v) c = amplitude * rng.gaussian();
    return FinSeq(std::move(v));
}

FinSeq random_unit(Rng& rng, std::size_t max_support) {
    for (;;) {
        const FinSeq x = random_finseq(rng, max_support);
        const double n = weak_norm(x);
        if (n > 1e-3) return scale(1.0 / n, x);
    }
}

FinSeq random_orthogonal_to(Rng& rng, const FinSeq& a, std::size_t max_support,
                            double radius_lo, double radius_hi) {
    for (;;) {
        FinSeq y = random_finseq(rng, max_support);
        y = y - scale(weak_inner(y, a), a);
        const double n = weak_norm(y);
        if (n <= 1e-3) continue;
        const double r = radius_lo * std::pow(radius_hi / radius_lo,
                                              rng.uniform01());
        return scale(r / n, y);
    }
}

frames::Frame random_injective_frame(Rng& rng, std::size_t k_max,
                                     std::size_t max_support) {
    const std::size_t k = 1 + rng.index(k_max);
    for (;;) {
        std::vector<FinSeq> cols;
        cols.reserve(k);
        for (std::size_t j = 0; j < k; ++j) {
            // keep the joint support at least k so the frame can be injective
            FinSeq c = random_finseq(rng, max_support) + FinSeq::unit(j);
            cols.push_back(std::move(c));
        }
        frames::Frame A(std::move(cols));
        // demand a solid injectivity margin: barely-injective draws are
        // numerically ambiguous once a right action rescales the columns
        double scale_norm = 0.0;
        for (const auto& c : A.cols())
            scale_norm = std::max(scale_norm, weak_norm(c));
        const double floor =
            1e-6 * std::pow(scale_norm, 2.0 * static_cast<double>(k));
        if (std::abs(frames::gram(A).determinant()) > floor) return A;
    }
}

frames::Frame random_orthonormal_frame(Rng& rng, std::size_t k,
                                       std::size_t max_support) {
    for (;;) {
        std::vector<FinSeq> cols;
        cols.reserve(k);
        for (std::size_t j = 0; j < k; ++j)
            cols.push_back(random_finseq(rng, max_support) + FinSeq::unit(j));
        frames::Frame A(std::move(cols));
        if (!frames::is_injective(A)) continue;
        return frames::iwasawa(A).p;
    }
}

frames::SmallMatrix random_gl(Rng& rng, std::size_t k) {
    const auto n = static_cast<Eigen::Index>(k);
    Eigen::VectorXd d(n);
    for (Eigen::Index i = 0; i < n; ++i) d(i) = rng.uniform(0.5, 2.0);
    return random_orthogonal_small(rng, k) * d.asDiagonal() *
           random_orthogonal_small(rng, k);
}

frames::SmallMatrix random_upper_positive(Rng& rng, std::size_t k) {
    const auto n = static_cast<Eigen::Index>(k);
    frames::SmallMatrix R = frames::SmallMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        R(i, i) = rng.uniform(0.5, 2.0);
        for (Eigen::Index j = i + 1; j < n; ++j) R(i, j) = 0.5 * rng.gaussian();
    }
    return R;
}

frames::SmallMatrix random_orthogonal_small(Rng& rng, std::size_t k) {
    const auto n = static_cast<Eigen::Index>(k);
    for (;;) {
        Eigen::MatrixXd g(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) g(i, j) = rng.gaussian();
        const Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
        if (std::abs(g.determinant()) < 1e-8) continue;
        Eigen::MatrixXd q = qr.householderQ();
        // normalize the sign convention so the distribution is Haar-like
        const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
        for (Eigen::Index i = 0; i < n; ++i)
            if (r(i, i) < 0.0) q.col(i) = -q.col(i);
        return q;
    }
}

glinf::GLInfAlgebra random_algebra(Rng& rng, std::size_t n, double norm2) {
    const auto m = static_cast<Eigen::Index>(n);
    for (;;) {
        Eigen::MatrixXd b(m, m);
        for (Eigen::Index i = 0; i < m; ++i)
            for (Eigen::Index j = 0; j < m; ++j) b(i, j) = rng.gaussian();
        const double s = b.jacobiSvd().singularValues()(0);
        if (s < 1e-9) continue;
        return glinf::GLInfAlgebra(norm2 / s * b);
    }
}

glinf::GLInfAlgebra random_skew(Rng& rng, std::size_t n, double norm2) {
    if (n < 2) throw InvalidArgument("random_skew: n must be >= 2");
    const auto m = static_cast<Eigen::Index>(n);
    for (;;) {
        Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m, m);
        for (Eigen::Index i = 0; i < m; ++i)
            for (Eigen::Index j = i + 1; j < m; ++j) {
                b(i, j) = rng.gaussian();
                b(j, i) = -b(i, j);
            }
        const double s = b.jacobiSvd().singularValues()(0);
        if (s < 1e-9) continue;
        return glinf::GLInfAlgebra(norm2 / s * b);
    }
}

glinf::GLInfAlgebra random_traceless(Rng& rng, std::size_t n, double amplitude) {
    const auto m = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd b(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j) b(i, j) = amplitude * rng.gaussian();
    const double t = b.trace() / static_cast<double>(m);
    for (Eigen::Index i = 0; i < m; ++i) b(i, i) -= t;
    // kill the trace exactly: fold the float remainder into one entry
    b(0, 0) -= b.trace();
    return glinf::GLInfAlgebra(std::move(b));
}

glinf::GLInfElement random_isometry(Rng& rng, std::size_t n) {
    const glinf::GLInfElement rot =
        glinf::exp(random_skew(rng, n, rng.uniform(0.1, 0.75)));
    if (rng.uniform01() < 0.5) return rot;
    Eigen::MatrixXd refl =
        Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n),
                                  static_cast<Eigen::Index>(n));
    refl(0, 0) = -1.0;
    return glinf::compose(glinf::GLInfElement(std::move(refl)), rot);
}

mapspace::VectorFieldS1 random_band_limited_field(Rng& rng,
                                                  const mapspace::GridS1& grid,
                                                  int max_mode, double amp) {
    std::vector<double> a(static_cast<std::size_t>(max_mode) + 1),
        b(static_cast<std::size_t>(max_mode) + 1);
    for (auto& c : a) c = amp * rng.uniform(-1.0, 1.0);
    for (auto& c : b) c = amp * rng.uniform(-1.0, 1.0);
    std::vector<double> v(static_cast<std::size_t>(grid.N));
    for (int j = 0; j < grid.N; ++j) {
        const double th = grid.theta(j);
        double s = 0.5 * a[0];
        for (int k = 1; k <= max_mode; ++k)
            s += a[static_cast<std::size_t>(k)] * std::cos(k * th) +
                 b[static_cast<std::size_t>(k)] * std::sin(k * th);
        v[static_cast<std::size_t>(j)] = s;
    }
    return mapspace::VectorFieldS1(grid, std::move(v));
}

mapspace::CircleDiffeo random_band_limited_diffeo(Rng& rng,
                                                  const mapspace::GridS1& grid,
                                                  int max_mode, double margin) {
    std::vector<double> a(static_cast<std::size_t>(max_mode) + 1),
        b(static_cast<std::size_t>(max_mode) + 1);
    double weight = 0.0;
    for (int k = 1; k <= max_mode; ++k) {
        a[static_cast<std::size_t>(k)] = rng.uniform(-1.0, 1.0);
        b[static_cast<std::size_t>(k)] = rng.uniform(-1.0, 1.0);
        weight += k * (std::abs(a[static_cast<std::size_t>(k)]) +
                       std::abs(b[static_cast<std::size_t>(k)]));
    }
    const double gain = weight > 0.0 ? margin / weight : 0.0;
    const double shift = rng.uniform(0.0, 2.0 * std::numbers::pi);
    std::vector<double> lift(static_cast<std::size_t>(grid.N));
    for (int j = 0; j < grid.N; ++j) {
        const double th = grid.theta(j);
        double p = shift;
        for (int k = 1; k <= max_mode; ++k)
            p += gain * (a[static_cast<std::size_t>(k)] * std::cos(k * th) +
                         b[static_cast<std::size_t>(k)] * std::sin(k * th));
        lift[static_cast<std::size_t>(j)] = th + p;
    }
    return mapspace::CircleDiffeo(grid, std::move(lift));
}

namespace {
std::vector<double> random_trig_samples(Rng& rng, const mapspace::GridS1& grid,
                                        int max_mode, double amp) {
    return random_band_limited_field(rng, grid, max_mode, amp).values;
}
}  // namespace

mapspace::DiscretizedMap random_map(Rng& rng, const mapspace::GridS1& grid,
                                    const mapspace::Target& target) {
    using mapspace::TargetKind;
    const int N = grid.N;
    std::vector<mapspace::TargetPoint> samples(static_cast<std::size_t>(N));
    switch (target.kind) {
        case TargetKind::circle: {
            const long w = static_cast<long>(rng.index(2));
            const auto p = random_trig_samples(rng, grid, 3, 0.3);
            for (int j = 0; j < N; ++j)
                samples[static_cast<std::size_t>(j)] = {
                    static_cast<double>(w) * grid.theta(j) +
                    p[static_cast<std::size_t>(j)]};
            break;
        }
        case TargetKind::sphere2: {
            for (;;) {
                std::vector<std::vector<double>> comp;
                for (int d = 0; d < 3; ++d)
                    comp.push_back(random_trig_samples(rng, grid, 3, 0.4));
                // random stable center keeps the curve away from the origin
                double c[3];
                for (auto& ci : c) ci = rng.gaussian();
                const double cn = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
                if (cn < 0.5) continue;
                bool ok = true;
                for (int j = 0; j < N && ok; ++j) {
                    double v[3], n2 = 0.0;
                    for (int d = 0; d < 3; ++d) {
                        v[d] = c[d] / cn +
                               comp[static_cast<std::size_t>(d)]
                                   [static_cast<std::size_t>(j)];
                        n2 += v[d] * v[d];
                    }
                    if (n2 < 0.09) {
                        ok = false;
                        break;
                    }
                    const double n = std::sqrt(n2);
                    samples[static_cast<std::size_t>(j)] = {v[0] / n, v[1] / n,
                                                            v[2] / n};
                }
                if (ok) break;
            }
            break;
        }
        case TargetKind::euclidean: {
            std::vector<std::vector<double>> comp;
            for (int d = 0; d < target.dim; ++d)
                comp.push_back(random_trig_samples(rng, grid, 3, 1.0));
            for (int j = 0; j < N; ++j) {
                mapspace::TargetPoint p(static_cast<std::size_t>(target.dim));
                for (int d = 0; d < target.dim; ++d)
                    p[static_cast<std::size_t>(d)] =
                        comp[static_cast<std::size_t>(d)]
                            [static_cast<std::size_t>(j)];
                samples[static_cast<std::size_t>(j)] = std::move(p);
            }
            break;
        }
    }
    return mapspace::DiscretizedMap(grid, target, std::move(samples));
}

std::vector<mapspace::TangentVec> random_section_vecs(
    Rng& rng, const mapspace::DiscretizedMap& f, double amp) {
    using mapspace::TargetKind;
    const int N = f.grid().N;
    std::vector<mapspace::TangentVec> vecs(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) {
        switch (f.target().kind) {
            case TargetKind::circle:
                vecs[static_cast<std::size_t>(j)] = {rng.uniform(-amp, amp)};
                break;
            case TargetKind::euclidean: {
                mapspace::TangentVec v(static_cast<std::size_t>(f.target().dim));
                for (auto& c : v) c = rng.uniform(-amp, amp);
                vecs[static_cast<std::size_t>(j)] = std::move(v);
                break;
            }
            case TargetKind::sphere2: {
                const auto& p = f.sample(j);
                double w[3];
                for (auto& c : w) c = rng.gaussian();
                double dot = 0.0;
                for (int d = 0; d < 3; ++d) dot += w[d] * p[static_cast<std::size_t>(d)];
                double n2 = 0.0;
                for (int d = 0; d < 3; ++d) {
                    w[d] -= dot * p[static_cast<std::size_t>(d)];
                    n2 += w[d] * w[d];
                }
                const double n = std::sqrt(n2);
                const double r = n > 1e-9 ? rng.uniform(0.0, amp) / n : 0.0;
                vecs[static_cast<std::size_t>(j)] = {r * w[0], r * w[1], r * w[2]};
                break;
            }
        }
    }
    return vecs;
}

mapspace::DiscretizedMap random_nearby(Rng& rng,
                                       const mapspace::DiscretizedMap& f,
                                       double amp) {
    return mapspace::chart_inverse(
        f, mapspace::SectionAlongMap(f, random_section_vecs(rng, f, amp)));
}

}  // namespace rinf::verify
