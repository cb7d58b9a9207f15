#include <cmath>

#include "rinf/frames.hpp"
#include "rinf/rng.hpp"
#include "rinf/sampling.hpp"
#include "rinf/verify.hpp"

namespace rinf::verify {

using frames::Frame;
using frames::GrassmannPoint;
using frames::SmallMatrix;

std::vector<Case> frames_cases(const Config& cfg) {
    std::vector<Case> cases;

    {
        // <A^t x, y>_k = <x, A y>
        Rng rng(cfg.seed, "frames.adjoint_identity");
        double metric = 0.0;
        for (int t = 0; t < cfg.trials; ++t) {
            const Frame A = random_injective_frame(rng, 5, 12);
            const FinSeq x = random_finseq(rng, 16);
            Eigen::VectorXd y(static_cast<Eigen::Index>(A.k()));
            for (Eigen::Index i = 0; i < y.size(); ++i) y(i) = rng.gaussian();
            const double lhs = frames::transpose_apply(A, x).dot(y);
            const double rhs = weak_inner(x, frames::frame_apply(A, y));
            double col_scale = 0.0;
            for (const auto& c : A.cols())
                col_scale = std::max(col_scale, weak_norm(c));
            const double scale_bound = (1.0 + col_scale) *
                                       (1.0 + weak_norm(x)) * (1.0 + y.norm());
            metric = std::max(metric, std::abs(lhs - rhs) / scale_bound);
        }
        cases.push_back(make_case(cfg, "frames.adjoint_identity", metric, 1e-12));
    }

    {
        // right T(k) action shifts q only: p(A R') = p(A), q(A R') = q(A) R'
        Rng rng(cfg.seed, "frames.iwasawa_equivariance");
        double metric = 0.0;
        for (int t = 0; t < cfg.trials; ++t) {
            const Frame A = random_injective_frame(rng, 5, 12);
            const SmallMatrix Rp = random_upper_positive(rng, A.k());
            const auto base = frames::iwasawa(A);
            const auto acted = frames::iwasawa(frames::apply_small(A, Rp));
            const SmallMatrix q_expect = base.q * Rp;
            metric = std::max(metric,
                              (acted.q - q_expect).cwiseAbs().maxCoeff());
            for (std::size_t j = 0; j < A.k(); ++j)
                metric = std::max(
                    metric, weak_norm(acted.p.col(j) - base.p.col(j)));
        }
        cases.push_back(
            make_case(cfg, "frames.iwasawa_equivariance", metric, 1e-8));
    }

    {
        // fibers of the bundle projection are exactly the GL(k)-orbits
        Rng rng(cfg.seed, "frames.bundle_invariance");
        double metric = 0.0;
        for (int t = 0; t < cfg.trials; ++t) {
            const Frame A = random_injective_frame(rng, 5, 12);
            const SmallMatrix M = random_gl(rng, A.k());
            const GrassmannPoint qa = frames::grassmann_project(A);
            const GrassmannPoint qb =
                frames::grassmann_project(frames::apply_small(A, M));
            const std::size_t m = std::max(qa.m(), qb.m());
            metric = std::max(metric, (qa.padded(m) - qb.padded(m))
                                          .cwiseAbs()
                                          .maxCoeff());
        }
        cases.push_back(
            make_case(cfg, "frames.bundle_invariance", metric, 1e-8));
    }

    {
        // A -> (p, q) is a bijection onto O(k,inf) x T(k): reconstruct
        Rng rng(cfg.seed, "frames.iwasawa_reconstruction");
        double metric = 0.0;
        for (int t = 0; t < cfg.trials; ++t) {
            const Frame B = random_injective_frame(rng, 5, 12);
            const auto f = frames::iwasawa(B);
            const Frame back = frames::apply_small(f.p, f.q);
            double scale_bound = 0.0;
            for (const auto& c : B.cols())
                scale_bound = std::max(scale_bound, weak_norm(c));
            double dev = 0.0;
            for (std::size_t j = 0; j < B.k(); ++j)
                dev = std::max(dev, sup_norm(back.col(j) - B.col(j)));
            metric = std::max(metric, dev / scale_bound);
        }
        cases.push_back(
            make_case(cfg, "frames.iwasawa_reconstruction", metric, 1e-10));
    }

    {
        // synthesized p q factors are recovered uniquely
        Rng rng(cfg.seed, "frames.iwasawa_uniqueness");
        double metric = 0.0;
        for (int t = 0; t < cfg.trials; ++t) {
            const std::size_t k = 1 + rng.index(5);
            const Frame p = random_orthonormal_frame(rng, k, 12);
            const SmallMatrix q = random_upper_positive(rng, k);
            const auto f = frames::iwasawa(frames::apply_small(p, q));
            metric = std::max(metric, (f.q - q).cwiseAbs().maxCoeff());
            for (std::size_t j = 0; j < k; ++j)
                metric = std::max(metric, sup_norm(f.p.col(j) - p.col(j)));
        }
        cases.push_back(
            make_case(cfg, "frames.iwasawa_uniqueness", metric, 1e-8));
    }

    {
        // projector spectra sit on {0, 1}
        Rng rng(cfg.seed, "frames.projector_spectrum");
        double metric = 0.0;
        for (int t = 0; t < cfg.trials; ++t) {
            const Frame A = random_injective_frame(rng, 5, 12);
            const GrassmannPoint Q = frames::grassmann_project(A);
            const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Q.proj());
            for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
                const double lam = es.eigenvalues()(i);
                metric = std::max(metric,
                                  std::min(std::abs(lam), std::abs(lam - 1.0)));
            }
        }
        cases.push_back(
            make_case(cfg, "frames.projector_spectrum", metric, 1e-7));
    }

    return cases;
}

}  // namespace rinf::verify
