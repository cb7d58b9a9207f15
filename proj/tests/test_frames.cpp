#include <doctest.h>

#include <cmath>

#include <nlohmann/json.hpp>

#include "rinf/errors.hpp"
#include "rinf/frames.hpp"
#include "rinf/rng.hpp"
#include "rinf/sampling.hpp"

using namespace rinf;
using frames::Frame;
using frames::GrassmannPoint;
using frames::SmallMatrix;

namespace {

FinSeq e(std::size_t i) { return FinSeq::unit(i); }

// classical Gram-Schmidt, independent of the modified variant inside
// iwasawa(); used as the uniqueness oracle
std::vector<FinSeq> classical_gram_schmidt(const Frame& B) {
    std::vector<FinSeq> q;
    for (std::size_t j = 0; j < B.k(); ++j) {
        FinSeq v = B.col(j);
        FinSeq acc = FinSeq::zero();
        for (const auto& qi : q) acc = acc + scale(weak_inner(qi, B.col(j)), qi);
        v = v - acc;
        q.push_back(scale(1.0 / weak_norm(v), v));
    }
    return q;
}

}  // namespace

TEST_CASE("transpose_apply") {
    const Frame single({e(2)});
    const FinSeq x({1.0, 2.0, 7.0});
    const auto tx = frames::transpose_apply(single, x);
    REQUIRE(tx.size() == 1);
    CHECK(tx(0) == weak_inner(e(2), x));
    CHECK(tx(0) == 7.0);

    CHECK(frames::transpose_apply(single, FinSeq::zero())(0) == 0.0);

    const Frame ortho({e(0), e(1)});
    const auto t2 = frames::transpose_apply(ortho, e(0) + scale(5.0, e(8)));
    CHECK(t2(0) == 1.0);
    CHECK(t2(1) == 0.0);
}

TEST_CASE("gram matrix") {
    const Frame ortho({e(0), e(1), e(4)});
    const SmallMatrix g = frames::gram(ortho);
    CHECK((g - SmallMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);

    const Frame B({scale(2.0, e(0)), e(0) + e(1)});
    const SmallMatrix gb = frames::gram(B);
    CHECK(gb(0, 0) == 4.0);
    CHECK(gb(0, 1) == 2.0);
    CHECK(gb(1, 0) == 2.0);
    CHECK(gb(1, 1) == 2.0);

    const Frame repeated({e(0), e(0)});
    CHECK(frames::gram(repeated).determinant() == 0.0);
}

TEST_CASE("injectivity and orthonormality tests") {
    const Frame std3({e(0), e(1), e(2)});
    CHECK(frames::is_injective(std3));
    CHECK(frames::is_orthonormal(std3));

    // nearly repeated column: det(gram) ~ 1e-30 under the tolerance
    const Frame near({e(0), e(0) + scale(1e-15, e(1))});
    CHECK_FALSE(frames::is_injective(near));

    const Frame skewed({scale(2.0, e(0)), e(1)});
    CHECK(frames::is_injective(skewed));
    CHECK_FALSE(frames::is_orthonormal(skewed));
}

TEST_CASE("iwasawa on hand-checked frames") {
    const Frame std2({e(0), e(1)});
    const auto fi = frames::iwasawa(std2);
    CHECK(fi.p.cols() == std2.cols());
    CHECK((fi.q - SmallMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);

    const Frame B({scale(2.0, e(0)), e(0) + e(1)});
    const auto f = frames::iwasawa(B);
    CHECK(weak_norm(f.p.col(0) - e(0)) <= 1e-15);
    CHECK(weak_norm(f.p.col(1) - e(1)) <= 1e-15);
    CHECK(f.q(0, 0) == doctest::Approx(2.0));
    CHECK(f.q(0, 1) == doctest::Approx(1.0));
    CHECK(f.q(1, 1) == doctest::Approx(1.0));
    CHECK(f.q(1, 0) == 0.0);

    CHECK_THROWS_AS(frames::iwasawa(Frame({e(0), e(0)})), RankDeficient);
}

TEST_CASE("iwasawa agrees with the classical Gram-Schmidt oracle") {
    rinf::Rng rng(17, "test.iwasawa_oracle");
    for (int t = 0; t < 200; ++t) {
        const Frame B = verify::random_injective_frame(rng, 5, 12);
        const auto f = frames::iwasawa(B);
        const auto oracle = classical_gram_schmidt(B);
        for (std::size_t j = 0; j < B.k(); ++j)
            CHECK(sup_norm(f.p.col(j) - oracle[j]) <= 1e-8);
        // q is upper triangular with strictly positive diagonal
        for (std::size_t i = 0; i < B.k(); ++i) {
            CHECK(f.q(static_cast<Eigen::Index>(i),
                      static_cast<Eigen::Index>(i)) > 0.0);
            for (std::size_t j = 0; j < i; ++j)
                CHECK(f.q(static_cast<Eigen::Index>(i),
                          static_cast<Eigen::Index>(j)) == 0.0);
        }
    }
}

TEST_CASE("iwasawa synthesis roundtrip") {
    rinf::Rng rng(17, "test.iwasawa_synth");
    for (int t = 0; t < 200; ++t) {
        const std::size_t k = 1 + rng.index(4);
        const Frame p = verify::random_orthonormal_frame(rng, k, 10);
        const SmallMatrix q = verify::random_upper_positive(rng, k);
        const auto f = frames::iwasawa(frames::apply_small(p, q));
        CHECK((f.q - q).cwiseAbs().maxCoeff() <= 1e-8);
        for (std::size_t j = 0; j < k; ++j)
            CHECK(sup_norm(f.p.col(j) - p.col(j)) <= 1e-8);
    }
}

TEST_CASE("grassmann projector examples") {
    const GrassmannPoint axis = frames::grassmann_project(Frame({e(0)}));
    CHECK(axis.m() == 1);
    CHECK(axis.k() == 1);
    CHECK(axis.proj()(0, 0) == doctest::Approx(1.0));

    // both frames span {e1, e2}
    const GrassmannPoint qa = frames::grassmann_project(Frame({e(0), e(1)}));
    const GrassmannPoint qb =
        frames::grassmann_project(Frame({e(1), e(0) - e(1)}));
    CHECK(frames::approx_equal(qa, qb, 1e-12));

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const GrassmannPoint diag = frames::grassmann_project(
        Frame({scale(inv_sqrt2, e(0) + e(1))}));
    REQUIRE(diag.m() == 2);
    for (Eigen::Index i = 0; i < 2; ++i)
        for (Eigen::Index j = 0; j < 2; ++j)
            CHECK(diag.proj()(i, j) == doctest::Approx(0.5));
}

TEST_CASE("same_orbit") {
    CHECK(frames::same_orbit(Frame({e(0), e(1)}), Frame({e(1), e(0) - e(1)}),
                             frames::OrbitGroup::gl));
    CHECK_FALSE(frames::same_orbit(Frame({e(0)}), Frame({e(1)}),
                                   frames::OrbitGroup::gl));

    rinf::Rng rng(17, "test.same_orbit");
    const Frame A = verify::random_orthonormal_frame(rng, 3, 9);
    const SmallMatrix R = verify::random_orthogonal_small(rng, 3);
    CHECK(frames::same_orbit(A, frames::apply_small(A, R),
                             frames::OrbitGroup::o));
    CHECK_THROWS_AS(frames::same_orbit(Frame({scale(2.0, e(0))}), Frame({e(0)}),
                                       frames::OrbitGroup::o),
                    NotOrthonormal);
}

TEST_CASE("universal bundle membership") {
    const GrassmannPoint axis = frames::grassmann_project(Frame({e(0)}));
    CHECK(frames::universal_bundle_contains(axis, scale(3.0, e(0))));
    CHECK_FALSE(frames::universal_bundle_contains(axis, e(1)));

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const GrassmannPoint diag = frames::grassmann_project(
        Frame({scale(inv_sqrt2, e(0) + e(1))}));
    CHECK(frames::universal_bundle_contains(diag, e(0) + e(1)));
    CHECK_FALSE(frames::universal_bundle_contains(diag, e(0) - e(1)));
}

TEST_CASE("grassmann tangent moves") {
    // base span{e1} has a 1x1 support block; a 1x1 hom extends the
    // working block to 2 and points toward e2
    const GrassmannPoint base = frames::grassmann_project(Frame({e(0)}));
    Eigen::MatrixXd hom(1, 1);
    hom(0, 0) = 1.0;
    const frames::GrassTangent T{base, hom};

    CHECK(frames::grassmann_tangent_move(T, 0.0) == base);

    const GrassmannPoint moved = frames::grassmann_tangent_move(T, 1.0);
    const GrassmannPoint expect = frames::grassmann_project(Frame({e(0) + e(1)}));
    CHECK(frames::approx_equal(moved, expect, 1e-12));

    const frames::GrassTangent zero{base, Eigen::MatrixXd::Zero(1, 1)};
    CHECK(frames::approx_equal(frames::grassmann_tangent_move(zero, 0.7), base,
                               1e-12));
}

TEST_CASE("adapted frames are orthonormal and complementary") {
    rinf::Rng rng(17, "test.adapted_frames");
    for (int t = 0; t < 50; ++t) {
        const Frame A = verify::random_injective_frame(rng, 4, 8);
        const GrassmannPoint Q = frames::grassmann_project(A);
        const auto [P, N] = frames::adapted_frames(Q, Q.m() + 2);
        Eigen::MatrixXd joint(P.rows(), P.cols() + N.cols());
        joint << P, N;
        const Eigen::MatrixXd gram = joint.transpose() * joint;
        CHECK((gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols()))
                  .cwiseAbs()
                  .maxCoeff() <= 1e-12);
        // P spans the subspace: proj P = P
        CHECK((Q.padded(static_cast<std::size_t>(P.rows())) * P - P)
                  .cwiseAbs()
                  .maxCoeff() <= 1e-10);
    }
}

TEST_CASE("tangent move derivative matches the finite-difference oracle") {
    rinf::Rng rng(17, "test.grass_fd");
    for (int t = 0; t < 50; ++t) {
        const Frame A = verify::random_injective_frame(rng, 3, 6);
        const GrassmannPoint base = frames::grassmann_project(A);
        const auto [P, N] = frames::adapted_frames(base);
        if (N.cols() == 0) continue;
        Eigen::MatrixXd hom(N.cols(), P.cols());
        for (Eigen::Index i = 0; i < hom.rows(); ++i)
            for (Eigen::Index j = 0; j < hom.cols(); ++j)
                hom(i, j) = rng.gaussian();
        const frames::GrassTangent T{base, hom};

        const Eigen::MatrixXd analytic =
            N * hom * P.transpose() + P * hom.transpose() * N.transpose();
        const double h = 1e-5;
        const std::size_t m = base.m();
        const Eigen::MatrixXd fd =
            (frames::grassmann_tangent_move(T, h).padded(m) -
             frames::grassmann_tangent_move(T, -h).padded(m)) /
            (2.0 * h);
        CHECK((fd - analytic).cwiseAbs().maxCoeff() <= 1e-6 * (1.0 + hom.norm()));
    }
}

TEST_CASE("embed is the identity on canonical data") {
    const Frame B({scale(2.0, e(0)), e(0) + e(1)});
    const Frame embedded = frames::embed(B, 10);
    CHECK(embedded == B);
    CHECK(frames::gram(embedded) == frames::gram(B));

    const auto f1 = frames::iwasawa(B);
    const auto f2 = frames::iwasawa(embedded);
    CHECK(f1.q == f2.q);
    CHECK(f1.p.cols() == f2.p.cols());

    const GrassmannPoint Q = frames::grassmann_project(B);
    CHECK(frames::embed(Q, 12) == Q);

    CHECK_THROWS_AS(frames::embed(B, 1), InvalidArgument);
    CHECK_THROWS_AS(frames::embed(Q, 1), InvalidArgument);
}

TEST_CASE("grassmann point invariants are validated") {
    Eigen::MatrixXd not_proj(2, 2);
    not_proj << 1.0, 0.3, 0.3, 0.5;
    CHECK_THROWS_AS(GrassmannPoint{not_proj}, InvalidArgument);

    Eigen::MatrixXd asym(2, 2);
    asym << 1.0, 1e-6, 0.0, 0.0;
    CHECK_THROWS_AS(GrassmannPoint{asym}, InvalidArgument);

    // trailing zero rows and columns are trimmed
    Eigen::MatrixXd padded = Eigen::MatrixXd::Zero(4, 4);
    padded(0, 0) = 1.0;
    const GrassmannPoint q{padded};
    CHECK(q.m() == 1);
}

TEST_CASE("frames JSON forms") {
    const Frame B({scale(2.0, e(0)), e(0) + e(1)});
    const nlohmann::json jb = B;
    CHECK(jb.at("k") == 2);
    CHECK(jb.at("cols").size() == 2);
    CHECK(jb.get<Frame>() == B);

    const GrassmannPoint Q = frames::grassmann_project(B);
    const nlohmann::json jq = Q;
    CHECK(jq.at("m") == Q.m());
    CHECK(jq.get<GrassmannPoint>() == Q);
}
