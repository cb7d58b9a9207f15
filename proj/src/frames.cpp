#include "rinf/frames.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "rinf/errors.hpp"

namespace rinf::frames {

Frame::Frame(std::vector<FinSeq> cols) : cols_(std::move(cols)) {
    if (cols_.empty()) throw InvalidArgument("Frame: k must be positive");
}

Frame Frame::from_block(const Eigen::MatrixXd& block) {
    std::vector<FinSeq> cols;
    cols.reserve(static_cast<std::size_t>(block.cols()));
    for (Eigen::Index j = 0; j < block.cols(); ++j) {
        std::vector<double> c(block.rows());
        for (Eigen::Index i = 0; i < block.rows(); ++i) c[i] = block(i, j);
        cols.emplace_back(std::move(c));
    }
    return Frame(std::move(cols));
}

std::size_t Frame::support_bound() const {
    std::size_t m = 0;
    for (const auto& c : cols_) m = std::max(m, c.size());
    return m;
}

Eigen::MatrixXd Frame::block(std::size_t min_rows) const {
    const std::size_t m = std::max(support_bound(), min_rows);
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(m, static_cast<Eigen::Index>(k()));
    for (std::size_t j = 0; j < k(); ++j)
        for (std::size_t i = 0; i < cols_[j].size(); ++i)
            B(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                cols_[j][i];
    return B;
}

Eigen::VectorXd transpose_apply(const Frame& A, const FinSeq& x) {
    Eigen::VectorXd out(static_cast<Eigen::Index>(A.k()));
    for (std::size_t j = 0; j < A.k(); ++j)
        out(static_cast<Eigen::Index>(j)) = weak_inner(A.col(j), x);
    return out;
}

FinSeq frame_apply(const Frame& A, const Eigen::VectorXd& c) {
    if (static_cast<std::size_t>(c.size()) != A.k())
        throw InvalidArgument("frame_apply: coefficient size mismatch");
    FinSeq y;
    for (std::size_t j = 0; j < A.k(); ++j)
        y = y + scale(c(static_cast<Eigen::Index>(j)), A.col(j));
    return y;
}

Frame apply_small(const Frame& A, const SmallMatrix& M) {
    if (M.rows() != static_cast<Eigen::Index>(A.k()) || M.cols() < 1)
        throw InvalidArgument("apply_small: matrix shape mismatch");
    std::vector<FinSeq> cols;
    cols.reserve(static_cast<std::size_t>(M.cols()));
    for (Eigen::Index j = 0; j < M.cols(); ++j)
        cols.push_back(frame_apply(A, M.col(j)));
    return Frame(std::move(cols));
}

SmallMatrix gram(const Frame& A) {
    const auto k = static_cast<Eigen::Index>(A.k());
    SmallMatrix G(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = i; j < k; ++j) {
            G(i, j) = weak_inner(A.col(static_cast<std::size_t>(i)),
                                 A.col(static_cast<std::size_t>(j)));
            G(j, i) = G(i, j);
        }
    return G;
}

namespace {
double max_col_norm(const Frame& A) {
    double s = 0.0;
    for (const auto& c : A.cols()) s = std::max(s, weak_norm(c));
    return s;
}
}  // namespace

bool is_injective(const Frame& A) {
    const double scale_pow =
        std::pow(max_col_norm(A), 2.0 * static_cast<double>(A.k()));
    return std::abs(gram(A).determinant()) > 1e-12 * scale_pow;
}

bool is_orthonormal(const Frame& A) {
    const auto k = static_cast<Eigen::Index>(A.k());
    const SmallMatrix D = gram(A) - SmallMatrix::Identity(k, k);
    return D.cwiseAbs().maxCoeff() <= kOrthoTol;
}

IwasawaFactors iwasawa(const Frame& B) {
    if (!is_injective(B)) throw RankDeficient("iwasawa: frame is not injective");
    const std::size_t k = B.k();
    const double scale_norm = max_col_norm(B);

    std::vector<FinSeq> q_cols;
    q_cols.reserve(k);
    SmallMatrix R = SmallMatrix::Zero(static_cast<Eigen::Index>(k),
                                      static_cast<Eigen::Index>(k));
    for (std::size_t j = 0; j < k; ++j) {
        FinSeq v = B.col(j);
        for (std::size_t i = 0; i < j; ++i) {
            const double r = weak_inner(q_cols[i], v);
            R(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = r;
            v = v - scale(r, q_cols[i]);
        }
        const double d = weak_norm(v);
        if (d <= 1e-12 * scale_norm)
            throw RankDeficient("iwasawa: column became dependent");
        R(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = d;
        q_cols.push_back(scale(1.0 / d, v));
    }
    return {Frame(std::move(q_cols)), std::move(R)};
}

GrassmannPoint::GrassmannPoint(Eigen::MatrixXd proj) : proj_(std::move(proj)) {
    if (proj_.rows() != proj_.cols())
        throw InvalidArgument("GrassmannPoint: projector must be square");
    if ((proj_ - proj_.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw InvalidArgument("GrassmannPoint: projector not symmetric");
    if ((proj_ * proj_ - proj_).cwiseAbs().maxCoeff() > kProjTol)
        throw InvalidArgument("GrassmannPoint: projector not idempotent");
    const double tr = proj_.trace();
    const double k_round = std::round(tr);
    if (std::abs(tr - k_round) > 1e-8 || k_round < 0.0)
        throw InvalidArgument("GrassmannPoint: trace is not a subspace dimension");
    k_ = static_cast<std::size_t>(k_round);

    // canonical block: drop trailing rows/columns that are exactly zero
    Eigen::Index m = proj_.rows();
    while (m > 0 && proj_.row(m - 1).cwiseAbs().maxCoeff() == 0.0 &&
           proj_.col(m - 1).cwiseAbs().maxCoeff() == 0.0)
        --m;
    if (m != proj_.rows())
        proj_ = proj_.topLeftCorner(m, m).eval();
}

Eigen::MatrixXd GrassmannPoint::padded(std::size_t n) const {
    const auto nn = static_cast<Eigen::Index>(std::max(n, m()));
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(nn, nn);
    P.topLeftCorner(proj_.rows(), proj_.cols()) = proj_;
    return P;
}

bool approx_equal(const GrassmannPoint& a, const GrassmannPoint& b, double tol) {
    const std::size_t n = std::max(a.m(), b.m());
    if (n == 0) return true;
    return (a.padded(n) - b.padded(n)).cwiseAbs().maxCoeff() <= tol;
}

GrassmannPoint grassmann_project(const Frame& A) {
    const Frame p = iwasawa(A).p;
    const Eigen::MatrixXd P = p.block();
    return GrassmannPoint(P * P.transpose());
}

bool same_orbit(const Frame& A, const Frame& B, OrbitGroup group) {
    if (group == OrbitGroup::o) {
        if (!is_orthonormal(A) || !is_orthonormal(B))
            throw NotOrthonormal("same_orbit: O(k) case needs orthonormal frames");
    }
    return approx_equal(grassmann_project(A), grassmann_project(B), kOrbitTol);
}

bool universal_bundle_contains(const GrassmannPoint& Q, const FinSeq& x) {
    const std::size_t m = Q.m();
    Eigen::VectorXd xb = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < std::min(m, x.size()); ++i)
        xb(static_cast<Eigen::Index>(i)) = x[i];
    double tail_sq = 0.0;  // coordinates outside the block must vanish
    for (std::size_t i = m; i < x.size(); ++i) tail_sq += x[i] * x[i];
    const double resid_sq =
        m == 0 ? 0.0 : (Q.proj() * xb - xb).squaredNorm();
    return std::sqrt(resid_sq + tail_sq) <= 1e-8 * (1.0 + weak_norm(x));
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> adapted_frames(
    const GrassmannPoint& Q, std::size_t block) {
    if (block == 0) block = Q.m();
    if (block < Q.m())
        throw InvalidArgument("adapted_frames: block below the support block");
    const auto m = static_cast<Eigen::Index>(block);
    const auto k = static_cast<Eigen::Index>(Q.k());
    const Eigen::MatrixXd proj = Q.padded(block);
    Eigen::MatrixXd basis(m, m);
    Eigen::Index got = 0;

    auto try_add = [&](Eigen::VectorXd w) {
        // two orthogonalization passes keep the basis orthonormal to
        // machine precision
        for (int pass = 0; pass < 2; ++pass)
            for (Eigen::Index i = 0; i < got; ++i)
                w -= basis.col(i).dot(w) * basis.col(i);
        const double n = w.norm();
        if (n > 1e-10) {
            basis.col(got++) = w / n;
            return true;
        }
        return false;
    };

    // subspace frame from projected basis vectors, in index order
    for (Eigen::Index i = 0; i < m && got < k; ++i)
        try_add(proj.col(i));
    if (got != k) throw RankDeficient("adapted_frames: projector rank mismatch");
    // complement frame from raw basis vectors, lowest index first
    for (Eigen::Index i = 0; i < m && got < m; ++i)
        try_add(Eigen::VectorXd::Unit(m, i));
    if (got != m) throw RankDeficient("adapted_frames: could not complete basis");

    return {basis.leftCols(k), basis.rightCols(m - k)};
}

GrassmannPoint grassmann_tangent_move(const GrassTangent& T, double t) {
    if (t == 0.0) return T.base;
    const std::size_t k = T.base.k();
    if (T.hom.cols() != static_cast<Eigen::Index>(k))
        throw InvalidArgument("grassmann_tangent_move: hom must have k columns");
    const std::size_t block = k + static_cast<std::size_t>(T.hom.rows());
    if (block < T.base.m())
        throw InvalidArgument(
            "grassmann_tangent_move: hom too small for the support block");
    const auto [P, N] = adapted_frames(T.base, block);
    const Eigen::MatrixXd moved = P + t * N * T.hom;
    return grassmann_project(Frame::from_block(moved));
}

Frame embed(const Frame& A, std::size_t n) {
    if (n < A.support_bound())
        throw InvalidArgument("embed: n below the current support bound");
    return A;
}

GrassmannPoint embed(const GrassmannPoint& Q, std::size_t n) {
    if (n < Q.m())
        throw InvalidArgument("embed: n below the current support bound");
    return Q;
}

}  // namespace rinf::frames

using rinf::frames::Frame;
using rinf::frames::GrassmannPoint;

Frame nlohmann::adl_serializer<Frame>::from_json(const json& j) {
    auto cols = j.at("cols").get<std::vector<rinf::FinSeq>>();
    if (j.contains("k") && j.at("k").get<std::size_t>() != cols.size())
        throw rinf::InvalidArgument("Frame JSON: k does not match cols");
    return Frame(std::move(cols));
}

void nlohmann::adl_serializer<Frame>::to_json(json& j, const Frame& A) {
    json cols = json::array();
    for (const auto& c : A.cols()) cols.push_back(c);
    j = json{{"k", A.k()}, {"cols", std::move(cols)}};
}

GrassmannPoint nlohmann::adl_serializer<GrassmannPoint>::from_json(const json& j) {
    const auto rows = j.at("proj").get<std::vector<std::vector<double>>>();
    const auto m = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXd proj(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)].size()) != m)
            throw rinf::InvalidArgument("GrassmannPoint JSON: proj is not square");
        for (Eigen::Index c = 0; c < m; ++c)
            proj(i, c) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
    }
    return GrassmannPoint(std::move(proj));
}

void nlohmann::adl_serializer<GrassmannPoint>::to_json(json& j,
                                                       const GrassmannPoint& Q) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < Q.proj().rows(); ++i) {
        json row = json::array();
        for (Eigen::Index c = 0; c < Q.proj().cols(); ++c)
            row.push_back(Q.proj()(i, c));
        rows.push_back(std::move(row));
    }
    j = json{{"m", Q.m()}, {"proj", std::move(rows)}};
}
