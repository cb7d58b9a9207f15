#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include "rinf/finseq.hpp"

namespace rinf::frames {

using SmallMatrix = Eigen::MatrixXd;

inline constexpr double kOrthoTol = 1e-10;
inline constexpr double kProjTol = 1e-10;
inline constexpr double kOrbitTol = 1e-8;

/// A k-frame: a linear map R^k -> R^inf stored as the k images of the
/// standard basis. Columns are finitely supported; the joint support
/// bound is the max over columns.
class Frame {
public:
    explicit Frame(std::vector<FinSeq> cols);

    /// Columns read off an m x k block matrix.
    static Frame from_block(const Eigen::MatrixXd& block);

    std::size_t k() const { return cols_.size(); }
    const FinSeq& col(std::size_t j) const { return cols_[j]; }
    const std::vector<FinSeq>& cols() const { return cols_; }
    std::size_t support_bound() const;

    /// Dense m x k block, padded to at least min_rows rows.
    Eigen::MatrixXd block(std::size_t min_rows = 0) const;

    friend bool operator==(const Frame&, const Frame&) = default;

private:
    std::vector<FinSeq> cols_;
};

/// A^t(x) = (<col_1,x>, ..., <col_k,x>), the weak-inner-product adjoint.
Eigen::VectorXd transpose_apply(const Frame& A, const FinSeq& x);

/// A(c) = sum_j c_j col_j back in R^inf.
FinSeq frame_apply(const Frame& A, const Eigen::VectorXd& c);

/// Right action A . M for a k x k matrix M.
Frame apply_small(const Frame& A, const SmallMatrix& M);

/// Gram matrix (A^t A)_ij = <col_i, col_j>.
SmallMatrix gram(const Frame& A);

/// Injectivity via |det(gram)| > 1e-12 scale^(2k), scale = max column norm.
bool is_injective(const Frame& A);

/// True iff ||gram(A) - Id||_max <= 1e-10.
bool is_orthonormal(const Frame& A);

/// Iwasawa factors B = p q with p an orthonormal frame and q upper
/// triangular with strictly positive diagonal.
struct IwasawaFactors {
    Frame p;
    SmallMatrix q;
};

/// Modified Gram-Schmidt realization of the unique factorization; throws
/// RankDeficient when B fails the injectivity tolerance.
IwasawaFactors iwasawa(const Frame& B);

/// A k-dimensional subspace of R^inf, canonically encoded as the
/// orthogonal projector onto it, stored on the minimal support block.
class GrassmannPoint {
public:
    /// Validates symmetry (1e-12), idempotence (1e-10), integer trace
    /// (1e-8) and trims trailing zero rows/columns.
    explicit GrassmannPoint(Eigen::MatrixXd proj);

    std::size_t m() const { return static_cast<std::size_t>(proj_.rows()); }
    std::size_t k() const { return k_; }
    const Eigen::MatrixXd& proj() const { return proj_; }

    /// Projector padded with zeros to an n x n block, n >= m.
    Eigen::MatrixXd padded(std::size_t n) const;

    friend bool operator==(const GrassmannPoint&, const GrassmannPoint&) = default;

private:
    Eigen::MatrixXd proj_;
    std::size_t k_ = 0;
};

bool approx_equal(const GrassmannPoint& a, const GrassmannPoint& b, double tol);

/// pi(A) = image of A, as a projector point of the Grassmannian.
GrassmannPoint grassmann_project(const Frame& A);

enum class OrbitGroup { gl, o };

/// Same GL(k)- resp. O(k)-orbit test: equal images in R^inf. For the
/// O(k) case both frames must be orthonormal (NotOrthonormal otherwise).
bool same_orbit(const Frame& A, const Frame& B, OrbitGroup group);

/// Membership (Q, x) in the universal bundle: proj fixes x and x has no
/// component outside the block, within 1e-8 (1 + |x|).
bool universal_bundle_contains(const GrassmannPoint& Q, const FinSeq& x);

/// Tangent vector at a Grassmann point: a linear map from the subspace
/// to its orthogonal complement, in the deterministic adapted bases of
/// adapted_frames(). hom is (m - k) x k where m = k + hom.rows() picks
/// the working block; it must cover the base's support block, and may
/// exceed it to move into fresh coordinate directions.
struct GrassTangent {
    GrassmannPoint base;
    Eigen::MatrixXd hom;
};

/// Deterministic adapted orthonormal bases on an m-block (block = 0
/// means the base's own block): first the subspace frame P (m x k,
/// Gram-Schmidt of proj e_1, proj e_2, ... in index order), then the
/// complement frame N (m x (m-k), Gram-Schmidt of e_1, e_2, ... against
/// what is already collected).
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> adapted_frames(
    const GrassmannPoint& Q, std::size_t block = 0);

/// Subspace spanned by P + t N hom; t = 0 returns the base point.
GrassmannPoint grassmann_tangent_move(const GrassTangent& T, double t);

/// Inclusion into a larger R^n. Canonical representations make this the
/// identity on data; n must be at least the current support bound.
Frame embed(const Frame& A, std::size_t n);
GrassmannPoint embed(const GrassmannPoint& Q, std::size_t n);

}  // namespace rinf::frames

// JSON forms: Frame {k, cols}, GrassmannPoint {m, proj}.
template <>
struct nlohmann::adl_serializer<rinf::frames::Frame> {
    static rinf::frames::Frame from_json(const json& j);
    static void to_json(json& j, const rinf::frames::Frame& A);
};

template <>
struct nlohmann::adl_serializer<rinf::frames::GrassmannPoint> {
    static rinf::frames::GrassmannPoint from_json(const json& j);
    static void to_json(json& j, const rinf::frames::GrassmannPoint& Q);
};
