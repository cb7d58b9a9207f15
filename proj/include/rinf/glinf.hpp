#pragma once

#include <cstddef>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include "rinf/finseq.hpp"

namespace rinf::glinf {

/// An element of GL(inf): an operator on R^inf equal to the identity
/// outside a finite n x n block. The stored block is minimal -- trailing
/// rows/columns that exactly match the identity are trimmed -- and must
/// be invertible (relative determinant tolerance 1e-12 scale^n).
/// The identity itself has n = 0.
class GLInfElement {
public:
    explicit GLInfElement(Eigen::MatrixXd block);
    static GLInfElement identity() { return GLInfElement(); }

    std::size_t n() const { return static_cast<std::size_t>(block_.rows()); }
    const Eigen::MatrixXd& block() const { return block_; }

    /// Block padded with identity rows/columns to size at least n.
    Eigen::MatrixXd padded(std::size_t n) const;

    friend bool operator==(const GLInfElement&, const GLInfElement&) = default;

private:
    GLInfElement() : block_(0, 0) {}
    Eigen::MatrixXd block_;
};

/// An element of gl(inf): an N x N matrix with finitely many nonzero
/// entries, stored as a minimal block (zero outside).
class GLInfAlgebra {
public:
    GLInfAlgebra() : block_(0, 0) {}
    explicit GLInfAlgebra(Eigen::MatrixXd block);

    std::size_t n() const { return static_cast<std::size_t>(block_.rows()); }
    const Eigen::MatrixXd& block() const { return block_; }
    Eigen::MatrixXd padded(std::size_t n) const;

    /// Elementary matrix unit E_ij (0-based), handy in tests and demos.
    static GLInfAlgebra unit(std::size_t i, std::size_t j, double value = 1.0);

    friend bool operator==(const GLInfAlgebra&, const GLInfAlgebra&) = default;

private:
    Eigen::MatrixXd block_;
};

GLInfAlgebra operator+(const GLInfAlgebra& x, const GLInfAlgebra& y);
GLInfAlgebra operator-(const GLInfAlgebra& x, const GLInfAlgebra& y);
GLInfAlgebra operator*(double lambda, const GLInfAlgebra& x);

/// Largest singular value of the block (0 for the empty block).
double operator_norm(const GLInfAlgebra& x);
double max_abs(const GLInfAlgebra& x);

bool approx_equal(const GLInfElement& a, const GLInfElement& b, double tol);
bool approx_equal(const GLInfAlgebra& x, const GLInfAlgebra& y, double tol);

/// Numerical cleanup: snap entries within eps of the identity pattern
/// (resp. of zero) and re-canonicalize. Plain operations never do this
/// on their own.
GLInfElement trim(const GLInfElement& a, double eps);
GLInfAlgebra trim(const GLInfAlgebra& x, double eps);

GLInfElement compose(const GLInfElement& a, const GLInfElement& b);
GLInfElement invert(const GLInfElement& a);

/// Commutator [X, Y] = XY - YX.
GLInfAlgebra bracket(const GLInfAlgebra& x, const GLInfAlgebra& y);

/// Matrix exponential by scaling-and-squaring with a degree-8 Taylor
/// kernel; the block is scaled until its 2-norm is <= 0.25 (kept small
/// enough that the truncation stays below the 1e-10 contracts).
/// Block-diagonal padding commutes with exp exactly.
GLInfElement exp(const GLInfAlgebra& x);

/// Principal logarithm near the identity: repeated Denman-Beavers square
/// roots until ||A - I||_2 <= 0.25, then the Mercator series. Requires
/// ||A - I||_2 < 0.9 (OutsideChart otherwise).
GLInfAlgebra log_near_id(const GLInfElement& a);

/// Truncated Campbell-Baker-Hausdorff series, orders 1 to 4:
/// X + Y + 1/2 [X,Y] + 1/12 ([X,[X,Y]] + [Y,[Y,X]]) - 1/24 [Y,[X,[X,Y]]].
GLInfAlgebra bch(const GLInfAlgebra& x, const GLInfAlgebra& y, int order);

/// Determinant of the block; the identity tail contributes factor 1.
double det(const GLInfElement& a);

double trace(const GLInfAlgebra& x);

/// Left action on R^inf: block-matrix product on the first n
/// coordinates, identity beyond.
FinSeq act(const GLInfElement& a, const FinSeq& x);

// subgroup / subalgebra membership, with the block tolerances of the
// defining identities
bool in_o(const GLInfElement& a);     // <Ax,Ay> = <x,y>: ||A^tA - I||_max <= 1e-10
bool in_so(const GLInfElement& a);    // in_o and |det - 1| <= 1e-8
bool in_sl(const GLInfElement& a);    // |det - 1| <= 1e-8
bool in_oalg(const GLInfAlgebra& x);  // ||X^t + X||_max <= 1e-12
bool in_slalg(const GLInfAlgebra& x); // |trace| <= 1e-12

}  // namespace rinf::glinf

// JSON form: {n, block} with block as row-major nested arrays.
template <>
struct nlohmann::adl_serializer<rinf::glinf::GLInfElement> {
    static rinf::glinf::GLInfElement from_json(const json& j);
    static void to_json(json& j, const rinf::glinf::GLInfElement& a);
};

template <>
struct nlohmann::adl_serializer<rinf::glinf::GLInfAlgebra> {
    static rinf::glinf::GLInfAlgebra from_json(const json& j);
    static void to_json(json& j, const rinf::glinf::GLInfAlgebra& x);
};
