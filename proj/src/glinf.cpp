#include "rinf/glinf.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "rinf/errors.hpp"

namespace rinf::glinf {

namespace {

double spectral_norm(const Eigen::MatrixXd& m) {
    if (m.rows() == 0) return 0.0;
    return m.jacobiSvd().singularValues()(0);
}

Eigen::MatrixXd json_to_matrix(const nlohmann::json& j) {
    const auto rows = j.get<std::vector<std::vector<double>>>();
    const auto n = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXd b(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)].size()) != n)
            throw InvalidArgument("block JSON: matrix is not square");
        for (Eigen::Index c = 0; c < n; ++c)
            b(i, c) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
    }
    return b;
}

nlohmann::json matrix_to_json(const Eigen::MatrixXd& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

// trailing rows/columns equal (exactly) to the reference pattern are
// dropped: identity rows/cols for group elements, zero for the algebra
Eigen::MatrixXd trim_tail(Eigen::MatrixXd b, bool identity_tail) {
    Eigen::Index n = b.rows();
    auto tail_is_trivial = [&](Eigen::Index m) {
        for (Eigen::Index i = 0; i < m; ++i) {
            const double row_ref = identity_tail && i == m - 1 ? 1.0 : 0.0;
            if (b(m - 1, i) != (i == m - 1 ? row_ref : 0.0)) return false;
            if (b(i, m - 1) != (i == m - 1 ? row_ref : 0.0)) return false;
        }
        return true;
    };
    while (n > 0 && tail_is_trivial(n)) --n;
    if (n != b.rows()) b = b.topLeftCorner(n, n).eval();
    return b;
}

}  // namespace

GLInfElement::GLInfElement(Eigen::MatrixXd block) {
    if (block.rows() != block.cols())
        throw InvalidArgument("GLInfElement: block must be square");
    block_ = trim_tail(std::move(block), /*identity_tail=*/true);
    if (block_.rows() > 0) {
        const double scale = block_.cwiseAbs().maxCoeff();
        const double threshold =
            1e-12 * std::pow(std::max(scale, 1e-300),
                             static_cast<double>(block_.rows()));
        if (std::abs(block_.determinant()) <= threshold)
            throw Singular("GLInfElement: block is not invertible");
    }
}

Eigen::MatrixXd GLInfElement::padded(std::size_t n) const {
    const auto nn = static_cast<Eigen::Index>(std::max(n, this->n()));
    Eigen::MatrixXd out = Eigen::MatrixXd::Identity(nn, nn);
    out.topLeftCorner(block_.rows(), block_.cols()) = block_;
    return out;
}

GLInfAlgebra::GLInfAlgebra(Eigen::MatrixXd block) {
    if (block.rows() != block.cols())
        throw InvalidArgument("GLInfAlgebra: block must be square");
    block_ = trim_tail(std::move(block), /*identity_tail=*/false);
}

Eigen::MatrixXd GLInfAlgebra::padded(std::size_t n) const {
    const auto nn = static_cast<Eigen::Index>(std::max(n, this->n()));
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(nn, nn);
    out.topLeftCorner(block_.rows(), block_.cols()) = block_;
    return out;
}

GLInfAlgebra GLInfAlgebra::unit(std::size_t i, std::size_t j, double value) {
    const auto n = static_cast<Eigen::Index>(std::max(i, j) + 1);
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
    b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = value;
    return GLInfAlgebra(std::move(b));
}

GLInfAlgebra operator+(const GLInfAlgebra& x, const GLInfAlgebra& y) {
    const std::size_t n = std::max(x.n(), y.n());
    return GLInfAlgebra(x.padded(n) + y.padded(n));
}

GLInfAlgebra operator-(const GLInfAlgebra& x, const GLInfAlgebra& y) {
    const std::size_t n = std::max(x.n(), y.n());
    return GLInfAlgebra(x.padded(n) - y.padded(n));
}

GLInfAlgebra operator*(double lambda, const GLInfAlgebra& x) {
    return GLInfAlgebra(lambda * x.block());
}

double operator_norm(const GLInfAlgebra& x) { return spectral_norm(x.block()); }

double max_abs(const GLInfAlgebra& x) {
    return x.n() == 0 ? 0.0 : x.block().cwiseAbs().maxCoeff();
}

bool approx_equal(const GLInfElement& a, const GLInfElement& b, double tol) {
    const std::size_t n = std::max(a.n(), b.n());
    if (n == 0) return true;
    return (a.padded(n) - b.padded(n)).cwiseAbs().maxCoeff() <= tol;
}

bool approx_equal(const GLInfAlgebra& x, const GLInfAlgebra& y, double tol) {
    const std::size_t n = std::max(x.n(), y.n());
    if (n == 0) return true;
    return (x.padded(n) - y.padded(n)).cwiseAbs().maxCoeff() <= tol;
}

GLInfElement trim(const GLInfElement& a, double eps) {
    Eigen::MatrixXd b = a.block();
    for (Eigen::Index i = 0; i < b.rows(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
            const double ref = i == j ? 1.0 : 0.0;
            if (std::abs(b(i, j) - ref) <= eps) b(i, j) = ref;
        }
    return GLInfElement(std::move(b));
}

GLInfAlgebra trim(const GLInfAlgebra& x, double eps) {
    Eigen::MatrixXd b = x.block();
    for (Eigen::Index i = 0; i < b.rows(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j)
            if (std::abs(b(i, j)) <= eps) b(i, j) = 0.0;
    return GLInfAlgebra(std::move(b));
}

GLInfElement compose(const GLInfElement& a, const GLInfElement& b) {
    const std::size_t n = std::max(a.n(), b.n());
    return GLInfElement(a.padded(n) * b.padded(n));
}

GLInfElement invert(const GLInfElement& a) {
    if (a.n() == 0) return a;
    // the constructor tolerance already rejected near-singular blocks
    return GLInfElement(a.block().inverse());
}

GLInfAlgebra bracket(const GLInfAlgebra& x, const GLInfAlgebra& y) {
    const std::size_t n = std::max(x.n(), y.n());
    const Eigen::MatrixXd xb = x.padded(n), yb = y.padded(n);
    return GLInfAlgebra(xb * yb - yb * xb);
}

GLInfElement exp(const GLInfAlgebra& x) {
    if (x.n() == 0) return GLInfElement::identity();
    const double norm = spectral_norm(x.block());
    int s = 0;
    while (norm / std::pow(2.0, s) > 0.25) ++s;

    const Eigen::MatrixXd xs = x.block() / std::pow(2.0, s);
    const auto n = x.block().rows();
    Eigen::MatrixXd sum = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
    for (int k = 1; k <= 8; ++k) {
        term = (term * xs / static_cast<double>(k)).eval();
        sum += term;
    }
    for (int i = 0; i < s; ++i) sum = (sum * sum).eval();
    return GLInfElement(std::move(sum));
}

GLInfAlgebra log_near_id(const GLInfElement& a) {
    const auto n = a.block().rows();
    if (n == 0) return GLInfAlgebra{};
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    if (spectral_norm(a.block() - id) >= 0.9)
        throw OutsideChart("log_near_id: ||A - I|| >= 0.9");

    // inverse scaling-and-squaring: Denman-Beavers square roots until the
    // Mercator series converges fast
    Eigen::MatrixXd m = a.block();
    int halvings = 0;
    while (spectral_norm(m - id) > 0.25) {
        Eigen::MatrixXd y = m, z = id;
        for (int it = 0; it < 60; ++it) {
            const Eigen::MatrixXd yn = 0.5 * (y + z.inverse());
            const Eigen::MatrixXd zn = 0.5 * (z + y.inverse());
            const double step = (yn - y).cwiseAbs().maxCoeff();
            y = yn;
            z = zn;
            if (step < 1e-15 * std::max(1.0, y.cwiseAbs().maxCoeff())) break;
        }
        m = y;
        ++halvings;
    }

    const Eigen::MatrixXd e = m - id;
    Eigen::MatrixXd term = e;
    Eigen::MatrixXd sum = e;
    for (int k = 2; k <= 40; ++k) {
        term = (term * e).eval();
        const Eigen::MatrixXd contrib =
            (k % 2 == 0 ? -1.0 : 1.0) / static_cast<double>(k) * term;
        sum += contrib;
        if (contrib.cwiseAbs().maxCoeff() < 1e-17) break;
    }
    return GLInfAlgebra(std::pow(2.0, halvings) * sum);
}

GLInfAlgebra bch(const GLInfAlgebra& x, const GLInfAlgebra& y, int order) {
    if (order < 1 || order > 4)
        throw UnsupportedOrder("bch: order must be in {1,2,3,4}");
    GLInfAlgebra z = x + y;
    if (order >= 2) z = z + 0.5 * bracket(x, y);
    if (order >= 3)
        z = z + (1.0 / 12.0) * (bracket(x, bracket(x, y)) +
                                bracket(y, bracket(y, x)));
    if (order >= 4)
        z = z - (1.0 / 24.0) * bracket(y, bracket(x, bracket(x, y)));
    return z;
}

double det(const GLInfElement& a) {
    return a.n() == 0 ? 1.0 : a.block().determinant();
}

double trace(const GLInfAlgebra& x) {
    return x.n() == 0 ? 0.0 : x.block().trace();
}

FinSeq act(const GLInfElement& a, const FinSeq& x) {
    const std::size_t n = a.n();
    if (n == 0) return x;
    Eigen::VectorXd head = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < std::min(n, x.size()); ++i)
        head(static_cast<Eigen::Index>(i)) = x[i];
    head = a.block() * head;
    std::vector<double> out(std::max(n, x.size()), 0.0);
    for (std::size_t i = 0; i < n; ++i) out[i] = head(static_cast<Eigen::Index>(i));
    for (std::size_t i = n; i < x.size(); ++i) out[i] = x[i];
    return FinSeq(std::move(out));
}

bool in_o(const GLInfElement& a) {
    if (a.n() == 0) return true;
    const Eigen::MatrixXd d =
        a.block().transpose() * a.block() -
        Eigen::MatrixXd::Identity(a.block().rows(), a.block().cols());
    return d.cwiseAbs().maxCoeff() <= 1e-10;
}

bool in_so(const GLInfElement& a) {
    return in_o(a) && std::abs(det(a) - 1.0) <= 1e-8;
}

bool in_sl(const GLInfElement& a) { return std::abs(det(a) - 1.0) <= 1e-8; }

bool in_oalg(const GLInfAlgebra& x) {
    if (x.n() == 0) return true;
    return (x.block().transpose() + x.block()).cwiseAbs().maxCoeff() <= 1e-12;
}

bool in_slalg(const GLInfAlgebra& x) { return std::abs(trace(x)) <= 1e-12; }

}  // namespace rinf::glinf

using rinf::glinf::GLInfAlgebra;
using rinf::glinf::GLInfElement;

GLInfElement nlohmann::adl_serializer<GLInfElement>::from_json(const json& j) {
    return GLInfElement(rinf::glinf::json_to_matrix(j.at("block")));
}

void nlohmann::adl_serializer<GLInfElement>::to_json(json& j,
                                                     const GLInfElement& a) {
    j = json{{"n", a.n()}, {"block", rinf::glinf::matrix_to_json(a.block())}};
}

GLInfAlgebra nlohmann::adl_serializer<GLInfAlgebra>::from_json(const json& j) {
    return GLInfAlgebra(rinf::glinf::json_to_matrix(j.at("block")));
}

void nlohmann::adl_serializer<GLInfAlgebra>::to_json(json& j,
                                                     const GLInfAlgebra& x) {
    j = json{{"n", x.n()}, {"block", rinf::glinf::matrix_to_json(x.block())}};
}
