#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace rinf {

/// A finitely supported real sequence: an element of the direct sum
/// R^(N), stored as a dense prefix with no trailing zeros. Coordinates
/// at indices >= size() are zero. Values are immutable after
/// construction, so FinSeq is safe to share across threads.
///
/// Canonical form makes equality coordinatewise and independent of how
/// much zero padding an input carried. A coordinate counts as zero only
/// when it is exactly 0.0; use trim() for numerical cleanup.
class FinSeq {
public:
    FinSeq() = default;
    explicit FinSeq(std::vector<double> entries);

    /// Standard basis vector with a single 1.0 at (0-based) index i.
    static FinSeq unit(std::size_t i);
    static FinSeq zero() { return FinSeq{}; }

    /// Coordinate access; indices beyond the stored prefix read as 0.0.
    double operator[](std::size_t i) const {
        return i < entries_.size() ? entries_[i] : 0.0;
    }

    /// Minimal active length (one past the last nonzero coordinate).
    std::size_t size() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }
    std::span<const double> coeffs() const { return entries_; }

    friend bool operator==(const FinSeq&, const FinSeq&) = default;

private:
    std::vector<double> entries_;
};

FinSeq add(const FinSeq& x, const FinSeq& y);
FinSeq scale(double lambda, const FinSeq& x);

/// The weak inner product <x,y> = sum_i x_i y_i (a finite sum over the
/// common support).
double weak_inner(const FinSeq& x, const FinSeq& y);

/// Weak Euclidean length |x| = sqrt(<x,x>).
double weak_norm(const FinSeq& x);

double sup_norm(const FinSeq& x);

/// Minimal n with x_i = 0 for all i >= n. Equals size() in canonical form.
std::size_t support(const FinSeq& x);

/// Zero out coordinates with |x_i| <= eps and re-canonicalize.
FinSeq trim(const FinSeq& x, double eps);

/// Max coordinatewise deviation <= tol.
bool approx_equal(const FinSeq& x, const FinSeq& y, double tol);

inline FinSeq operator+(const FinSeq& x, const FinSeq& y) { return add(x, y); }
FinSeq operator-(const FinSeq& x, const FinSeq& y);
inline FinSeq operator*(double lambda, const FinSeq& x) { return scale(lambda, x); }

// JSON form: plain array of reals in canonical order.
void to_json(nlohmann::json& j, const FinSeq& x);
void from_json(const nlohmann::json& j, FinSeq& x);

}  // namespace rinf
