#pragma once

#include <vector>

namespace rinf::mapspace {

/// Equispaced grid theta_j = 2 pi j / N on the circle; N even, >= 8.
struct GridS1 {
    int N;

    explicit GridS1(int n);
    double theta(int j) const;

    friend bool operator==(const GridS1&, const GridS1&) = default;
};

/// Reduce an angle difference to [-pi, pi].
double wrap_to_pi(double delta);
/// Reduce an angle to [0, 2 pi).
double wrap_2pi(double theta);

/// Real trigonometric interpolant through N equispaced samples (N even),
/// with the Nyquist mode taken as the symmetric cosine. value() snaps to
/// the stored sample when the reduced angle is bit-equal to a grid node,
/// so node evaluation is exact; elsewhere the series is summed directly
/// (O(N) per evaluation after an O(N^2) coefficient pass).
class TrigInterp {
public:
    TrigInterp(const GridS1& grid, std::vector<double> values);

    double value(double theta) const;
    double derivative(double theta) const;
    /// Spectral derivative at a node (the differentiation-matrix value).
    double derivative_at_node(int j) const;

    const std::vector<double>& values() const { return vals_; }
    const GridS1& grid() const { return grid_; }

private:
    GridS1 grid_;
    std::vector<double> vals_;
    std::vector<double> cos_coef_;  // a_0 .. a_{N/2}
    std::vector<double> sin_coef_;  // b_0 .. b_{N/2} (b_0, b_{N/2} unused)
};

}  // namespace rinf::mapspace
