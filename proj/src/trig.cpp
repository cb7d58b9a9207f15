#include "rinf/trig.hpp"

#include <cmath>
#include <numbers>

#include "rinf/errors.hpp"

namespace rinf::mapspace {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

GridS1::GridS1(int n) : N(n) {
    if (n < 8 || n % 2 != 0)
        throw InvalidArgument("GridS1: N must be even and >= 8");
}

double GridS1::theta(int j) const { return kTwoPi * j / N; }

double wrap_to_pi(double delta) {
    double d = std::fmod(delta, kTwoPi);
    if (d > std::numbers::pi) d -= kTwoPi;
    if (d < -std::numbers::pi) d += kTwoPi;
    return d;
}

double wrap_2pi(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    return t;
}

TrigInterp::TrigInterp(const GridS1& grid, std::vector<double> values)
    : grid_(grid), vals_(std::move(values)) {
    if (static_cast<int>(vals_.size()) != grid_.N)
        throw InvalidArgument("TrigInterp: sample count must equal N");
    const int N = grid_.N;
    const int half = N / 2;
    cos_coef_.assign(half + 1, 0.0);
    sin_coef_.assign(half + 1, 0.0);
    for (int k = 0; k <= half; ++k) {
        double ca = 0.0, sa = 0.0;
        for (int j = 0; j < N; ++j) {
            ca += vals_[j] * std::cos(k * grid_.theta(j));
            sa += vals_[j] * std::sin(k * grid_.theta(j));
        }
        cos_coef_[k] = 2.0 * ca / N;
        sin_coef_[k] = 2.0 * sa / N;
    }
}

double TrigInterp::value(double theta) const {
    const int N = grid_.N;
    const double t = wrap_2pi(theta);
    const auto j = static_cast<long>(std::llround(t / (kTwoPi / N)));
    if (j >= 0 && j < N && t == grid_.theta(static_cast<int>(j)))
        return vals_[static_cast<std::size_t>(j)];

    const int half = N / 2;
    double acc = 0.5 * cos_coef_[0];
    for (int k = 1; k < half; ++k)
        acc += cos_coef_[k] * std::cos(k * t) + sin_coef_[k] * std::sin(k * t);
    acc += 0.5 * cos_coef_[half] * std::cos(half * t);
    return acc;
}

double TrigInterp::derivative(double theta) const {
    const int N = grid_.N;
    const int half = N / 2;
    const double t = wrap_2pi(theta);
    double acc = 0.0;
    for (int k = 1; k < half; ++k)
        acc += k * (sin_coef_[k] * std::cos(k * t) -
                    cos_coef_[k] * std::sin(k * t));
    acc -= 0.5 * half * cos_coef_[half] * std::sin(half * t);
    return acc;
}

double TrigInterp::derivative_at_node(int j) const {
    return derivative(grid_.theta(j));
}

}  // namespace rinf::mapspace
