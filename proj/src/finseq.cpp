#include "rinf/finseq.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

namespace rinf {

namespace {
void canonicalize(std::vector<double>& v) {
    while (!v.empty() && v.back() == 0.0) v.pop_back();
}
}  // namespace

FinSeq::FinSeq(std::vector<double> entries) : entries_(std::move(entries)) {
    canonicalize(entries_);
}

FinSeq FinSeq::unit(std::size_t i) {
    std::vector<double> e(i + 1, 0.0);
    e[i] = 1.0;
    return FinSeq(std::move(e));
}

FinSeq add(const FinSeq& x, const FinSeq& y) {
    std::vector<double> out(std::max(x.size(), y.size()), 0.0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] + y[i];
    return FinSeq(std::move(out));
}

FinSeq scale(double lambda, const FinSeq& x) {
    if (lambda == 0.0) return FinSeq{};
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = lambda * x[i];
    return FinSeq(std::move(out));
}

double weak_inner(const FinSeq& x, const FinSeq& y) {
    const std::size_t n = std::min(x.size(), y.size());
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
}

double weak_norm(const FinSeq& x) { return std::sqrt(weak_inner(x, x)); }

double sup_norm(const FinSeq& x) {
    double m = 0.0;
    for (double v : x.coeffs()) m = std::max(m, std::abs(v));
    return m;
}

std::size_t support(const FinSeq& x) { return x.size(); }

FinSeq trim(const FinSeq& x, double eps) {
    std::vector<double> out(x.coeffs().begin(), x.coeffs().end());
    for (double& v : out)
        if (std::abs(v) <= eps) v = 0.0;
    return FinSeq(std::move(out));
}

bool approx_equal(const FinSeq& x, const FinSeq& y, double tol) {
    const std::size_t n = std::max(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(x[i] - y[i]) > tol) return false;
    return true;
}

FinSeq operator-(const FinSeq& x, const FinSeq& y) {
    std::vector<double> out(std::max(x.size(), y.size()), 0.0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] - y[i];
    return FinSeq(std::move(out));
}

void to_json(nlohmann::json& j, const FinSeq& x) {
    j = nlohmann::json::array();
    for (double v : x.coeffs()) j.push_back(v);
}

void from_json(const nlohmann::json& j, FinSeq& x) {
    x = FinSeq(j.get<std::vector<double>>());
}

}  // namespace rinf
