#pragma once

#include <functional>
#include <type_traits>
#include <vector>

#include "wgtunnel/constants.hpp"

namespace wgtunnel {

/// n-point Gauss-Legendre nodes and weights on [-1, 1].
class GaussLegendre {
public:
    explicit GaussLegendre(int order);

    [[nodiscard]] int order() const noexcept { return static_cast<int>(nodes_.size()); }
    [[nodiscard]] const std::vector<double>& nodes() const noexcept { return nodes_; }
    [[nodiscard]] const std::vector<double>& weights() const noexcept { return weights_; }

    template <class F>
    [[nodiscard]] double integrate(F&& f, double lo, double hi) const {
        const double half = 0.5 * (hi - lo);
        const double mid = 0.5 * (hi + lo);
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes_.size(); ++i) acc += weights_[i] * f(mid + half * nodes_[i]);
        return half * acc;
    }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

/// Tensor-product Gauss-Legendre rule mapped onto [x0, x1] x [y0, y1].
/// Exact for polynomials of degree <= 2*order - 1 in each variable.
struct QuadratureRule {
    std::vector<double> nodes_x;
    std::vector<double> weights_x;
    std::vector<double> nodes_y;
    std::vector<double> weights_y;
    int order = 0;
};

inline constexpr int kDefaultQuadOrder = 64;

[[nodiscard]] QuadratureRule make_rule(int order, double x0, double x1, double y0, double y1);

using RealField2D = std::function<double(double, double)>;
using ComplexField2D = std::function<cplx(double, double)>;

namespace detail {
double quad2d_real(const RealField2D& f, const QuadratureRule& rule, int workers);
cplx quad2d_complex(const ComplexField2D& f, const QuadratureRule& rule, int workers);
}  // namespace detail

// Both kernels sum each x-row into its own slot and then add the rows in
// order, so the OpenMP version is bitwise identical to the serial one.
// The integrand must be safe to call concurrently and must not throw.

/// Serial reference.
template <class F>
[[nodiscard]] auto quad2d(F&& f, const QuadratureRule& rule) {
    using R = std::invoke_result_t<F&, double, double>;
    if constexpr (std::is_convertible_v<R, double> && !std::is_same_v<std::decay_t<R>, cplx>) {
        return detail::quad2d_real(RealField2D(std::forward<F>(f)), rule, 1);
    } else {
        return detail::quad2d_complex(ComplexField2D(std::forward<F>(f)), rule, 1);
    }
}

/// OpenMP over x-rows; workers <= 0 uses the OpenMP default.
template <class F>
[[nodiscard]] auto quad2d_parallel(F&& f, const QuadratureRule& rule, int workers = 0) {
    using R = std::invoke_result_t<F&, double, double>;
    if constexpr (std::is_convertible_v<R, double> && !std::is_same_v<std::decay_t<R>, cplx>) {
        return detail::quad2d_real(RealField2D(std::forward<F>(f)), rule, workers <= 0 ? 0 : workers);
    } else {
        return detail::quad2d_complex(ComplexField2D(std::forward<F>(f)), rule,
                                      workers <= 0 ? 0 : workers);
    }
}

}  // namespace wgtunnel
