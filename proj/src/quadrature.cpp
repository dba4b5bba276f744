#include "wgtunnel/quadrature.hpp"

#include <cmath>
#include <omp.h>

#include "wgtunnel/error.hpp"

namespace wgtunnel {

GaussLegendre::GaussLegendre(int order) {
    if (order < 1) throw Error(ErrorKind::InvalidArgument, "quadrature order must be >= 1");
    const auto n = static_cast<std::size_t>(order);
    nodes_.assign(n, 0.0);
    weights_.assign(n, 0.0);
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(kPi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (std::size_t j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / static_cast<double>(j);
            }
            dp = static_cast<double>(n) * (z * p1 - p2) / (z * z - 1.0);
            const double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        nodes_[i] = -z;
        nodes_[n - 1 - i] = z;
        weights_[i] = weights_[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
}

QuadratureRule make_rule(int order, double x0, double x1, double y0, double y1) {
    const GaussLegendre gl(order);
    QuadratureRule rule;
    rule.order = order;
    auto map = [&](double lo, double hi, std::vector<double>& xs, std::vector<double>& ws) {
        const double half = 0.5 * (hi - lo);
        const double mid = 0.5 * (hi + lo);
        xs.resize(gl.nodes().size());
        ws.resize(gl.nodes().size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            xs[i] = mid + half * gl.nodes()[i];
            ws[i] = half * gl.weights()[i];
        }
    };
    map(x0, x1, rule.nodes_x, rule.weights_x);
    map(y0, y1, rule.nodes_y, rule.weights_y);
    return rule;
}

namespace {

template <class T, class F>
T quad2d_rows(const F& f, const QuadratureRule& rule, int workers) {
    const auto nx = static_cast<std::ptrdiff_t>(rule.nodes_x.size());
    const std::size_t ny = rule.nodes_y.size();
    std::vector<T> rows(rule.nodes_x.size(), T{});

    auto row = [&](std::ptrdiff_t i) {
        const double x = rule.nodes_x[static_cast<std::size_t>(i)];
        T acc{};
        for (std::size_t j = 0; j < ny; ++j) acc += rule.weights_y[j] * f(x, rule.nodes_y[j]);
        rows[static_cast<std::size_t>(i)] = acc;
    };

    if (workers == 1) {
        for (std::ptrdiff_t i = 0; i < nx; ++i) row(i);
    } else {
        const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
        for (std::ptrdiff_t i = 0; i < nx; ++i) row(i);
    }

    T total{};
    for (std::size_t i = 0; i < rows.size(); ++i) total += rule.weights_x[i] * rows[i];
    return total;
}

}  // namespace

namespace detail {

double quad2d_real(const RealField2D& f, const QuadratureRule& rule, int workers) {
    return quad2d_rows<double>(f, rule, workers);
}

cplx quad2d_complex(const ComplexField2D& f, const QuadratureRule& rule, int workers) {
    return quad2d_rows<cplx>(f, rule, workers);
}

}  // namespace detail

}  // namespace wgtunnel
