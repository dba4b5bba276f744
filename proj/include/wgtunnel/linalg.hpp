#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <utility>

#include "wgtunnel/error.hpp"

namespace wgtunnel {

/// Dense Gaussian elimination with partial (row) pivoting for small complex
/// systems. Throws Error(SingularSystem) when a pivot vanishes relative to
/// its original column scale.
template <std::size_t N>
std::array<std::complex<double>, N> solve_dense(
    std::array<std::array<std::complex<double>, N>, N> a, std::array<std::complex<double>, N> b) {
    std::array<double, N> col_scale{};
    for (std::size_t j = 0; j < N; ++j) {
        for (std::size_t i = 0; i < N; ++i) col_scale[j] = std::max(col_scale[j], std::abs(a[i][j]));
        if (!(col_scale[j] > 0.0) || !std::isfinite(col_scale[j])) {
            throw Error(ErrorKind::SingularSystem, "zero or non-finite column");
        }
    }

    constexpr double kPivotTol = 64.0 * std::numeric_limits<double>::epsilon();
    for (std::size_t k = 0; k < N; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < N; ++i) {
            if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
        }
        if (std::abs(a[piv][k]) <= kPivotTol * col_scale[k]) {
            throw Error(ErrorKind::SingularSystem, "pivot below tolerance");
        }
        if (piv != k) {
            std::swap(a[piv], a[k]);
            std::swap(b[piv], b[k]);
        }
        for (std::size_t i = k + 1; i < N; ++i) {
            const auto f = a[i][k] / a[k][k];
            a[i][k] = 0.0;
            for (std::size_t j = k + 1; j < N; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }

    std::array<std::complex<double>, N> x{};
    for (std::size_t k = N; k-- > 0;) {
        auto acc = b[k];
        for (std::size_t j = k + 1; j < N; ++j) acc -= a[k][j] * x[j];
        x[k] = acc / a[k][k];
    }
    return x;
}

}  // namespace wgtunnel
