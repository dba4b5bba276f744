#pragma once

#include <array>

#include "wgtunnel/modes.hpp"

namespace wgtunnel {

using Matrix6 = std::array<std::array<cplx, 6>, 6>;
using Matrix3 = std::array<std::array<cplx, 3>, 3>;

/// Six-component field spinor psi = (sqrt(eps) E, i sqrt(mu) H) / sqrt(2),
/// with eps = eps_0 eps_r and mu = mu_0 mu_r.
struct Spinor6 {
    std::array<cplx, 6> psi{};
};

[[nodiscard]] Spinor6 pack_spinor(const FieldSample& f, double eps_r, double mu_r);
[[nodiscard]] FieldSample unpack_spinor(const Spinor6& s, double eps_r, double mu_r);

// tau_i has entries (tau_i)_jk = -i epsilon_ijk, so tau . grad V = i curl V.
[[nodiscard]] const Matrix3& tau(int i);
[[nodiscard]] const Matrix6& beta0();
/// beta^i = [[0, tau_i], [-tau_i, 0]], i = 1, 2, 3.
[[nodiscard]] const Matrix6& beta(int i);
/// alpha_i = beta^0 beta^i = [[0, tau_i], [tau_i, 0]].
[[nodiscard]] const Matrix6& alpha(int i);

enum class DerivativeMethod { Analytic, FiniteDifference };

struct DiracResidualOptions {
    DerivativeMethod method = DerivativeMethod::Analytic;
    /// Central-difference step in metres; <= 0 selects 1e-4 * min(width, height).
    double fd_step = 0.0;
    /// Sample grid is samples_per_axis^2 cross-section points times 3 z and 2 t values.
    int samples_per_axis = 6;
};

/// Residual of the constant-media Dirac-like form of the source-free Maxwell
/// equations, i beta^rho d_rho psi = 0 with x^0 = u t.
///
/// Returns max |beta^rho d_rho psi| over the samples divided by
/// max |psi| * max(omega/u, k_perp). For propagating modes k_perp < omega/u,
/// so the scale is omega/u.
[[nodiscard]] double dirac_residual(const ModeField& mode, const DiracResidualOptions& opts = {});

}  // namespace wgtunnel
