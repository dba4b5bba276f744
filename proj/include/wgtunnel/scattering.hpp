#pragma once

#include "wgtunnel/coupling.hpp"
#include "wgtunnel/geometry.hpp"
#include "wgtunnel/modes.hpp"

namespace wgtunnel {

/// Amplitudes of the three-region solution: a1 incident and a2 reflected
/// (z < 0), b1/b2 forward/backward inside 0 < z < L, c transmitted (z > L).
struct ScatteringCoefficients {
    cplx a1{};
    cplx a2{};
    cplx b1{};
    cplx b2{};
    cplx c{};
};

struct TransmissionResult {
    double T = 0.0;
    double R = 0.0;
    Regime regime = Regime::Propagating;
};

/// Closed-form solution of the four matching equations
///   a1 + a2 = b1 + b2
///   h (a1 - a2) = h' (b1 - b2)
///   c e^{ihL} = b1 e^{ih'L} + b2 e^{-ih'L}
///   h c e^{ihL} = h' (b1 e^{ih'L} - b2 e^{-ih'L})
/// in the normalized (coupling-free) variables, with h' = i kappa below
/// cutoff. Numerator and denominator are scaled by e^{ih'L} so that nothing
/// grows like e^{kappa L}.
[[nodiscard]] ScatteringCoefficients closed_form_coefficients(double h,
                                                              const AxialWavenumber& h_inner,
                                                              double length, cplx a1 = 1.0);

/// Same system assembled literally as a 4x4 matrix in (a2, b1, b2, c e^{ihL})
/// with a1 normalized to 1, solved by Gaussian elimination with partial
/// pivoting and rescaled by a1. Independent check on closed_form_coefficients.
[[nodiscard]] ScatteringCoefficients solve_matching_system(double h,
                                                           const AxialWavenumber& h_inner,
                                                           double length, cplx a1 = 1.0);

/// T and R of the three-region problem. The smaller of the two is computed
/// from the shared denominator and the other as its complement, so T + R == 1.
/// Below cutoff sinh^2(kappa L) is carried as (1 - e^{-2 kappa L})^2 / (4 e^{-2 kappa L}).
[[nodiscard]] TransmissionResult transmission_reflection(double h, const AxialWavenumber& h_inner,
                                                         double length);

struct ScatterOptions {
    bool allow_constraint_violation = false;
    cplx amplitude = 1.0;
    double constraint_tol = kConstraintTol;
};

struct ScatterResult {
    TransmissionResult transmission;
    AxialWavenumber h_outer;
    AxialWavenumber h_inner;
    CouplingFactors coupling;
    /// Primed amplitudes: a' = Gamma a, c' = Gamma c, and for TM b' = Lambda b.
    ScatteringCoefficients normalized;
    /// Physical amplitudes for incident amplitude options.amplitude.
    ScatteringCoefficients physical;
    double constraint_residual = 0.0;
    /// False when the matching constraint failed and the caller allowed it.
    bool within_validity = true;
};

/// End-to-end scattering of one incident outer mode through one inner mode.
/// Errors: PolarizationMismatch, IncidentCutOff, AtCutoff (inner),
/// ConstraintViolated (unless allowed), plus geometry/mode validation.
[[nodiscard]] ScatterResult scatter(const ModeIndex& incident, const ModeIndex& inner,
                                    const GuideGeometry& g, double omega,
                                    const ScatterOptions& opts = {});

/// Time-averaged axial Poynting flux density 0.5 Re(Ex Hy* - Ey Hx*).
[[nodiscard]] double poynting_z(const FieldSample& f);

}  // namespace wgtunnel
