#pragma once

#include <optional>

#include "wgtunnel/geometry.hpp"
#include "wgtunnel/modes.hpp"

namespace wgtunnel {

/// Trig product integrated over the narrower guide. The same closed form
/// serves the x axis (m, a, p, s) and the y axis (n, b, q, d).
enum class TrigProduct { CosCos, SinSin };

inline constexpr double kDegenerateTol = 1e-9;
inline constexpr double kConstraintTol = 1e-9;

/// Integral over [0, inner_len] of
///   cos(outer_index pi x / outer_len) cos(inner_index pi x / inner_len)   (CosCos)
///   sin(outer_index pi x / outer_len) sin(inner_index pi x / inner_len)   (SinSin)
///
/// Uses the closed form away from the matched-frequency condition
/// inner_index * outer_len == outer_index * inner_len, and the matched
/// limit (inner_len/2, or inner_len for the CosCos 0-0 pair, or 0 for SinSin
/// with a zero index) within degenerate_tol * outer_len * max(1, indices).
[[nodiscard]] double overlap_1d(TrigProduct kind, int outer_index, double outer_len,
                                int inner_index, double inner_len,
                                double degenerate_tol = kDegenerateTol);

/// Cross-section coupling between outer mode (m, n) and inner mode (p, q):
/// the cos-cos overlap on each axis divided by the inner mode's own norm
/// (inner_len/2, or inner_len for a zero index). Equals
///   4 m n a b s d (-1)^(p+q) sin(m s pi/a) sin(n d pi/b)
///     / (pi^2 (p^2 a^2 - m^2 s^2)(q^2 b^2 - n^2 d^2))
/// for nonzero indices, and stays finite for TE modes with a zero index.
[[nodiscard]] double gamma_coupling(int m, int n, int p, int q, const GuideGeometry& g,
                                    double degenerate_tol = kDegenerateTol);

/// Lambda = (k_perp,mn^2 / k_perp,pq^2) (h' / h); complex when h' = i kappa.
/// Throws Error(IncidentEvanescent) if h_outer is evanescent.
[[nodiscard]] cplx lambda_coupling(int m, int n, int p, int q, const GuideGeometry& g,
                                   const AxialWavenumber& h_outer,
                                   const AxialWavenumber& h_inner);

struct CouplingFactors {
    double gamma = 0.0;
    std::optional<cplx> lambda;  // TM only
};

struct ConstraintCheck {
    bool satisfied = false;
    double residual = 0.0;
};

/// |k_perp,mn^2 mu_r' - k_perp,pq^2 mu_r| / (k_perp,mn^2 mu_r')
[[nodiscard]] ConstraintCheck te_constraint(int m, int n, int p, int q, const GuideGeometry& g,
                                            double rel_tol = kConstraintTol);

/// |m b s q - n a d p| / (m b s q)
[[nodiscard]] ConstraintCheck tm_constraint(int m, int n, int p, int q, const GuideGeometry& g,
                                            double rel_tol = kConstraintTol);

}  // namespace wgtunnel
