#pragma once

// Closed-form transmissivities for the two textbook configurations, written
// directly in omega, c and the guide dimensions. They share no code with
// scatter() and serve as its reference.

namespace wgtunnel::reference {

// TE10 -> TE10 with a = s, mu_r = eps_r' = mu_r' = 1, eps_r > 1.

/// omega/c > pi/a (inner section above cutoff).
[[nodiscard]] double te10_transmission_propagating(double omega, double a, double length,
                                                   double eps_r);
/// omega/c < pi/a < sqrt(eps_r) omega/c.
[[nodiscard]] double te10_transmission_evanescent(double omega, double a, double length,
                                                  double eps_r);

// TM11 -> TM11 with a = 2s, b = 2d, eps_r' = mu_r' = 1.

/// 4 (eps_mu omega^2 - c^2 pi^2/a^2 - c^2 pi^2/b^2)(omega^2 - 4 c^2 pi^2/a^2 - 4 c^2 pi^2/b^2),
/// i.e. 4 h^2 h'^2 c^4. Negative below the inner cutoff.
[[nodiscard]] double tm11_weight(double omega, double a, double b, double eps_mu);

/// omega^2/c^2 > (2pi/a)^2 + (2pi/b)^2.
[[nodiscard]] double tm11_transmission_propagating(double omega, double a, double b,
                                                   double length, double eps_mu);
/// Outer TM11 propagating, inner below cutoff.
[[nodiscard]] double tm11_transmission_evanescent(double omega, double a, double b, double length,
                                                  double eps_mu);

}  // namespace wgtunnel::reference
