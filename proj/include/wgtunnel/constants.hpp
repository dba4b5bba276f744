#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace wgtunnel {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// SI vacuum constants. eps_0 is derived from c and mu_0 so that
/// c = 1/sqrt(eps_0 mu_0) holds to rounding.
struct PhysicalConstants {
    double c;      // m/s
    double mu_0;   // H/m
    double eps_0;  // F/m

    /// Phase speed in a medium, c / sqrt(eps_r mu_r).
    [[nodiscard]] double medium_speed(double eps_r, double mu_r) const {
        return c / std::sqrt(eps_r * mu_r);
    }
};

inline constexpr double kSpeedOfLight = 299792458.0;
inline constexpr double kVacuumPermeability = 1.25663706212e-6;  // CODATA 2018

inline constexpr PhysicalConstants kSI{
    kSpeedOfLight,
    kVacuumPermeability,
    1.0 / (kVacuumPermeability * kSpeedOfLight * kSpeedOfLight),
};

}  // namespace wgtunnel
