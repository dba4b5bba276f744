#pragma once

#include <array>
#include <optional>

#include "wgtunnel/constants.hpp"
#include "wgtunnel/geometry.hpp"

namespace wgtunnel {

enum class Regime { Propagating, Evanescent };

[[nodiscard]] std::string to_string(Regime r);

/// Axial wavenumber of a guided mode: real h > 0 above cutoff, or h = i*kappa
/// with kappa > 0 below it (so exp(i h z) decays along +z).
class AxialWavenumber {
public:
    [[nodiscard]] static AxialWavenumber propagating(double h);
    [[nodiscard]] static AxialWavenumber evanescent(double kappa);

    [[nodiscard]] Regime regime() const noexcept { return regime_; }
    [[nodiscard]] bool is_propagating() const noexcept { return regime_ == Regime::Propagating; }
    /// h for propagating, kappa for evanescent.
    [[nodiscard]] double magnitude() const noexcept { return magnitude_; }
    /// h, or i*kappa.
    [[nodiscard]] cplx value() const noexcept {
        return is_propagating() ? cplx(magnitude_, 0.0) : cplx(0.0, magnitude_);
    }

private:
    AxialWavenumber(Regime r, double mag) : regime_(r), magnitude_(mag) {}
    Regime regime_;
    double magnitude_;
};

enum class Direction { Forward, Backward };  // +z, -z

struct Medium {
    double eps_r = 1.0;
    double mu_r = 1.0;
};

inline constexpr double kCutoffRelTol = 1e-12;

/// (m pi / width)^2 + (n pi / height)^2
[[nodiscard]] double cutoff_wavenumber_sq(const ModeIndex& idx, double width, double height);

/// Returns nullopt when |eps_r mu_r omega^2/c^2 - k_perp^2| is within
/// rel_tol of eps_r mu_r omega^2/c^2, where the transmission formulas are
/// singular.
[[nodiscard]] std::optional<AxialWavenumber> try_axial_wavenumber(
    double omega, const ModeIndex& idx, double width, double height, double eps_r, double mu_r,
    double rel_tol = kCutoffRelTol);

/// As try_axial_wavenumber but throws Error(AtCutoff) at the boundary.
[[nodiscard]] AxialWavenumber axial_wavenumber(double omega, const ModeIndex& idx, double width,
                                               double height, double eps_r, double mu_r,
                                               double rel_tol = kCutoffRelTol);

struct FieldSample {
    cplx ex{}, ey{}, ez{};
    cplx hx{}, hy{}, hz{};
};

struct FieldGradient {
    FieldSample dx, dy, dz, dt;
};

/// One TE_mn or TM_mn eigenmode of a rectangular guide, including the
/// exp[-i(omega t - h z)] dependence. Amplitude is H0 for TE, E0 for TM.
///
/// Each of the six components is coef * X(kx x) * Y(ky y) * phase with X, Y
/// either cos or sin, so values and exact derivatives share one table.
class ModeField {
public:
    ModeField(const ModeIndex& idx, double width, double height, Medium medium, cplx amplitude,
              double omega, AxialWavenumber h, Direction direction = Direction::Forward);

    /// Throws Error(OutOfCrossSection) unless 0 <= x <= width, 0 <= y <= height.
    [[nodiscard]] FieldSample at(double x, double y, double z, double t) const;
    [[nodiscard]] FieldGradient gradient(double x, double y, double z, double t) const;

    [[nodiscard]] const ModeIndex& index() const noexcept { return idx_; }
    [[nodiscard]] double width() const noexcept { return width_; }
    [[nodiscard]] double height() const noexcept { return height_; }
    [[nodiscard]] const Medium& medium() const noexcept { return medium_; }
    [[nodiscard]] double omega() const noexcept { return omega_; }
    [[nodiscard]] const AxialWavenumber& axial() const noexcept { return h_; }
    [[nodiscard]] Direction direction() const noexcept { return direction_; }
    [[nodiscard]] double k_perp_sq() const noexcept { return kx_ * kx_ + ky_ * ky_; }
    /// Axial wavenumber with the propagation sign applied.
    [[nodiscard]] cplx signed_h() const noexcept { return hs_; }
    /// Largest coefficient magnitude across the six components.
    [[nodiscard]] double peak_coefficient() const noexcept;

private:
    struct Term {
        cplx coef;
        bool x_cos;
        bool y_cos;
    };

    void check_point(double x, double y) const;

    ModeIndex idx_;
    double width_;
    double height_;
    Medium medium_;
    double omega_;
    AxialWavenumber h_;
    Direction direction_;
    double kx_;
    double ky_;
    cplx hs_;
    std::array<Term, 6> terms_{};
};

[[nodiscard]] FieldSample eval_te_field(const ModeIndex& idx, double width, double height,
                                        double mu_r, cplx h0, double omega, AxialWavenumber h,
                                        Direction direction, double x, double y, double z,
                                        double t);

[[nodiscard]] FieldSample eval_tm_field(const ModeIndex& idx, double width, double height,
                                        double eps_r, cplx e0, double omega, AxialWavenumber h,
                                        Direction direction, double x, double y, double z,
                                        double t);

}  // namespace wgtunnel
