#include "wgtunnel/modes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wgtunnel {

namespace {

constexpr cplx kI{0.0, 1.0};

void require_positive(double v, const char* what) {
    if (!std::isfinite(v) || !(v > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be finite and > 0");
    }
}

}  // namespace

std::string to_string(Regime r) {
    return r == Regime::Propagating ? "propagating" : "evanescent";
}

AxialWavenumber AxialWavenumber::propagating(double h) {
    require_positive(h, "propagating h");
    return {Regime::Propagating, h};
}

AxialWavenumber AxialWavenumber::evanescent(double kappa) {
    require_positive(kappa, "evanescent kappa");
    return {Regime::Evanescent, kappa};
}

double cutoff_wavenumber_sq(const ModeIndex& idx, double width, double height) {
    validate_mode(idx);
    require_positive(width, "width");
    require_positive(height, "height");
    const double kx = idx.m * kPi / width;
    const double ky = idx.n * kPi / height;
    return kx * kx + ky * ky;
}

std::optional<AxialWavenumber> try_axial_wavenumber(double omega, const ModeIndex& idx,
                                                    double width, double height, double eps_r,
                                                    double mu_r, double rel_tol) {
    require_positive(omega, "omega");
    require_positive(eps_r, "eps_r");
    require_positive(mu_r, "mu_r");
    const double k_medium_sq = eps_r * mu_r * omega * omega / (kSI.c * kSI.c);
    const double radicand = k_medium_sq - cutoff_wavenumber_sq(idx, width, height);
    if (std::abs(radicand) <= rel_tol * k_medium_sq) return std::nullopt;
    if (radicand > 0.0) return AxialWavenumber::propagating(std::sqrt(radicand));
    return AxialWavenumber::evanescent(std::sqrt(-radicand));
}

AxialWavenumber axial_wavenumber(double omega, const ModeIndex& idx, double width, double height,
                                 double eps_r, double mu_r, double rel_tol) {
    auto h = try_axial_wavenumber(omega, idx, width, height, eps_r, mu_r, rel_tol);
    if (!h) {
        std::ostringstream msg;
        msg << to_string(idx) << " at omega=" << omega << " rad/s in " << width << " x "
            << height << " m";
        throw Error(ErrorKind::AtCutoff, msg.str());
    }
    return *h;
}

ModeField::ModeField(const ModeIndex& idx, double width, double height, Medium medium,
                     cplx amplitude, double omega, AxialWavenumber h, Direction direction)
    : idx_(idx),
      width_(width),
      height_(height),
      medium_(medium),
      omega_(omega),
      h_(h),
      direction_(direction) {
    validate_mode(idx);
    require_positive(width, "width");
    require_positive(height, "height");
    require_positive(omega, "omega");
    require_positive(medium.eps_r, "eps_r");
    require_positive(medium.mu_r, "mu_r");

    kx_ = idx.m * kPi / width;
    ky_ = idx.n * kPi / height;
    hs_ = direction == Direction::Forward ? h.value() : -h.value();
    const double kperp2 = kx_ * kx_ + ky_ * ky_;

    if (idx.polarization == Polarization::TE) {
        const double wmu = omega * kSI.mu_0 * medium.mu_r;
        terms_ = {{
            {-kI * wmu / kperp2 * ky_ * amplitude, true, false},   // Ex
            {kI * wmu / kperp2 * kx_ * amplitude, false, true},    // Ey
            {0.0, true, true},                                     // Ez
            {-kI * hs_ / kperp2 * kx_ * amplitude, false, true},   // Hx
            {-kI * hs_ / kperp2 * ky_ * amplitude, true, false},   // Hy
            {amplitude, true, true},                               // Hz
        }};
    } else {
        const double weps = omega * kSI.eps_0 * medium.eps_r;
        terms_ = {{
            {kI * hs_ / kperp2 * kx_ * amplitude, true, false},    // Ex
            {kI * hs_ / kperp2 * ky_ * amplitude, false, true},    // Ey
            {amplitude, false, false},                             // Ez
            {-kI * weps / kperp2 * ky_ * amplitude, false, true},  // Hx
            {kI * weps / kperp2 * kx_ * amplitude, true, false},   // Hy
            {0.0, true, true},                                     // Hz
        }};
    }
}

double ModeField::peak_coefficient() const noexcept {
    double peak = 0.0;
    for (const auto& t : terms_) peak = std::max(peak, std::abs(t.coef));
    return peak;
}

void ModeField::check_point(double x, double y) const {
    if (!(x >= 0.0 && x <= width_ && y >= 0.0 && y <= height_)) {
        std::ostringstream msg;
        msg << "(" << x << ", " << y << ") outside [0," << width_ << "]x[0," << height_ << "]";
        throw Error(ErrorKind::OutOfCrossSection, msg.str());
    }
}

namespace {

FieldSample from_components(const std::array<cplx, 6>& c) {
    return {c[0], c[1], c[2], c[3], c[4], c[5]};
}

}  // namespace

FieldSample ModeField::at(double x, double y, double z, double t) const {
    check_point(x, y);
    const double cx = std::cos(kx_ * x), sx = std::sin(kx_ * x);
    const double cy = std::cos(ky_ * y), sy = std::sin(ky_ * y);
    const cplx phase = std::exp(kI * (hs_ * z - omega_ * t));
    std::array<cplx, 6> out{};
    for (std::size_t k = 0; k < 6; ++k) {
        const auto& term = terms_[k];
        out[k] = term.coef * (term.x_cos ? cx : sx) * (term.y_cos ? cy : sy) * phase;
    }
    return from_components(out);
}

FieldGradient ModeField::gradient(double x, double y, double z, double t) const {
    check_point(x, y);
    const double cx = std::cos(kx_ * x), sx = std::sin(kx_ * x);
    const double cy = std::cos(ky_ * y), sy = std::sin(ky_ * y);
    const cplx phase = std::exp(kI * (hs_ * z - omega_ * t));
    std::array<cplx, 6> dx{}, dy{}, dz{}, dt{};
    for (std::size_t k = 0; k < 6; ++k) {
        const auto& term = terms_[k];
        const double xv = term.x_cos ? cx : sx;
        const double yv = term.y_cos ? cy : sy;
        // d/dx cos = -k sin, d/dx sin = k cos
        const double dxv = term.x_cos ? -kx_ * sx : kx_ * cx;
        const double dyv = term.y_cos ? -ky_ * sy : ky_ * cy;
        const cplx value = term.coef * xv * yv * phase;
        dx[k] = term.coef * dxv * yv * phase;
        dy[k] = term.coef * xv * dyv * phase;
        dz[k] = kI * hs_ * value;
        dt[k] = -kI * omega_ * value;
    }
    return {from_components(dx), from_components(dy), from_components(dz), from_components(dt)};
}

FieldSample eval_te_field(const ModeIndex& idx, double width, double height, double mu_r,
                          cplx h0, double omega, AxialWavenumber h, Direction direction, double x,
                          double y, double z, double t) {
    if (idx.polarization != Polarization::TE) {
        throw Error(ErrorKind::InvalidArgument, "eval_te_field needs a TE index");
    }
    return ModeField(idx, width, height, Medium{1.0, mu_r}, h0, omega, h, direction)
        .at(x, y, z, t);
}

FieldSample eval_tm_field(const ModeIndex& idx, double width, double height, double eps_r,
                          cplx e0, double omega, AxialWavenumber h, Direction direction, double x,
                          double y, double z, double t) {
    if (idx.polarization != Polarization::TM) {
        throw Error(ErrorKind::InvalidArgument, "eval_tm_field needs a TM index");
    }
    return ModeField(idx, width, height, Medium{eps_r, 1.0}, e0, omega, h, direction)
        .at(x, y, z, t);
}

}  // namespace wgtunnel
