#include "wgtunnel/geometry.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace wgtunnel {

std::string to_string(Polarization p) { return p == Polarization::TE ? "TE" : "TM"; }

std::string to_string(const ModeIndex& idx) {
    return to_string(idx.polarization) + "(" + std::to_string(idx.m) + "," +
           std::to_string(idx.n) + ")";
}

std::optional<ErrorKind> geometry_error(const GuideGeometry& g) noexcept {
    const std::array<double, 9> positive{g.a, g.b, g.s, g.d, g.length,
                                         g.eps_r, g.mu_r, g.eps_r_inner, g.mu_r_inner};
    for (double v : positive) {
        if (!std::isfinite(v) || !(v > 0.0)) return ErrorKind::NonPositive;
    }
    if (g.a < g.b || g.s < g.d) return ErrorKind::DimensionOrder;
    if (g.s > g.a || g.d > g.b) return ErrorKind::NonNesting;
    return std::nullopt;
}

void validate_geometry(const GuideGeometry& g) {
    const auto err = geometry_error(g);
    if (!err) return;
    std::ostringstream msg;
    msg << "a=" << g.a << " b=" << g.b << " s=" << g.s << " d=" << g.d << " L=" << g.length
        << " eps_r=" << g.eps_r << " mu_r=" << g.mu_r << " eps_r'=" << g.eps_r_inner
        << " mu_r'=" << g.mu_r_inner;
    throw Error(*err, msg.str());
}

std::optional<ErrorKind> mode_error(const ModeIndex& idx) noexcept {
    if (idx.polarization == Polarization::TE) {
        if (idx.m < 0 || idx.n < 0 || (idx.m == 0 && idx.n == 0)) return ErrorKind::InvalidTEIndex;
        return std::nullopt;
    }
    if (idx.m < 1 || idx.n < 1) return ErrorKind::InvalidTMIndex;
    return std::nullopt;
}

void validate_mode(const ModeIndex& idx) {
    if (const auto err = mode_error(idx)) throw Error(*err, to_string(idx));
}

}  // namespace wgtunnel
