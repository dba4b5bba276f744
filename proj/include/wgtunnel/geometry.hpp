#pragma once

#include <optional>
#include <string>

#include "wgtunnel/error.hpp"

namespace wgtunnel {

/// Three-segment rectangular guide. Segments z < 0 and z > L share the
/// outer a x b cross section and (eps_r, mu_r); the 0 < z < L section is
/// s x d filled with (eps_r_inner, mu_r_inner). All lengths in metres.
struct GuideGeometry {
    double a = 0.0;
    double b = 0.0;
    double s = 0.0;
    double d = 0.0;
    double length = 0.0;
    double eps_r = 1.0;
    double mu_r = 1.0;
    double eps_r_inner = 1.0;
    double mu_r_inner = 1.0;
};

enum class Polarization { TE, TM };

[[nodiscard]] std::string to_string(Polarization p);

struct ModeIndex {
    Polarization polarization = Polarization::TE;
    int m = 0;
    int n = 0;

    friend bool operator==(const ModeIndex&, const ModeIndex&) = default;
};

[[nodiscard]] constexpr ModeIndex te(int m, int n) { return {Polarization::TE, m, n}; }
[[nodiscard]] constexpr ModeIndex tm(int m, int n) { return {Polarization::TM, m, n}; }

[[nodiscard]] std::string to_string(const ModeIndex& idx);

// Checks run in a fixed order (NonPositive, DimensionOrder, NonNesting), so
// each input maps to exactly one outcome. Non-finite values count as
// NonPositive.
[[nodiscard]] std::optional<ErrorKind> geometry_error(const GuideGeometry& g) noexcept;
void validate_geometry(const GuideGeometry& g);

// TE needs (m, n) != (0, 0); TM needs m, n >= 1. Negative indices are invalid
// for both.
[[nodiscard]] std::optional<ErrorKind> mode_error(const ModeIndex& idx) noexcept;
void validate_mode(const ModeIndex& idx);

}  // namespace wgtunnel
