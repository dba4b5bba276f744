#pragma once

#include <filesystem>
#include <string_view>

#include "wgtunnel/geometry.hpp"
#include "wgtunnel/sweep.hpp"

namespace wgtunnel {

// Job documents are JSON with SI units spelled out in the key names:
//
//   {
//     "geometry": {"a_m": .., "b_m": .., "s_m": .., "d_m": .., "L_m": ..,
//                  "eps_r": 1, "mu_r": 1, "eps_r_inner": 1, "mu_r_inner": 1},
//     "incident": {"polarization": "TE", "m": 1, "n": 0},
//     "inner":    {"polarization": "TE", "m": 1, "n": 0},
//     "omega_min_rad_per_s": .., "omega_max_rad_per_s": .., "points": 200,
//     "grid": "linear", "allow_constraint_violation": false
//   }
//
// Lengths and the frequency range are required. Material constants default
// to 1, grid to "linear" and allow_constraint_violation to false. Unknown
// keys are rejected. Every problem found is reported in a single
// Error(ConfigInvalid).

[[nodiscard]] SweepJob parse_job(std::string_view text);
[[nodiscard]] SweepJob load_job(const std::filesystem::path& path);

/// Accepts either the bare geometry object or a document holding one under
/// "geometry" (so a job file works too). Lengths must be consistent.
[[nodiscard]] GuideGeometry parse_geometry(std::string_view text);
[[nodiscard]] GuideGeometry load_geometry(const std::filesystem::path& path);

}  // namespace wgtunnel
