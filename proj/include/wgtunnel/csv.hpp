#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "wgtunnel/sweep.hpp"

namespace wgtunnel {

inline constexpr std::string_view kSweepCsvHeader =
    "omega,regime,h_outer,h_inner,kappa,T,R,gamma,lambda_mag";

/// Shortest decimal that parses back to the same double.
[[nodiscard]] std::string format_double(double v);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
[[nodiscard]] std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Inverse of sweep_csv. Throws Error(ConfigInvalid) with the line number on
/// malformed input.
[[nodiscard]] std::vector<SweepRow> parse_sweep_csv(std::string_view text);

}  // namespace wgtunnel
