#pragma once

#include <string>
#include <vector>

#include "wgtunnel/quadrature.hpp"

namespace wgtunnel {

enum class CheckLevel { Fast, Full };

struct CheckOptions {
    CheckLevel level = CheckLevel::Fast;
    /// Gauss-Legendre order for the quadrature-backed suites.
    int quad_order = kDefaultQuadOrder;
};

struct SuiteResult {
    std::string name;
    bool passed = false;
    double worst = 0.0;      // worst residual seen
    double tolerance = 0.0;  // passed iff worst <= tolerance
    std::string detail;      // where the worst residual occurred
};

struct CheckReport {
    std::vector<SuiteResult> suites;

    [[nodiscard]] bool all_passed() const noexcept;
};

/// Runs every invariant suite. Failures are report content, never thrown.
/// Fast uses fewer random draws and grid points than Full; both run the
/// same suites.
[[nodiscard]] CheckReport run_checks(const CheckOptions& opts = {});

/// One line per suite: PASS/FAIL, name, worst residual, tolerance, detail.
[[nodiscard]] std::string format_report(const CheckReport& report);

}  // namespace wgtunnel
