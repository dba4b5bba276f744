#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wgtunnel/geometry.hpp"

namespace wgtunnel {

enum class GridKind { Linear, Log };

struct SweepJob {
    GuideGeometry geometry;
    ModeIndex incident = te(1, 0);
    ModeIndex inner = te(1, 0);
    double omega_min = 0.0;  // rad/s
    double omega_max = 0.0;  // rad/s
    int points = 2;
    GridKind grid = GridKind::Linear;
    bool allow_constraint_violation = false;
};

/// Row classification. Skipped: incident mode cut off in the outer guide.
/// AtCutoff: inner mode at its cutoff, where T and R are undefined.
enum class RowStatus { Propagating, Evanescent, AtCutoff, Skipped };

[[nodiscard]] std::string_view to_string(RowStatus s) noexcept;
[[nodiscard]] std::optional<RowStatus> parse_row_status(std::string_view s) noexcept;

struct SweepRow {
    double omega = 0.0;
    RowStatus regime = RowStatus::Skipped;
    std::optional<double> h_outer;
    std::optional<double> h_inner;
    std::optional<double> kappa;
    std::optional<double> T;
    std::optional<double> R;
    std::optional<double> gamma;
    std::optional<double> lambda_mag;  // TM only

    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// Field-level problems with a job; empty when the job can run.
[[nodiscard]] std::vector<std::string> job_diagnostics(const SweepJob& job);
/// Throws Error(ConfigInvalid) listing every diagnostic.
void validate_job(const SweepJob& job);

/// Grid points, first and last exactly omega_min and omega_max.
[[nodiscard]] std::vector<double> frequency_grid(const SweepJob& job);

[[nodiscard]] SweepRow evaluate_point(const SweepJob& job, double omega);

/// Throws Error(InvariantViolation) naming the frequency unless T + R = 1
/// and both lie in [0, 1].
void check_row(const SweepRow& row);

/// Serial reference kernel.
[[nodiscard]] std::vector<SweepRow> run_sweep_serial(const SweepJob& job);
/// OpenMP kernel; rows come back in grid order whatever the worker count.
[[nodiscard]] std::vector<SweepRow> run_sweep_parallel(const SweepJob& job, int workers = 0);
/// workers == 1 runs the serial kernel, anything else the OpenMP one.
[[nodiscard]] std::vector<SweepRow> run_sweep(const SweepJob& job, int workers = 1);

}  // namespace wgtunnel
