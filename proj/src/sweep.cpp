#include "wgtunnel/sweep.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <omp.h>
#include <sstream>

#include "wgtunnel/coupling.hpp"
#include "wgtunnel/modes.hpp"
#include "wgtunnel/scattering.hpp"

namespace wgtunnel {

std::string_view to_string(RowStatus s) noexcept {
    switch (s) {
        case RowStatus::Propagating: return "propagating";
        case RowStatus::Evanescent: return "evanescent";
        case RowStatus::AtCutoff: return "at_cutoff";
        case RowStatus::Skipped: return "skipped";
    }
    return "skipped";
}

std::optional<RowStatus> parse_row_status(std::string_view s) noexcept {
    for (auto st : {RowStatus::Propagating, RowStatus::Evanescent, RowStatus::AtCutoff,
                    RowStatus::Skipped}) {
        if (to_string(st) == s) return st;
    }
    return std::nullopt;
}

std::vector<std::string> job_diagnostics(const SweepJob& job) {
    std::vector<std::string> out;
    const auto& g = job.geometry;
    if (const auto err = geometry_error(g)) {
        std::string detail;
        switch (*err) {
            case ErrorKind::NonPositive: detail = "every length and material constant must be finite and > 0"; break;
            case ErrorKind::DimensionOrder: detail = "need a_m >= b_m and s_m >= d_m"; break;
            case ErrorKind::NonNesting: detail = "need s_m <= a_m and d_m <= b_m"; break;
            default: break;
        }
        out.push_back("geometry: " + std::string(to_string(*err)) + " (" + detail + ")");
    }
    const auto inc_err = mode_error(job.incident);
    const auto inn_err = mode_error(job.inner);
    if (inc_err) out.push_back("incident: " + std::string(to_string(*inc_err)) + " " + to_string(job.incident));
    if (inn_err) out.push_back("inner: " + std::string(to_string(*inn_err)) + " " + to_string(job.inner));
    if (!std::isfinite(job.omega_min) || !(job.omega_min > 0.0)) {
        out.emplace_back("omega_min_rad_per_s: must be finite and > 0");
    }
    if (!std::isfinite(job.omega_max) || !(job.omega_max > job.omega_min)) {
        out.emplace_back("omega_max_rad_per_s: must be finite and > omega_min_rad_per_s");
    }
    if (job.points < 2) out.emplace_back("points: must be >= 2");

    if (!inc_err && !inn_err) {
        if (job.incident.polarization != job.inner.polarization) {
            out.push_back("inner.polarization: PolarizationMismatch (" + to_string(job.incident) +
                          " cannot couple to " + to_string(job.inner) + ")");
        } else if (!geometry_error(g) && !job.allow_constraint_violation) {
            const auto& i = job.incident;
            const auto& p = job.inner;
            const auto check = i.polarization == Polarization::TE
                                   ? te_constraint(i.m, i.n, p.m, p.n, g)
                                   : tm_constraint(i.m, i.n, p.m, p.n, g);
            if (!check.satisfied) {
                std::ostringstream msg;
                msg << "inner: ConstraintViolated (residual " << check.residual
                    << "; set allow_constraint_violation to proceed)";
                out.push_back(msg.str());
            }
        }
    }
    return out;
}

void validate_job(const SweepJob& job) {
    const auto diags = job_diagnostics(job);
    if (diags.empty()) return;
    std::string msg;
    for (const auto& d : diags) {
        if (!msg.empty()) msg += "; ";
        msg += d;
    }
    throw Error(ErrorKind::ConfigInvalid, msg);
}

std::vector<double> frequency_grid(const SweepJob& job) {
    const auto n = static_cast<std::size_t>(job.points);
    std::vector<double> out(n);
    const double denom = static_cast<double>(n - 1);
    if (job.grid == GridKind::Linear) {
        const double step = (job.omega_max - job.omega_min) / denom;
        for (std::size_t i = 0; i < n; ++i) out[i] = job.omega_min + static_cast<double>(i) * step;
    } else {
        const double lo = std::log(job.omega_min);
        const double span = std::log(job.omega_max) - lo;
        for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(lo + span * static_cast<double>(i) / denom);
    }
    out.front() = job.omega_min;
    out.back() = job.omega_max;
    return out;
}

SweepRow evaluate_point(const SweepJob& job, double omega) {
    const auto& g = job.geometry;
    const auto& inc = job.incident;
    const auto& inn = job.inner;

    SweepRow row;
    row.omega = omega;
    row.gamma = gamma_coupling(inc.m, inc.n, inn.m, inn.n, g);

    const auto h_out = try_axial_wavenumber(omega, inc, g.a, g.b, g.eps_r, g.mu_r);
    if (!h_out || !h_out->is_propagating()) {
        row.regime = RowStatus::Skipped;
        return row;
    }
    row.h_outer = h_out->magnitude();

    const auto h_in = try_axial_wavenumber(omega, inn, g.s, g.d, g.eps_r_inner, g.mu_r_inner);
    if (!h_in) {
        row.regime = RowStatus::AtCutoff;
        return row;
    }
    if (h_in->is_propagating()) {
        row.regime = RowStatus::Propagating;
        row.h_inner = h_in->magnitude();
    } else {
        row.regime = RowStatus::Evanescent;
        row.kappa = h_in->magnitude();
    }

    const auto tr = transmission_reflection(h_out->magnitude(), *h_in, g.length);
    row.T = tr.T;
    row.R = tr.R;
    if (inc.polarization == Polarization::TM) {
        row.lambda_mag = std::abs(lambda_coupling(inc.m, inc.n, inn.m, inn.n, g, *h_out, *h_in));
    }
    return row;
}

void check_row(const SweepRow& row) {
    if (!row.T && !row.R) return;
    const double t = row.T.value_or(std::numeric_limits<double>::quiet_NaN());
    const double r = row.R.value_or(std::numeric_limits<double>::quiet_NaN());
    const bool ok = t >= 0.0 && t <= 1.0 && r >= 0.0 && r <= 1.0 &&
                    t + r == 1.0;
    if (!ok) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "omega=" << row.omega << " rad/s: T=" << t << " R=" << r;
        throw Error(ErrorKind::InvariantViolation, msg.str());
    }
}

std::vector<SweepRow> run_sweep_serial(const SweepJob& job) {
    validate_job(job);
    const auto grid = frequency_grid(job);
    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (double w : grid) rows.push_back(evaluate_point(job, w));
    for (const auto& r : rows) check_row(r);
    return rows;
}

std::vector<SweepRow> run_sweep_parallel(const SweepJob& job, int workers) {
    validate_job(job);
    const auto grid = frequency_grid(job);
    const auto n = static_cast<std::ptrdiff_t>(grid.size());
    std::vector<SweepRow> rows(grid.size());
    std::vector<std::exception_ptr> failures(grid.size());
    const int threads = workers > 0 ? workers : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            rows[k] = evaluate_point(job, grid[k]);
        } catch (...) {
            failures[k] = std::current_exception();
        }
    }

    for (const auto& f : failures) {
        if (f) std::rethrow_exception(f);
    }
    for (const auto& r : rows) check_row(r);
    return rows;
}

std::vector<SweepRow> run_sweep(const SweepJob& job, int workers) {
    return workers == 1 ? run_sweep_serial(job) : run_sweep_parallel(job, workers);
}

}  // namespace wgtunnel
