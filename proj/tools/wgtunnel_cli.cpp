// wgtunnel: frequency sweeps, self-checks and mode tables for a guide with
// an undersized middle section.
//
//   wgtunnel sweep job.json [-o out.csv] [--workers N]
//   wgtunnel check [--level fast|full] [--quad-order N]
//   wgtunnel modes geometry.json --omega W [--cap N]
//
// Exit status: 0 ok, 1 invalid input, 2 invariant violation or failed check.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "wgtunnel/checks.hpp"
#include "wgtunnel/csv.hpp"
#include "wgtunnel/job_io.hpp"
#include "wgtunnel/modes.hpp"
#include "wgtunnel/sweep.hpp"

namespace {

using namespace wgtunnel;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInvariant = 2;

int exit_code_for(const Error& e) {
    return e.kind() == ErrorKind::InvariantViolation ? kExitInvariant : kExitInput;
}

int cmd_sweep(const std::string& job_path, const std::string& out_path, int workers) {
    const auto job = load_job(job_path);
    const auto rows = run_sweep(job, workers);
    if (out_path.empty() || out_path == "-") {
        write_sweep_csv(std::cout, rows);
        std::cout.flush();
        return std::cout ? kExitOk : kExitInput;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + out_path);
    write_sweep_csv(out, rows);
    out.close();
    if (!out) throw Error(ErrorKind::InvalidArgument, "write failed: " + out_path);
    return kExitOk;
}

int cmd_check(const std::string& level, int quad_order) {
    CheckOptions opts;
    opts.level = level == "full" ? CheckLevel::Full : CheckLevel::Fast;
    opts.quad_order = quad_order;
    const auto report = run_checks(opts);
    std::cout << format_report(report);
    std::cout << report.suites.size() << " suites, "
              << (report.all_passed() ? "all passed" : "FAILURES") << '\n';
    return report.all_passed() ? kExitOk : kExitInvariant;
}

void print_mode_rows(const char* guide, double width, double height, double eps_r, double mu_r,
                     double omega, int cap) {
    const double u = kSI.medium_speed(eps_r, mu_r);
    for (auto pol : {Polarization::TE, Polarization::TM}) {
        for (int m = 0; m <= cap; ++m) {
            for (int n = 0; n <= cap; ++n) {
                const ModeIndex idx{pol, m, n};
                if (mode_error(idx)) continue;
                const double cutoff = u * std::sqrt(cutoff_wavenumber_sq(idx, width, height));
                const auto h = try_axial_wavenumber(omega, idx, width, height, eps_r, mu_r);
                std::cout << guide << ',' << to_string(pol) << ',' << m << ',' << n << ','
                          << format_double(cutoff) << ',';
                if (!h) {
                    std::cout << "at_cutoff,,\n";
                } else if (h->is_propagating()) {
                    std::cout << "propagating," << format_double(h->magnitude()) << ",\n";
                } else {
                    std::cout << "evanescent,," << format_double(h->magnitude()) << '\n';
                }
            }
        }
    }
}

int cmd_modes(const std::string& geometry_path, double omega, int cap) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw Error(ErrorKind::InvalidArgument, "--omega must be finite and > 0");
    }
    const auto g = load_geometry(geometry_path);
    std::cout << "guide,polarization,m,n,cutoff_omega,regime,h,kappa\n";
    print_mode_rows("outer", g.a, g.b, g.eps_r, g.mu_r, omega, cap);
    print_mode_rows("inner", g.s, g.d, g.eps_r_inner, g.mu_r_inner, omega, cap);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tunnelling through an undersized waveguide section"};
    app.require_subcommand(1);

    std::string job_path;
    std::string out_path;
    int workers = 0;
    auto* sweep = app.add_subcommand("sweep", "Run a frequency sweep and emit CSV");
    sweep->add_option("job", job_path, "JSON job file")->required()->check(CLI::ExistingFile);
    sweep->add_option("-o,--output", out_path, "Output CSV (default stdout)");
    sweep->add_option("--workers", workers, "OpenMP workers; 0 = runtime default, 1 = serial")
        ->check(CLI::NonNegativeNumber);

    std::string level = "fast";
    int quad_order = kDefaultQuadOrder;
    auto* check = app.add_subcommand("check", "Run the built-in invariant suites");
    check->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
    check->add_option("--quad-order", quad_order, "Gauss-Legendre order for quadrature suites")
        ->check(CLI::Range(2, 4096));

    std::string geometry_path;
    double omega = 0.0;
    int cap = 3;
    auto* modes = app.add_subcommand("modes", "List mode regimes at one frequency");
    modes->add_option("geometry", geometry_path, "JSON geometry (or job) file")
        ->required()
        ->check(CLI::ExistingFile);
    modes->add_option("--omega", omega, "Angular frequency in rad/s")->required();
    modes->add_option("--cap", cap, "Largest m and n to list")->check(CLI::Range(1, 64));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*sweep) return cmd_sweep(job_path, out_path, workers);
        if (*check) return cmd_check(level, quad_order);
        return cmd_modes(geometry_path, omega, cap);
    } catch (const Error& e) {
        std::cerr << "wgtunnel: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "wgtunnel: internal error: " << e.what() << '\n';
        return kExitInvariant;
    }
}
