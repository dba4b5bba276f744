#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "wgtunnel/linalg.hpp"
#include "wgtunnel/reference_formulas.hpp"
#include "wgtunnel/scattering.hpp"

using namespace wgtunnel;
using wgtunnel::tm;  // not the <ctime> struct

namespace {

constexpr double c0 = kSpeedOfLight;

double rel(cplx x, cplx y) {
    const double s = std::max(std::abs(x), std::abs(y));
    return s == 0.0 ? 0.0 : std::abs(x - y) / s;
}

double log_mag(cplx x, cplx y) { return std::abs(std::log(std::abs(x)) - std::log(std::abs(y))); }

GuideGeometry te10_config() { return {0.02286, 0.01016, 0.02286, 0.00508, 0.03, 2.25, 1.0, 1.0, 1.0}; }
GuideGeometry tm11_config() { return {0.04, 0.02, 0.02, 0.01, 0.025, 2.25, 1.0, 1.0, 1.0}; }

ErrorKind scatter_error(const ModeIndex& i, const ModeIndex& p, const GuideGeometry& g, double omega,
                        const ScatterOptions& opts = {}) {
    try {
        (void)scatter(i, p, g, omega, opts);
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "scatter did not throw";
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(ClosedForm, MatchedSectionIsTransparent) {
    for (double length : {0.01, 1.0, 37.0}) {
        const auto r = closed_form_coefficients(3.0, AxialWavenumber::propagating(3.0), length);
        EXPECT_LT(std::abs(r.a2), 1e-15);
        EXPECT_LT(std::abs(r.c - 1.0), 1e-14);
        const auto tr = transmission_reflection(3.0, AxialWavenumber::propagating(3.0), length);
        EXPECT_EQ(tr.T, 1.0);
        EXPECT_EQ(tr.R, 0.0);
    }
}

TEST(ClosedForm, ThinSectionIsTransparent) {
    for (auto inner : {AxialWavenumber::propagating(7.0), AxialWavenumber::evanescent(7.0)}) {
        const auto r = closed_form_coefficients(2.0, inner, 1e-9);
        EXPECT_LT(std::abs(r.a2), 1e-7);
        EXPECT_LT(std::abs(r.c - 1.0), 1e-7);
    }
}

TEST(ClosedForm, EvanescentExample) {
    const double expect = 16.0 / (25.0 * std::sinh(1.0) * std::sinh(1.0) + 16.0);
    const auto inner = AxialWavenumber::evanescent(1.0);
    const auto cf = closed_form_coefficients(2.0, inner, 1.0);
    const auto ls = solve_matching_system(2.0, inner, 1.0);
    EXPECT_NEAR(std::norm(cf.c), expect, 1e-15);
    EXPECT_NEAR(std::norm(ls.c), expect, 1e-14);
    EXPECT_NEAR(transmission_reflection(2.0, inner, 1.0).T, expect, 1e-15);
    EXPECT_NEAR(expect, 0.3167, 5e-5);
}

TEST(ClosedForm, ScalesWithIncidentAmplitude) {
    const auto inner = AxialWavenumber::propagating(1.7);
    const cplx a1(0.3, -2.0);
    const auto unit = closed_form_coefficients(2.5, inner, 0.8);
    const auto r = closed_form_coefficients(2.5, inner, 0.8, a1);
    EXPECT_EQ(r.a1, a1);
    EXPECT_LT(rel(r.c, unit.c * a1), 1e-15);
    EXPECT_LT(rel(r.b2, unit.b2 * a1), 1e-15);
}

TEST(ClosedForm, SatisfiesMatchingEquations) {
    const double h = 4.0, L = 0.9;
    for (auto inner : {AxialWavenumber::propagating(2.3), AxialWavenumber::evanescent(2.3)}) {
        const auto r = closed_form_coefficients(h, inner, L, cplx(1.0, 0.4));
        const cplx hp = inner.value();
        const cplx i(0.0, 1.0);
        EXPECT_LT(std::abs(r.a1 + r.a2 - r.b1 - r.b2), 1e-14);
        EXPECT_LT(std::abs(h * (r.a1 - r.a2) - hp * (r.b1 - r.b2)), 1e-13);
        const cplx cz = r.c * std::exp(i * h * L);
        const cplx fwd = r.b1 * std::exp(i * hp * L);
        const cplx bwd = r.b2 * std::exp(-i * hp * L);
        EXPECT_LT(std::abs(cz - fwd - bwd), 1e-14);
        EXPECT_LT(std::abs(h * cz - hp * (fwd - bwd)), 1e-13);
    }
}

TEST(LinearSolve, AgreesWithClosedFormOnRandomDraws) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> k(0.1, 10.0);
    std::uniform_real_distribution<double> len(0.01, 10.0);
    for (int i = 0; i < 1000; ++i) {
        const double h = k(rng);
        const double hp = k(rng);
        const double L = len(rng);
        for (auto inner : {AxialWavenumber::propagating(hp), AxialWavenumber::evanescent(hp)}) {
            const auto cf = closed_form_coefficients(h, inner, L);
            const auto ls = solve_matching_system(h, inner, L);
            const bool deep = !inner.is_propagating() && hp * L > 30.0;
            const std::pair<cplx, cplx> comps[] = {{cf.a2, ls.a2}, {cf.b1, ls.b1}, {cf.b2, ls.b2},
                                                   {cf.c, ls.c}};
            for (auto [x, y] : comps) {
                if (deep) {
                    EXPECT_LE(log_mag(x, y), 1e-8) << "h=" << h << " kappa=" << hp << " L=" << L;
                } else {
                    EXPECT_LE(rel(x, y), 1e-10) << "h=" << h << " h'=" << hp << " L=" << L;
                }
            }
        }
    }
}

TEST(LinearSolve, MatchedSectionHasNoReflection) {
    const auto r = solve_matching_system(5.0, AxialWavenumber::propagating(5.0), 2.0);
    EXPECT_LT(std::abs(r.a2), 1e-15);
}

TEST(LinearSolve, DenseSolverSolvesAndDetectsSingularity) {
    using M = std::array<std::array<cplx, 3>, 3>;
    const M a = {{{2.0, cplx(0, 1), 0.0}, {1.0, 3.0, -1.0}, {0.0, cplx(1, 1), 4.0}}};
    const std::array<cplx, 3> x = {cplx(1, 2), -0.5, cplx(0, 3)};
    std::array<cplx, 3> b{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b[i] += a[i][j] * x[j];
    const auto got = solve_dense<3>(a, b);
    for (int i = 0; i < 3; ++i) EXPECT_LT(std::abs(got[i] - x[i]), 1e-14);

    M sing = a;
    sing[2] = {4.0, cplx(0, 2), 0.0};  // twice row 0
    try {
        (void)solve_dense<3>(sing, b);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SingularSystem);
    }
}

TEST(Transmission, Resonances) {
    for (double h : {0.5, 3.0, 40.0}) {
        for (double hp : {1.0, 7.0, 90.0}) {
            for (int n = 1; n <= 6; ++n) {
                const auto tr = transmission_reflection(h, AxialWavenumber::propagating(hp), n * kPi / hp);
                EXPECT_NEAR(tr.T, 1.0, 1e-12);
            }
        }
    }
}

TEST(Transmission, SumsToOneExactly) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> k(0.01, 1000.0);
    std::uniform_real_distribution<double> phase(0.0, 200.0);
    for (int i = 0; i < 20000; ++i) {
        const double h = k(rng), hp = k(rng);
        const auto inner = (i % 2) ? AxialWavenumber::propagating(hp) : AxialWavenumber::evanescent(hp);
        const auto tr = transmission_reflection(h, inner, phase(rng) / hp);
        ASSERT_EQ(tr.T + tr.R, 1.0);
        ASSERT_GE(tr.T, 0.0);
        ASSERT_GE(tr.R, 0.0);
    }
}

TEST(Transmission, AmplitudesConserveFlux) {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> k(0.1, 100.0);
    std::uniform_real_distribution<double> phase(0.0, 60.0);
    for (int i = 0; i < 2000; ++i) {
        const double h = k(rng), hp = k(rng);
        for (auto inner : {AxialWavenumber::propagating(hp), AxialWavenumber::evanescent(hp)}) {
            const double L = phase(rng) / hp;
            const auto r = closed_form_coefficients(h, inner, L);
            EXPECT_NEAR(std::norm(r.a2) + std::norm(r.c), 1.0, 1e-12);
            const auto tr = transmission_reflection(h, inner, L);
            EXPECT_NEAR(tr.T, std::norm(r.c), 1e-12);
        }
    }
}

// T(h, h', L) is unchanged by exchanging the two wavenumbers provided the
// phase h'L through the section is kept.
TEST(Transmission, ExchangeSymmetry) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> k(0.1, 50.0);
    for (int i = 0; i < 1000; ++i) {
        const double h = k(rng), hp = k(rng), L = k(rng) / 10.0;
        const double t1 = transmission_reflection(h, AxialWavenumber::propagating(hp), L).T;
        const double t2 = transmission_reflection(hp, AxialWavenumber::propagating(h), hp * L / h).T;
        EXPECT_NEAR(t1, t2, 1e-12 * std::max(t1, 1e-300) + 1e-15);
    }
}

TEST(Transmission, EvanescentMonotone) {
    const double h = 30.0;
    double prev = 2.0;
    for (double L = 0.001; L < 1.0; L *= 1.3) {
        const double t = transmission_reflection(h, AxialWavenumber::evanescent(20.0), L).T;
        EXPECT_LT(t, prev);
        prev = t;
    }
    prev = 2.0;
    for (double kappa = 0.5; kappa < 500.0; kappa *= 1.3) {
        const double t = transmission_reflection(h, AxialWavenumber::evanescent(kappa), 0.05).T;
        EXPECT_LT(t, prev) << "kappa=" << kappa;
        prev = t;
    }
}

TEST(Transmission, HartmanDecay) {
    for (double kappa : {2.0, 50.0, 800.0}) {
        for (double kl : {10.0, 25.0, 80.0, 150.0}) {
            const double L = kl / kappa;
            const double delta = 0.7 / kappa;
            const auto inner = AxialWavenumber::evanescent(kappa);
            const double ratio = transmission_reflection(10.0, inner, L + delta).T /
                                 transmission_reflection(10.0, inner, L).T;
            EXPECT_NEAR(ratio / std::exp(-2.0 * kappa * delta), 1.0, 1e-6);
        }
    }
}

TEST(Transmission, NoOverflowDeepBelowCutoff) {
    for (double kl = 1.0; kl <= 200.0; kl += 1.0) {
        const auto tr = transmission_reflection(3.0, AxialWavenumber::evanescent(40.0), kl / 40.0);
        EXPECT_TRUE(std::isnormal(tr.T)) << "kappa L=" << kl;
        EXPECT_GT(tr.T, 0.0);
        const auto r = closed_form_coefficients(3.0, AxialWavenumber::evanescent(40.0), kl / 40.0);
        EXPECT_TRUE(std::isfinite(std::abs(r.b1)) && std::isfinite(std::abs(r.b2)));
        EXPECT_GT(std::abs(r.c), 0.0);
    }
}

TEST(Transmission, ThinBarrierQuadraticLimit) {
    for (auto inner : {AxialWavenumber::propagating(9.0), AxialWavenumber::evanescent(9.0)}) {
        double L = 1e-3;
        double prev = transmission_reflection(2.0, inner, L).R;
        for (int k = 0; k < 8; ++k) {
            L *= 0.5;
            const double r = transmission_reflection(2.0, inner, L).R;
            EXPECT_GT(prev / r, 3.5);
            EXPECT_LT(prev / r, 4.5);
            prev = r;
        }
    }
}

TEST(Scatter, TE10MatchesTextbookFormulas) {
    const auto g = te10_config();
    const double w_inner = kPi * c0 / g.a;
    const double w_outer = w_inner / std::sqrt(g.eps_r);
    int evanescent = 0, propagating = 0;
    for (int i = 0; i < 200; ++i) {
        const double omega = w_outer * 1.01 + (1.97 * w_inner - 1.01 * w_outer) * i / 199.0;
        const auto r = scatter(te(1, 0), te(1, 0), g, omega);
        double ref = 0.0;
        if (omega > w_inner) {
            ++propagating;
            ref = reference::te10_transmission_propagating(omega, g.a, g.length, g.eps_r);
            EXPECT_EQ(r.transmission.regime, Regime::Propagating);
        } else {
            ++evanescent;
            ref = reference::te10_transmission_evanescent(omega, g.a, g.length, g.eps_r);
            EXPECT_EQ(r.transmission.regime, Regime::Evanescent);
        }
        EXPECT_NEAR(r.transmission.T / ref, 1.0, 1e-12) << "omega=" << omega;
        EXPECT_EQ(r.coupling.gamma, 1.0);
        EXPECT_FALSE(r.coupling.lambda);
    }
    EXPECT_GT(evanescent, 50);
    EXPECT_GT(propagating, 50);
}

TEST(Scatter, TM11MatchesTextbookFormulas) {
    const auto g = tm11_config();
    const double eps_mu = g.eps_r * g.mu_r;
    const double kc = std::sqrt(kPi * kPi / (g.a * g.a) + kPi * kPi / (g.b * g.b));
    const double w_outer = kc * c0 / std::sqrt(eps_mu);
    const double w_inner = 2.0 * kc * c0;
    for (int i = 0; i < 200; ++i) {
        const double omega = w_outer * 1.01 + (1.6 * w_inner - 1.01 * w_outer) * i / 199.0;
        const auto r = scatter(tm(1, 1), tm(1, 1), g, omega);
        const double ref =
            omega > w_inner
                ? reference::tm11_transmission_propagating(omega, g.a, g.b, g.length, eps_mu)
                : reference::tm11_transmission_evanescent(omega, g.a, g.b, g.length, eps_mu);
        EXPECT_NEAR(r.transmission.T / ref, 1.0, 1e-12) << "omega=" << omega;
        // The weight equals 4 h^2 h'^2 c^4, negative below the inner cutoff.
        const double hp2 = r.h_inner.is_propagating() ? std::pow(r.h_inner.magnitude(), 2)
                                                      : -std::pow(r.h_inner.magnitude(), 2);
        const double w = 4.0 * std::pow(r.h_outer.magnitude(), 2) * hp2 * std::pow(c0, 4);
        EXPECT_NEAR(reference::tm11_weight(omega, g.a, g.b, eps_mu) / w, 1.0, 1e-10);
        EXPECT_NEAR(r.coupling.gamma, 16.0 / (9.0 * kPi * kPi), 1e-15);
        ASSERT_TRUE(r.coupling.lambda);
    }
}

TEST(Scatter, CouplingScalesAmplitudes) {
    const auto g = tm11_config();
    const double omega = 1.5e11;
    ScatterOptions opts;
    opts.amplitude = cplx(2.0, 1.0);
    const auto r = scatter(tm(1, 1), tm(1, 1), g, omega, opts);
    const auto unit = closed_form_coefficients(r.h_outer.magnitude(), r.h_inner, g.length);
    const double gamma = r.coupling.gamma;
    EXPECT_LT(rel(r.normalized.c, unit.c * gamma * opts.amplitude), 1e-14);
    EXPECT_LT(rel(r.physical.c, unit.c * opts.amplitude), 1e-14);
    EXPECT_LT(rel(r.physical.b1, unit.b1 * gamma / *r.coupling.lambda * opts.amplitude), 1e-14);
    EXPECT_TRUE(r.within_validity);
}

TEST(Scatter, PolarizationMismatch) {
    EXPECT_EQ(scatter_error(te(1, 1), tm(1, 1), tm11_config(), 1.5e11), ErrorKind::PolarizationMismatch);
}

TEST(Scatter, ConstraintViolation) {
    auto g = te10_config();
    g.s = 0.5 * g.a;
    EXPECT_EQ(scatter_error(te(1, 0), te(1, 0), g, 8e10), ErrorKind::ConstraintViolated);
    try {
        (void)scatter(te(1, 0), te(1, 0), g, 8e10);
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("residual=3"), std::string::npos) << e.what();
    }
    ScatterOptions opts;
    opts.allow_constraint_violation = true;
    const auto r = scatter(te(1, 0), te(1, 0), g, 8e10, opts);
    EXPECT_FALSE(r.within_validity);
    EXPECT_NEAR(r.constraint_residual, 3.0, 1e-12);
    EXPECT_EQ(r.transmission.T + r.transmission.R, 1.0);
}

TEST(Scatter, IncidentBelowCutoff) {
    EXPECT_EQ(scatter_error(te(1, 0), te(1, 0), te10_config(), 1e10), ErrorKind::IncidentCutOff);
}

TEST(Scatter, InnerAtCutoff) {
    const auto g = te10_config();
    EXPECT_EQ(scatter_error(te(1, 0), te(1, 0), g, kPi * c0 / g.s), ErrorKind::AtCutoff);
}

TEST(Scatter, InvalidGeometry) {
    auto g = te10_config();
    g.s = 2.0 * g.a;
    EXPECT_EQ(scatter_error(te(1, 0), te(1, 0), g, 8e10), ErrorKind::NonNesting);
}

TEST(Poynting, ZeroField) { EXPECT_EQ(poynting_z({}), 0.0); }

TEST(Poynting, SignFollowsDirection) {
    const auto g = te10_config();
    const double omega = 8e10;
    const auto h = axial_wavenumber(omega, te(1, 0), g.a, g.b, 1.0, 1.0);
    const ModeField fwd(te(1, 0), g.a, g.b, {}, 1.0, omega, h, Direction::Forward);
    const ModeField bwd(te(1, 0), g.a, g.b, {}, 1.0, omega, h, Direction::Backward);
    EXPECT_GT(poynting_z(fwd.at(0.5 * g.a, 0.5 * g.b, 0, 0)), 0.0);
    EXPECT_LT(poynting_z(bwd.at(0.5 * g.a, 0.5 * g.b, 0, 0)), 0.0);
    const auto e = axial_wavenumber(2e10, te(1, 0), g.a, g.b, 1.0, 1.0);
    const ModeField ev(te(1, 0), g.a, g.b, {}, 1.0, 2e10, e);
    EXPECT_NEAR(poynting_z(ev.at(0.5 * g.a, 0.5 * g.b, 0, 0)), 0.0, 1e-20);
}
