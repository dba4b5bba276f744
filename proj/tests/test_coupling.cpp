#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "wgtunnel/coupling.hpp"

using namespace wgtunnel;
using boost::math::quadrature::gauss_kronrod;

namespace {

// Adaptive Gauss-Kronrod reference for the 1-D overlap integrals.
double gk_overlap(TrigProduct kind, int m, double a, int p, double s) {
    auto f = [&](double x) {
        const double u = m * kPi * x / a;
        const double v = p * kPi * x / s;
        return kind == TrigProduct::CosCos ? std::cos(u) * std::cos(v) : std::sin(u) * std::sin(v);
    };
    return gauss_kronrod<double, 61>::integrate(f, 0.0, s, 15, 1e-14);
}

GuideGeometry guide(double a, double b, double s, double d) {
    return {a, b, s, d, 0.01, 1.0, 1.0, 1.0, 1.0};
}

}  // namespace

TEST(Overlap, MatchedUnitLength) {
    EXPECT_DOUBLE_EQ(overlap_1d(TrigProduct::CosCos, 1, 1.0, 1, 1.0), 0.5);
}

TEST(Overlap, ZeroIndicesGiveLength) {
    for (double s : {0.3, 1.0, 2.5}) {
        EXPECT_DOUBLE_EQ(overlap_1d(TrigProduct::CosCos, 0, s, 0, s), s);
        EXPECT_DOUBLE_EQ(overlap_1d(TrigProduct::SinSin, 0, s, 0, s), 0.0);
    }
}

TEST(Overlap, HalfWidthExample) {
    const double v = overlap_1d(TrigProduct::CosCos, 1, 2.0, 1, 1.0);
    EXPECT_NEAR(v, 2.0 / (3.0 * kPi), 1e-15);
    EXPECT_NEAR(v, gk_overlap(TrigProduct::CosCos, 1, 2.0, 1, 1.0), 1e-14);
}

TEST(Overlap, MatchesAdaptiveQuadrature) {
    const double a = 1.0;
    for (double ratio : {0.3, 0.5, 1.0 / std::sqrt(2.0), 1.0}) {
        for (auto kind : {TrigProduct::CosCos, TrigProduct::SinSin}) {
            for (int m = 0; m <= 4; ++m) {
                for (int p = 0; p <= 4; ++p) {
                    const double s = ratio * a;
                    EXPECT_NEAR(overlap_1d(kind, m, a, p, s), gk_overlap(kind, m, a, p, s), 1e-10)
                        << "m=" << m << " p=" << p << " s/a=" << ratio;
                }
            }
        }
    }
}

TEST(Overlap, DegenerateLimitIsContinuous) {
    const double a = 1.0;
    for (int m = 1; m <= 4; ++m) {
        for (int p = 1; p <= m; ++p) {
            const double s0 = p * a / m;
            for (auto kind : {TrigProduct::CosCos, TrigProduct::SinSin}) {
                const double limit = overlap_1d(kind, m, a, p, s0);
                EXPECT_NEAR(limit, 0.5 * s0, 1e-15);
                for (double off : {-1e-7, 1e-7}) {
                    const double s = s0 + off * a / m;
                    EXPECT_NEAR(overlap_1d(kind, m, a, p, s), gk_overlap(kind, m, a, p, s), 1e-10);
                }
            }
        }
    }
}

TEST(Overlap, ToleranceIsConfigurable) {
    // Within a wide tolerance the matched limit is returned instead.
    const double s = 0.5 + 1e-5;
    EXPECT_DOUBLE_EQ(overlap_1d(TrigProduct::CosCos, 2, 1.0, 1, s, 1e-3), 0.5 * s);
    EXPECT_NE(overlap_1d(TrigProduct::CosCos, 2, 1.0, 1, s), 0.5 * s);
}

TEST(Overlap, RejectsBadInput) {
    EXPECT_THROW((void)overlap_1d(TrigProduct::CosCos, -1, 1.0, 1, 1.0), Error);
    EXPECT_THROW((void)overlap_1d(TrigProduct::CosCos, 1, 0.0, 1, 1.0), Error);
}

TEST(Gamma, MatchedGeometryIsExactlyOne) {
    for (int m = 0; m <= 4; ++m) {
        for (int n = 0; n <= 4; ++n) {
            if (m == 0 && n == 0) continue;
            EXPECT_EQ(gamma_coupling(m, n, m, n, guide(0.02286, 0.01016, 0.02286, 0.01016)), 1.0);
        }
    }
}

TEST(Gamma, TE10WithEqualWidthsIsOne) {
    EXPECT_EQ(gamma_coupling(1, 0, 1, 0, guide(0.02286, 0.01016, 0.02286, 0.004)), 1.0);
}

TEST(Gamma, HalfSizedInnerGuide) {
    const auto g = guide(2.0, 1.0, 1.0, 0.5);
    const double expect = 16.0 / (9.0 * kPi * kPi);
    EXPECT_NEAR(gamma_coupling(1, 1, 1, 1, g), expect, 1e-15);

    // Oracle: normalized 2-D projection of the outer cos-cos profile onto
    // the inner one, by nested adaptive quadrature.
    auto outer = [&](double x, double y) { return std::cos(kPi * x / g.a) * std::cos(kPi * y / g.b); };
    auto inner = [&](double x, double y) { return std::cos(kPi * x / g.s) * std::cos(kPi * y / g.d); };
    auto integrate2 = [&](auto f) {
        return gauss_kronrod<double, 31>::integrate(
            [&](double y) {
                return gauss_kronrod<double, 31>::integrate([&](double x) { return f(x, y); }, 0.0,
                                                            g.s, 10, 1e-14);
            },
            0.0, g.d, 10, 1e-14);
    };
    const double proj = integrate2([&](double x, double y) { return outer(x, y) * inner(x, y); });
    const double norm = integrate2([&](double x, double y) { return inner(x, y) * inner(x, y); });
    EXPECT_NEAR(gamma_coupling(1, 1, 1, 1, g), proj / norm, 1e-12);
}

TEST(Gamma, VanishesWhenSineFactorDoes) {
    // m s / a integer but p a != m s.
    const auto g = guide(2.0, 1.0, 1.0, 1.0);
    EXPECT_EQ(gamma_coupling(2, 1, 3, 1, g), 0.0);  // p a = 6, m s = 2, sin(pi) = 0
    EXPECT_EQ(gamma_coupling(4, 1, 1, 1, g), 0.0);  // p a = 2, m s = 4, sin(2 pi) = 0
}

TEST(Gamma, BracketsDegenerateLimit) {
    const double a = 1.0, b = 0.6;
    for (int m = 1; m <= 3; ++m) {
        for (int p = 1; p <= m; ++p) {
            const double s0 = p * a / m;
            const double limit = gamma_coupling(m, 1, p, 1, guide(a, b, s0, 0.4));
            const double lo = gamma_coupling(m, 1, p, 1, guide(a, b, s0 * (1 - 1e-7), 0.4));
            const double hi = gamma_coupling(m, 1, p, 1, guide(a, b, s0 * (1 + 1e-7), 0.4));
            EXPECT_LE(std::min(lo, hi), limit * (1 + 1e-5));
            EXPECT_GE(std::max(lo, hi), limit * (1 - 1e-5));
            EXPECT_NEAR(lo / limit, 1.0, 1e-5);
            EXPECT_NEAR(hi / limit, 1.0, 1e-5);
        }
    }
}

TEST(Lambda, Examples) {
    const auto g = guide(0.02, 0.01, 0.02, 0.01);
    const auto h = AxialWavenumber::propagating(100.0);
    EXPECT_EQ(lambda_coupling(1, 1, 1, 1, g, h, h), cplx(1.0));

    // k_perp,mn^2 = 2 k_perp,pq^2: TE(1,1) in a square guide vs TE(1,0) in the same guide.
    const auto sq = guide(0.02, 0.02, 0.02, 0.02);
    EXPECT_NEAR(std::abs(lambda_coupling(1, 1, 1, 0, sq, h, h) - 2.0), 0.0, 1e-14);

    const cplx li = lambda_coupling(1, 1, 1, 1, g, h, AxialWavenumber::evanescent(100.0));
    EXPECT_NEAR(std::abs(li - cplx(0.0, 1.0)), 0.0, 1e-15);
}

TEST(Lambda, IncidentMustPropagate) {
    const auto g = guide(0.02, 0.01, 0.02, 0.01);
    try {
        (void)lambda_coupling(1, 1, 1, 1, g, AxialWavenumber::evanescent(5.0),
                              AxialWavenumber::propagating(5.0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::IncidentEvanescent);
    }
}

TEST(Constraint, TE10EqualWidths) {
    const auto c = te_constraint(1, 0, 1, 0, guide(0.02, 0.01, 0.02, 0.005));
    EXPECT_TRUE(c.satisfied);
    EXPECT_EQ(c.residual, 0.0);
}

TEST(Constraint, TE10HalfWidth) {
    const auto c = te_constraint(1, 0, 1, 0, guide(0.02, 0.01, 0.01, 0.005));
    EXPECT_FALSE(c.satisfied);
    EXPECT_NEAR(c.residual, 3.0, 1e-12);  // |1 - 4| / 1
}

TEST(Constraint, TE10ToTE20HalfWidth) {
    const auto c = te_constraint(1, 0, 2, 0, guide(0.02, 0.01, 0.01, 0.005));
    EXPECT_FALSE(c.satisfied);
    EXPECT_NEAR(c.residual, 15.0, 1e-12);  // (4 pi/a)^2 vs (pi/a)^2
}

// For TE(1,0) incident and equal media, only TE(p,0) with p = s/a fits;
// with s <= a that leaves p = 1 at s = a.
TEST(Constraint, TE10GridOfRatios) {
    for (int k = 1; k <= 10; ++k) {
        const double ratio = 0.1 * k;
        for (int p = 0; p <= 3; ++p) {
            for (int q = 0; q <= 3; ++q) {
                if (p == 0 && q == 0) continue;
                const bool ok = te_constraint(1, 0, p, q, guide(1.0, 0.5, ratio, 0.25)).satisfied;
                EXPECT_EQ(ok, k == 10 && p == 1 && q == 0) << "s/a=" << ratio << " p=" << p << " q=" << q;
            }
        }
    }
}

TEST(Constraint, TEAccountsForPermeability) {
    auto g = guide(0.02, 0.01, 0.01, 0.01);
    g.mu_r_inner = 4.0;  // k_pq^2 = 4 k_mn^2 with s = a/2
    EXPECT_TRUE(te_constraint(1, 0, 1, 0, g).satisfied);
}

TEST(Constraint, TM11HalfSized) {
    EXPECT_TRUE(tm_constraint(1, 1, 1, 1, guide(0.04, 0.02, 0.02, 0.01)).satisfied);
    EXPECT_FALSE(tm_constraint(1, 1, 1, 2, guide(0.04, 0.02, 0.02, 0.01)).satisfied);
}

TEST(Constraint, TMSymmetricScaling) {
    for (int m = 1; m <= 4; ++m) {
        const auto c = tm_constraint(m, m, m, m, guide(0.05, 0.03, 0.05 * 0.7, 0.03 * 0.7));
        EXPECT_TRUE(c.satisfied);
        EXPECT_LT(c.residual, 1e-15);
    }
}

TEST(Constraint, RejectsInvalidModes) {
    EXPECT_THROW((void)te_constraint(0, 0, 1, 0, guide(1, 1, 1, 1)), Error);
    EXPECT_THROW((void)tm_constraint(1, 0, 1, 1, guide(1, 1, 1, 1)), Error);
}
