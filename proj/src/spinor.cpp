#include "wgtunnel/spinor.hpp"

#include <algorithm>
#include <cmath>

namespace wgtunnel {

namespace {

constexpr cplx kI{0.0, 1.0};

Matrix3 make_tau(int i) {
    // (tau_i)_jk = -i eps_ijk
    Matrix3 t{};
    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
            const int eps = (i == j || j == k || i == k) ? 0 : (((j - i + 3) % 3 == 1) ? 1 : -1);
            t[j][k] = -kI * static_cast<double>(eps);
        }
    }
    return t;
}

Matrix6 block(const Matrix3& upper_right, const Matrix3& lower_left) {
    Matrix6 m{};
    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
            m[j][k + 3] = upper_right[j][k];
            m[j + 3][k] = lower_left[j][k];
        }
    }
    return m;
}

Matrix3 negate(Matrix3 m) {
    for (auto& row : m)
        for (auto& v : row) v = -v;
    return m;
}

const std::array<Matrix3, 3>& taus() {
    static const std::array<Matrix3, 3> t{make_tau(0), make_tau(1), make_tau(2)};
    return t;
}

void check_axis(int i) {
    if (i < 1 || i > 3) throw Error(ErrorKind::InvalidArgument, "spatial index must be 1..3");
}

std::array<cplx, 6> mat_vec(const Matrix6& m, const std::array<cplx, 6>& v) {
    std::array<cplx, 6> out{};
    for (std::size_t j = 0; j < 6; ++j)
        for (std::size_t k = 0; k < 6; ++k) out[j] += m[j][k] * v[k];
    return out;
}

double norm(const std::array<cplx, 6>& v) {
    double s = 0.0;
    for (const auto& c : v) s += std::norm(c);
    return std::sqrt(s);
}

}  // namespace

Spinor6 pack_spinor(const FieldSample& f, double eps_r, double mu_r) {
    const double se = std::sqrt(kSI.eps_0 * eps_r) / std::sqrt(2.0);
    const cplx sm = kI * std::sqrt(kSI.mu_0 * mu_r) / std::sqrt(2.0);
    return {{se * f.ex, se * f.ey, se * f.ez, sm * f.hx, sm * f.hy, sm * f.hz}};
}

FieldSample unpack_spinor(const Spinor6& s, double eps_r, double mu_r) {
    const double se = std::sqrt(kSI.eps_0 * eps_r) / std::sqrt(2.0);
    const cplx sm = kI * std::sqrt(kSI.mu_0 * mu_r) / std::sqrt(2.0);
    const auto& p = s.psi;
    return {p[0] / se, p[1] / se, p[2] / se, p[3] / sm, p[4] / sm, p[5] / sm};
}

const Matrix3& tau(int i) {
    check_axis(i);
    return taus()[static_cast<std::size_t>(i - 1)];
}

const Matrix6& beta0() {
    static const Matrix6 b = [] {
        Matrix6 m{};
        for (int j = 0; j < 3; ++j) {
            m[j][j] = 1.0;
            m[j + 3][j + 3] = -1.0;
        }
        return m;
    }();
    return b;
}

const Matrix6& beta(int i) {
    check_axis(i);
    static const std::array<Matrix6, 3> b{
        block(taus()[0], negate(taus()[0])),
        block(taus()[1], negate(taus()[1])),
        block(taus()[2], negate(taus()[2])),
    };
    return b[static_cast<std::size_t>(i - 1)];
}

const Matrix6& alpha(int i) {
    check_axis(i);
    static const std::array<Matrix6, 3> a{
        block(taus()[0], taus()[0]),
        block(taus()[1], taus()[1]),
        block(taus()[2], taus()[2]),
    };
    return a[static_cast<std::size_t>(i - 1)];
}

double dirac_residual(const ModeField& mode, const DiracResidualOptions& opts) {
    const double eps_r = mode.medium().eps_r;
    const double mu_r = mode.medium().mu_r;
    const double u = kSI.medium_speed(eps_r, mu_r);
    const double w = mode.width();
    const double hgt = mode.height();
    const int n = std::max(opts.samples_per_axis, 1);
    const double step = opts.fd_step > 0.0 ? opts.fd_step : 1e-4 * std::min(w, hgt);

    auto spinor_at = [&](double x, double y, double z, double t) {
        return pack_spinor(mode.at(x, y, z, t), eps_r, mu_r).psi;
    };

    const std::array<double, 3> zs{0.0, 0.21 * w, 0.53 * w};
    const std::array<double, 2> ts{0.0, 0.37 / mode.omega()};

    double worst = 0.0;
    double psi_peak = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = (i + 0.5) / n * w;
        for (int j = 0; j < n; ++j) {
            const double y = (j + 0.5) / n * hgt;
            for (double z : zs) {
                for (double t : ts) {
                    std::array<cplx, 6> d0{}, d1{}, d2{}, d3{};
                    if (opts.method == DerivativeMethod::Analytic) {
                        const auto g = mode.gradient(x, y, z, t);
                        d0 = pack_spinor(g.dt, eps_r, mu_r).psi;
                        for (auto& c : d0) c /= u;
                        d1 = pack_spinor(g.dx, eps_r, mu_r).psi;
                        d2 = pack_spinor(g.dy, eps_r, mu_r).psi;
                        d3 = pack_spinor(g.dz, eps_r, mu_r).psi;
                    } else {
                        const double inv = 1.0 / (2.0 * step);
                        const double dt = step / u;  // x^0 = u t
                        const auto tp = spinor_at(x, y, z, t + dt), tm = spinor_at(x, y, z, t - dt);
                        const auto xp = spinor_at(x + step, y, z, t), xm = spinor_at(x - step, y, z, t);
                        const auto yp = spinor_at(x, y + step, z, t), ym = spinor_at(x, y - step, z, t);
                        const auto zp = spinor_at(x, y, z + step, t), zm = spinor_at(x, y, z - step, t);
                        for (std::size_t k = 0; k < 6; ++k) {
                            d0[k] = (tp[k] - tm[k]) * inv;
                            d1[k] = (xp[k] - xm[k]) * inv;
                            d2[k] = (yp[k] - ym[k]) * inv;
                            d3[k] = (zp[k] - zm[k]) * inv;
                        }
                    }
                    const auto r0 = mat_vec(beta0(), d0);
                    const auto r1 = mat_vec(beta(1), d1);
                    const auto r2 = mat_vec(beta(2), d2);
                    const auto r3 = mat_vec(beta(3), d3);
                    std::array<cplx, 6> r{};
                    for (std::size_t k = 0; k < 6; ++k) r[k] = r0[k] + r1[k] + r2[k] + r3[k];
                    worst = std::max(worst, norm(r));
                    psi_peak = std::max(psi_peak, norm(spinor_at(x, y, z, t)));
                }
            }
        }
    }
    const double scale = std::max(mode.omega() / u, std::sqrt(mode.k_perp_sq()));
    if (psi_peak == 0.0) return 0.0;
    return worst / (psi_peak * scale);
}

}  // namespace wgtunnel
