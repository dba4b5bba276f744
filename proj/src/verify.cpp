#include "wgtunnel/verify.hpp"

#include <cmath>

#include "wgtunnel/spinor.hpp"

namespace wgtunnel {

double basis_value(const BasisFunctionId& g, double a, double b, double x, double y) {
    const double u = g.m * kPi * x / a;
    const double v = g.n * kPi * y / b;
    switch (g.family) {
        case BasisFamily::G1: return std::cos(u) * std::sin(v);
        case BasisFamily::G2: return std::sin(u) * std::cos(v);
        case BasisFamily::G3: return std::cos(u) * std::cos(v);
        case BasisFamily::G4: return std::sin(u) * std::sin(v);
    }
    return 0.0;
}

double basis_orthonormality(const BasisFunctionId& i, const BasisFunctionId& j, double a, double b,
                            int order, BasisDomain domain) {
    const double x0 = domain == BasisDomain::Extended ? -a : 0.0;
    const double y0 = domain == BasisDomain::Extended ? -b : 0.0;
    const auto rule = make_rule(order, x0, a, y0, b);
    return quad2d(
        [&](double x, double y) { return basis_value(i, a, b, x, y) * basis_value(j, a, b, x, y); },
        rule);
}

cplx spinor_inner_product(const ModeField& lhs, const ModeField& rhs, int order) {
    const auto rule = make_rule(order, 0.0, lhs.width(), 0.0, lhs.height());
    return quad2d(
        [&](double x, double y) {
            const auto p = pack_spinor(lhs.at(x, y, 0.0, 0.0), lhs.medium().eps_r, lhs.medium().mu_r);
            const auto q = pack_spinor(rhs.at(x, y, 0.0, 0.0), rhs.medium().eps_r, rhs.medium().mu_r);
            cplx acc{};
            for (std::size_t k = 0; k < 6; ++k) acc += std::conj(p.psi[k]) * q.psi[k];
            return acc;
        },
        rule);
}

double te_tm_orthogonality(const ModeIndex& te_mode, const ModeIndex& tm_mode, double a, double b,
                           Medium medium, double omega, int order) {
    if (te_mode.polarization != Polarization::TE || tm_mode.polarization != Polarization::TM) {
        throw Error(ErrorKind::InvalidArgument, "te_tm_orthogonality needs one TE and one TM mode");
    }
    const auto h_te = axial_wavenumber(omega, te_mode, a, b, medium.eps_r, medium.mu_r);
    const auto h_tm = axial_wavenumber(omega, tm_mode, a, b, medium.eps_r, medium.mu_r);
    const ModeField f_te(te_mode, a, b, medium, 1.0, omega, h_te);
    const ModeField f_tm(tm_mode, a, b, medium, 1.0, omega, h_tm);
    const double n_te = std::sqrt(std::abs(spinor_inner_product(f_te, f_te, order)));
    const double n_tm = std::sqrt(std::abs(spinor_inner_product(f_tm, f_tm, order)));
    return std::abs(spinor_inner_product(f_te, f_tm, order)) / (n_te * n_tm);
}

double completeness_partial_sum(CompletenessFamily family, int max_index,
                                const std::function<double(double)>& phi, double x, double a,
                                int order) {
    if (max_index < 1) throw Error(ErrorKind::InvalidArgument, "completeness needs M >= 1");
    const GaussLegendre gl(order > 0 ? order : 4 * max_index + 64);
    const bool cosine = family == CompletenessFamily::Cosine;
    auto kernel = [&](int m, double t) {
        const double arg = m * kPi * t / a;
        return cosine ? std::cos(arg) : std::sin(arg);
    };
    double sum = 0.0;
    for (int m = 1; m <= max_index; ++m) {
        const double proj = gl.integrate([&](double t) { return kernel(m, t) * phi(t); }, 0.0, a);
        sum += kernel(m, x) * proj;
    }
    return sum;
}

double completeness_residual(CompletenessFamily family, int max_index,
                             const std::function<double(double)>& phi, double x, double a,
                             int order) {
    const double partial = completeness_partial_sum(family, max_index, phi, x, a, order);
    double limit = 0.5 * a * phi(x);
    if (family == CompletenessFamily::Cosine) {
        const GaussLegendre gl(order > 0 ? order : 4 * max_index + 64);
        limit -= 0.5 * gl.integrate(phi, 0.0, a);
    }
    return std::abs(partial - limit);
}

}  // namespace wgtunnel
