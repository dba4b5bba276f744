#include "wgtunnel/coupling.hpp"

#include <algorithm>
#include <cmath>

namespace wgtunnel {

namespace {

// sin(pi r), reduced about the nearest integer so that exact integers give 0
// and near-integers keep their relative accuracy.
double sin_pi(double r) {
    const double k = std::nearbyint(r);
    const double s = std::sin(kPi * (r - k));
    return std::fmod(k, 2.0) == 0.0 ? s : -s;
}

double sign_pow(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

double inner_norm(int index, double len) { return index == 0 ? len : 0.5 * len; }

void require_lengths(double outer_len, double inner_len) {
    if (!(outer_len > 0.0) || !(inner_len > 0.0) || !std::isfinite(outer_len) ||
        !std::isfinite(inner_len)) {
        throw Error(ErrorKind::InvalidArgument, "overlap lengths must be finite and > 0");
    }
}

}  // namespace

double overlap_1d(TrigProduct kind, int outer_index, double outer_len, int inner_index,
                  double inner_len, double degenerate_tol) {
    if (outer_index < 0 || inner_index < 0) {
        throw Error(ErrorKind::InvalidArgument, "overlap indices must be >= 0");
    }
    require_lengths(outer_len, inner_len);

    const double m = outer_index;
    const double p = inner_index;
    const double a = outer_len;
    const double s = inner_len;
    // The sine and the mismatch share one rounding of m s / a, so their ratio
    // stays accurate next to the matched condition.
    const double r = m * s / a;
    const double mismatch = a * (p - r);

    if (std::abs(mismatch) < degenerate_tol * a * std::max({1.0, m, p})) {
        if (outer_index == 0 && inner_index == 0) {
            return kind == TrigProduct::CosCos ? s : 0.0;
        }
        return 0.5 * s;
    }

    const double denom = kPi * (p * a + m * s) * mismatch;
    const double sign = sign_pow(inner_index + 1);
    const double sine = sin_pi(r);
    if (kind == TrigProduct::CosCos) return sign * m * a * s * s * sine / denom;
    return sign * p * a * a * s * sine / denom;
}

double gamma_coupling(int m, int n, int p, int q, const GuideGeometry& g, double degenerate_tol) {
    const double gx = overlap_1d(TrigProduct::CosCos, m, g.a, p, g.s, degenerate_tol) /
                      inner_norm(p, g.s);
    const double gy = overlap_1d(TrigProduct::CosCos, n, g.b, q, g.d, degenerate_tol) /
                      inner_norm(q, g.d);
    return gx * gy;
}

namespace {

double kperp_sq(int m, int n, double w, double h) {
    const double kx = m * kPi / w;
    const double ky = n * kPi / h;
    return kx * kx + ky * ky;
}

void require_nonzero_pair(int m, int n, const char* what) {
    if (m < 0 || n < 0 || (m == 0 && n == 0)) {
        throw Error(ErrorKind::InvalidArgument, std::string(what) + " index pair must be valid");
    }
}

}  // namespace

cplx lambda_coupling(int m, int n, int p, int q, const GuideGeometry& g,
                     const AxialWavenumber& h_outer, const AxialWavenumber& h_inner) {
    require_nonzero_pair(m, n, "outer");
    require_nonzero_pair(p, q, "inner");
    if (!h_outer.is_propagating()) {
        throw Error(ErrorKind::IncidentEvanescent, "incident wave must propagate in the outer guide");
    }
    const double ratio = kperp_sq(m, n, g.a, g.b) / kperp_sq(p, q, g.s, g.d);
    return ratio * h_inner.value() / h_outer.magnitude();
}

ConstraintCheck te_constraint(int m, int n, int p, int q, const GuideGeometry& g,
                              double rel_tol) {
    validate_mode(te(m, n));
    validate_mode(te(p, q));
    const double lhs = kperp_sq(m, n, g.a, g.b) * g.mu_r_inner;
    const double rhs = kperp_sq(p, q, g.s, g.d) * g.mu_r;
    const double residual = std::abs(lhs - rhs) / lhs;
    return {residual < rel_tol, residual};
}

ConstraintCheck tm_constraint(int m, int n, int p, int q, const GuideGeometry& g,
                              double rel_tol) {
    validate_mode(tm(m, n));
    validate_mode(tm(p, q));
    const double lhs = m * g.b * g.s * q;
    const double rhs = n * g.a * g.d * p;
    const double residual = std::abs(lhs - rhs) / lhs;
    return {residual < rel_tol, residual};
}

}  // namespace wgtunnel
