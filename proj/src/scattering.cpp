#include "wgtunnel/scattering.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "wgtunnel/linalg.hpp"

namespace wgtunnel {

namespace {

constexpr cplx kI{0.0, 1.0};

void require_inputs(double h, double length) {
    if (!std::isfinite(h) || !(h > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "outer axial wavenumber must be real and > 0");
    }
    if (!std::isfinite(length) || !(length > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "section length must be finite and > 0");
    }
}

ScatteringCoefficients scaled(const ScatteringCoefficients& r, cplx k) {
    return {r.a1 * k, r.a2 * k, r.b1 * k, r.b2 * k, r.c * k};
}

}  // namespace

ScatteringCoefficients closed_form_coefficients(double h, const AxialWavenumber& h_inner,
                                                double length, cplx a1) {
    require_inputs(h, length);
    const cplx hp = h_inner.value();
    const double phase = h_inner.magnitude() * length;

    // g = e^{i h' L}, |g| <= 1 in both regimes.
    cplx g, g2, one_minus_g2, h2_minus_hp2;
    if (h_inner.is_propagating()) {
        g = std::polar(1.0, phase);
        g2 = std::polar(1.0, 2.0 * phase);
        one_minus_g2 = -2.0 * kI * std::sin(phase) * g;
        h2_minus_hp2 = (h - h_inner.magnitude()) * (h + h_inner.magnitude());
    } else {
        g = std::exp(-phase);
        g2 = std::exp(-2.0 * phase);
        one_minus_g2 = -std::expm1(-2.0 * phase);
        h2_minus_hp2 = h * h + h_inner.magnitude() * h_inner.magnitude();
    }

    const cplx denom = (h + hp) * (h + hp) - (h - hp) * (h - hp) * g2;
    if (std::abs(denom) < 1e-300) {
        throw Error(ErrorKind::SingularDenominator, "matching denominator vanished");
    }

    ScatteringCoefficients out;
    out.a1 = a1;
    out.c = 4.0 * h * hp * std::polar(1.0, -h * length) * g / denom * a1;
    out.a2 = h2_minus_hp2 * one_minus_g2 / denom * a1;
    out.b1 = 2.0 * h * (h + hp) / denom * a1;
    out.b2 = -2.0 * h * (h - hp) * g2 / denom * a1;
    return out;
}

ScatteringCoefficients solve_matching_system(double h, const AxialWavenumber& h_inner,
                                             double length, cplx a1) {
    require_inputs(h, length);
    const cplx hp = h_inner.value();
    const cplx ep = std::exp(kI * hp * length);   // e^{i h' L}
    const cplx em = std::exp(-kI * hp * length);  // e^{-i h' L}

    // unknowns: a2, b1, b2, x = c e^{ihL}; a1 = 1
    using Row = std::array<cplx, 4>;
    const std::array<Row, 4> m{{
        {1.0, -1.0, -1.0, 0.0},
        {-h, -hp, hp, 0.0},
        {0.0, -ep, -em, 1.0},
        {0.0, -hp * ep, hp * em, h},
    }};
    const Row rhs{-1.0, -h, 0.0, 0.0};
    const auto x = solve_dense<4>(m, rhs);

    ScatteringCoefficients unit{1.0, x[0], x[1], x[2], x[3] * std::polar(1.0, -h * length)};
    return scaled(unit, a1);
}

TransmissionResult transmission_reflection(double h, const AxialWavenumber& h_inner,
                                           double length) {
    require_inputs(h, length);
    const double k = h_inner.magnitude();
    double refl_term = 0.0;   // numerator of R
    double trans_term = 0.0;  // numerator of T
    if (h_inner.is_propagating()) {
        const double diff = (h - k) * (h + k);
        const double sn = std::sin(k * length);
        refl_term = diff * diff * sn * sn;
        trans_term = 4.0 * h * h * k * k;
    } else {
        // Both terms multiplied by 4 e^{-2 kappa L}.
        const double e2 = std::exp(-2.0 * k * length);
        const double om = -std::expm1(-2.0 * k * length);
        const double sum = h * h + k * k;
        refl_term = sum * sum * om * om;
        trans_term = 16.0 * h * h * k * k * e2;
    }
    const double denom = refl_term + trans_term;
    TransmissionResult out;
    out.regime = h_inner.regime();
    if (trans_term <= refl_term) {
        out.T = trans_term / denom;
        out.R = 1.0 - out.T;
    } else {
        out.R = refl_term / denom;
        out.T = 1.0 - out.R;
    }
    return out;
}

ScatterResult scatter(const ModeIndex& incident, const ModeIndex& inner, const GuideGeometry& g,
                      double omega, const ScatterOptions& opts) {
    validate_geometry(g);
    validate_mode(incident);
    validate_mode(inner);
    if (incident.polarization != inner.polarization) {
        throw Error(ErrorKind::PolarizationMismatch,
                    to_string(incident) + " cannot couple to " + to_string(inner) +
                        ": TE and TM modes are orthogonal");
    }
    const bool is_te = incident.polarization == Polarization::TE;

    const auto constraint =
        is_te ? te_constraint(incident.m, incident.n, inner.m, inner.n, g, opts.constraint_tol)
              : tm_constraint(incident.m, incident.n, inner.m, inner.n, g, opts.constraint_tol);
    if (!constraint.satisfied && !opts.allow_constraint_violation) {
        std::ostringstream msg;
        msg << to_string(incident) << " -> " << to_string(inner)
            << " residual=" << constraint.residual;
        throw Error(ErrorKind::ConstraintViolated, msg.str());
    }

    const auto h_outer = try_axial_wavenumber(omega, incident, g.a, g.b, g.eps_r, g.mu_r);
    if (!h_outer || !h_outer->is_propagating()) {
        std::ostringstream msg;
        msg << to_string(incident) << " does not propagate at omega=" << omega << " rad/s";
        throw Error(ErrorKind::IncidentCutOff, msg.str());
    }
    const auto h_inner =
        axial_wavenumber(omega, inner, g.s, g.d, g.eps_r_inner, g.mu_r_inner);

    CouplingFactors coupling;
    coupling.gamma = gamma_coupling(incident.m, incident.n, inner.m, inner.n, g);
    if (!is_te) {
        coupling.lambda =
            lambda_coupling(incident.m, incident.n, inner.m, inner.n, g, *h_outer, h_inner);
    }

    const double h = h_outer->magnitude();
    const auto unit = closed_form_coefficients(h, h_inner, g.length, 1.0);

    ScatterResult out{transmission_reflection(h, h_inner, g.length),
                      *h_outer,
                      h_inner,
                      coupling,
                      scaled(unit, coupling.gamma * opts.amplitude),
                      {},
                      constraint.residual,
                      constraint.satisfied};

    const cplx a1 = opts.amplitude;
    const cplx b_factor = is_te ? cplx(coupling.gamma) : coupling.gamma / *coupling.lambda;
    out.physical = {a1, unit.a2 * a1, unit.b1 * b_factor * a1, unit.b2 * b_factor * a1,
                    unit.c * a1};
    return out;
}

double poynting_z(const FieldSample& f) {
    return 0.5 * (f.ex * std::conj(f.hy) - f.ey * std::conj(f.hx)).real();
}

}  // namespace wgtunnel
