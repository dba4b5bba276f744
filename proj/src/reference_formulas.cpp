#include "wgtunnel/reference_formulas.hpp"

#include <cmath>

#include "wgtunnel/constants.hpp"

namespace wgtunnel::reference {

namespace {
constexpr double c = kSpeedOfLight;
constexpr double pi = kPi;
}  // namespace

double te10_transmission_propagating(double omega, double a, double length, double eps_r) {
    const double w2 = omega * omega;
    const double cut = c * c * pi * pi / (a * a);
    const double num = 4.0 * (eps_r * w2 - cut) * (w2 - cut);
    const double sn = std::sin(length * std::sqrt(w2 / (c * c) - pi * pi / (a * a)));
    return num / ((eps_r - 1.0) * (eps_r - 1.0) * w2 * w2 * sn * sn + num);
}

double te10_transmission_evanescent(double omega, double a, double length, double eps_r) {
    const double w2 = omega * omega;
    const double cut = c * c * pi * pi / (a * a);
    const double num = 4.0 * (eps_r * w2 - cut) * (cut - w2);
    const double sh = std::sinh(length * std::sqrt(pi * pi / (a * a) - w2 / (c * c)));
    return num / ((eps_r - 1.0) * (eps_r - 1.0) * w2 * w2 * sh * sh + num);
}

double tm11_weight(double omega, double a, double b, double eps_mu) {
    const double w2 = omega * omega;
    const double ca = c * c * pi * pi / (a * a);
    const double cb = c * c * pi * pi / (b * b);
    return 4.0 * (eps_mu * w2 - ca - cb) * (w2 - 4.0 * ca - 4.0 * cb);
}

namespace {

double tm11_bracket(double omega, double a, double b, double eps_mu) {
    return omega * omega * (eps_mu - 1.0) + 3.0 * c * c * pi * pi * (1.0 / (a * a) + 1.0 / (b * b));
}

}  // namespace

double tm11_transmission_propagating(double omega, double a, double b, double length,
                                     double eps_mu) {
    const double weight = tm11_weight(omega, a, b, eps_mu);
    const double br = tm11_bracket(omega, a, b, eps_mu);
    const double sn = std::sin(length * std::sqrt(omega * omega / (c * c) -
                                                  4.0 * pi * pi / (a * a) - 4.0 * pi * pi / (b * b)));
    return weight / (br * br * sn * sn + weight);
}

double tm11_transmission_evanescent(double omega, double a, double b, double length,
                                    double eps_mu) {
    const double weight = tm11_weight(omega, a, b, eps_mu);
    const double br = tm11_bracket(omega, a, b, eps_mu);
    const double sh = std::sinh(length * std::sqrt(4.0 * pi * pi / (a * a) +
                                                   4.0 * pi * pi / (b * b) - omega * omega / (c * c)));
    return -weight / (br * br * sh * sh - weight);
}

}  // namespace wgtunnel::reference
