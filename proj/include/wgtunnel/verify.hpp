#pragma once

#include <functional>

#include "wgtunnel/modes.hpp"
#include "wgtunnel/quadrature.hpp"

namespace wgtunnel {

// Families of separable cross-section basis functions:
//   G1 = cos(m pi x/a) sin(n pi y/b)    G2 = sin(m pi x/a) cos(n pi y/b)
//   G3 = cos(m pi x/a) cos(n pi y/b)    G4 = sin(m pi x/a) sin(n pi y/b)
enum class BasisFamily { G1, G2, G3, G4 };

struct BasisFunctionId {
    BasisFamily family = BasisFamily::G4;
    int m = 1;
    int n = 1;
};

/// Physical: [0,a] x [0,b], where same-family products integrate to
/// (ab/4) delta delta for nonzero indices. Extended: [-a,a] x [-b,b], where
/// any two families integrate to ab delta delta delta_ij.
enum class BasisDomain { Physical, Extended };

[[nodiscard]] double basis_value(const BasisFunctionId& g, double a, double b, double x, double y);

[[nodiscard]] double basis_orthonormality(const BasisFunctionId& i, const BasisFunctionId& j,
                                          double a, double b, int order = kDefaultQuadOrder,
                                          BasisDomain domain = BasisDomain::Physical);

/// Integral of psi_lhs^dagger psi_rhs over the cross section at z = 0, t = 0.
/// Both fields must live in the same width x height guide.
[[nodiscard]] cplx spinor_inner_product(const ModeField& lhs, const ModeField& rhs,
                                        int order = kDefaultQuadOrder);

/// |<psi_TE, psi_TM>| / (||psi_TE|| ||psi_TM||) for two modes of the same
/// a x b guide at frequency omega (either regime, not at cutoff).
[[nodiscard]] double te_tm_orthogonality(const ModeIndex& te_mode, const ModeIndex& tm_mode,
                                         double a, double b, Medium medium, double omega,
                                         int order = kDefaultQuadOrder);

enum class CompletenessFamily { Cosine, Sine };

/// sum_{m=1}^{M} k_m(x) <k_m, phi> with k_m = cos or sin(m pi x / a), the
/// projections taken by Gauss-Legendre on [0, a]. order <= 0 picks 4M + 64.
[[nodiscard]] double completeness_partial_sum(CompletenessFamily family, int max_index,
                                              const std::function<double(double)>& phi, double x,
                                              double a, int order = 0);

/// |partial sum - limit|, where the limit is (a/2) phi(x) for the sine family
/// and (a phi(x) - integral of phi) / 2 for the cosine family (the m = 0
/// term is excluded from the sum).
[[nodiscard]] double completeness_residual(CompletenessFamily family, int max_index,
                                           const std::function<double(double)>& phi, double x,
                                           double a, int order = 0);

}  // namespace wgtunnel
