#pragma once

#include "mage/jet_context.hpp"

namespace mage {

// Sign convention relating the Euler operator to the classical variational
// derivative, pinned once for the whole project:
//
//   extract_pde(euler(ctx, L*beta)) == kEulerLagrangeSign *
//       ( dL/dphi - D_mu dL/dphi_mu )   after the substitution u -> phi,
//                                       p_mu -> phi_mu.
//
// Anchored by the 1D wave check: euler of L = 1/2(-p1^2 + c p2^2) is
// -dq2^dp1 - c dq1^dp2, whose extraction is phi_11 - c phi_22.
inline constexpr int kEulerLagrangeSign = +1;

// First-order Lagrangian density L(q, u, p); the associated n-form L*beta is
// effective (checked at construction).
struct FirstOrderLagrangian {
    Polynomial density;
    explicit FirstOrderLagrangian(const JetContext& ctx, Polynomial L);
};

// L * beta.
DifferentialForm lagrangian_form(const JetContext& ctx, const Polynomial& L);

// Euler operator d_p o bottom o d_p + L_chi, computed compositionally.
// Degree-preserving on n-forms; any other degree is an error.
DifferentialForm euler(const JetContext& ctx, const DifferentialForm& omega);

// Closed coordinate formula for euler(L*beta):
//   d2L/dp_mu dp_nu  beta_mu ^ dp_nu
//   - (d2L/dq^mu dp_mu + p_mu d2L/du dp_mu - dL/du) beta.
// This is the production path; the compositional definition above is kept as
// an independent route and the two are cross-checked in the test suite.
DifferentialForm euler_first_order(const JetContext& ctx, const FirstOrderLagrangian& L);
DifferentialForm euler_first_order(const JetContext& ctx, const Polynomial& L);

} // namespace mage
