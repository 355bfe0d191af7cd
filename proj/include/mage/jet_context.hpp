#pragma once

#include "mage/exterior.hpp"

#include <optional>
#include <vector>

namespace mage {

// The distinguished objects of a Darboux chart on the first jet space:
// contact form c = du - p_mu dq^mu, Reeb field chi = d/du, symplectic form
// Omega = d c = dq^mu ^ dp_mu, the bivector X_Omega = d/dq^mu ^ d/dp_mu dual
// to Omega, the base volume beta and its contractions beta_mu.
struct JetContext {
    int n = 0;
    GeneratorSet gens;
    DifferentialForm contact;
    DifferentialForm symplectic;
    DifferentialForm beta;
    std::vector<DifferentialForm> beta_mu; // beta_mu[mu-1] = d/dq^mu -| beta
    PolyVectorField reeb;
    PolyBiVector x_omega;
};

JetContext make_jet_context(int n);

// All degree-d monomials over the chart generators, optionally without du.
std::vector<ExtMonomial> enumerate_monomials(const GeneratorSet& gens, int degree,
                                             bool exclude_du = false);

// p(a) = a - c ^ (chi -| a); idempotent, image degenerate along the Reeb field.
DifferentialForm project(const JetContext& ctx, const DifferentialForm& a);

// Projected exterior derivative p(d a).
DifferentialForm d_p(const JetContext& ctx, const DifferentialForm& a);

// Bottom operator: X_Omega -| a, with the convention bottom(Omega) = n.
// Zero on degree <= 1.
DifferentialForm bottom(const JetContext& ctx, const DifferentialForm& a);

// Lie derivative along the Reeb field via the Cartan formula.
DifferentialForm lie_reeb(const JetContext& ctx, const DifferentialForm& a);

struct EffectivityWitness {
    enum class Which { ReebContraction, Bottom };
    Which which;
    DifferentialForm value;
};

// nullopt iff chi -| a = 0 and bottom(a) = 0 identically; otherwise the first
// nonzero contraction. Degree must not exceed n.
std::optional<EffectivityWitness> effectivity_witness(const JetContext& ctx,
                                                      const DifferentialForm& a);
bool is_effective(const JetContext& ctx, const DifferentialForm& a);

// The x of the Hodge-Lepage decomposition a = a_eff + x ^ Omega, solved by
// exact linear algebra over the monomial coefficients (the structure maps
// e -> bottom(e ^ Omega) have constant coefficients, so the system is
// rational with polynomial right-hand side). Requires chi -| a = 0 and
// 2 <= degree <= n; the canonical solution with free coordinates zero is
// returned, which for degree 4 agrees with the closed formula
// x = bottom(a)/(n-2) - bottom^2(a)/(2(n-1)(n-2)) Omega.
DifferentialForm hodge_lepage_residual(const JetContext& ctx, const DifferentialForm& a);

// Unique effective part of a Reeb-degenerate form: degree <= 1 forms are
// already effective, degree 2 uses a - (bottom(a)/n) Omega, higher degrees
// subtract the residual: a - x ^ Omega.
DifferentialForm effective_part(const JetContext& ctx, const DifferentialForm& a);

} // namespace mage
