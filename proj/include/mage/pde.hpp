#pragma once

#include "mage/jet_context.hpp"
#include "mage/jet_poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace mage {

// Monge-Ampere operator: the formal pullback of a degree-n form along the
// first prolongation of `field`,
//   u -> phi, p_mu -> phi_mu, du -> phi_nu dq^nu, dp_mu -> s_{mu nu} dq^nu,
// returning the coefficient of the base volume form. Requires the unextended
// jet chart generators.
JetPolynomial extract_pde(const JetContext& ctx, const DifferentialForm& omega,
                          const std::string& field = "phi");

// The j1-substitution of a chart polynomial: q -> q, u -> phi, p_mu -> phi_mu.
JetPolynomial lift_to_jet(const Polynomial& p, const std::string& field = "phi");

// Total derivative D_mu: d/dq^mu plus the chain rule through every jet
// symbol; raises the jet order by at most one.
JetPolynomial total_derivative(const JetPolynomial& p, int mu);

// Classical Euler-Lagrange expression for one field of a Lagrangian of jet
// order <= 2 in that field:
//   sum over sorted multiindices I, |I| <= 2, of (-1)^|I| D_I dL/d(field_I).
JetPolynomial euler_lagrange_field(const JetPolynomial& L, const std::string& field);

std::map<std::string, JetPolynomial> euler_lagrange_fields(const JetPolynomial& L,
                                                           const std::vector<std::string>& fields);

// Replace every jet symbol a_I of `field` by the correspondingly
// differentiated expression D_I(expr).
JetPolynomial substitute_field(const JetPolynomial& p, const std::string& field,
                               const JetPolynomial& expr);

} // namespace mage
