#pragma once

#include "mage/jet_context.hpp"
#include "mage/pde.hpp"

#include <optional>
#include <string>

namespace mage {

struct SynthesisOptions {
    // Chart-variable degree bound for coefficients; parameter exponents are
    // capped by the parameter degrees of the target equation.
    int coeff_degree = 2;
    // Cap on the support size of the minimal-term search.
    int max_terms = 8;
    // Node budget for the subset enumeration; on exhaustion the full linear
    // system decides existence and its particular solution is returned.
    long node_budget = 200000;
};

// Finds a du-free degree-n form whose PDE extraction equals `lhs` exactly.
// Coefficient degree is raised one stage at a time (constant coefficients
// first); within a stage the returned form has the minimal number of stored
// monomial terms, with ties broken by canonical column order. Returns nullopt
// when the target is not a Monge-Ampere expression of the searched class
// (order > 2, several fields, or no solution at the degree bound).
std::optional<DifferentialForm> synthesize_form(const JetContext& ctx, const JetPolynomial& lhs,
                                                const std::string& field = "phi",
                                                const SynthesisOptions& opt = {});

} // namespace mage
