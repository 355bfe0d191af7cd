#pragma once

#include "mage/exterior.hpp"
#include "mage/jet_poly.hpp"

#include <string>
#include <vector>

namespace mage {

// Dimension and declared parameter names shared by all text inputs of one
// invocation.
struct ParseContext {
    int n = 4;
    std::vector<std::string> params;

    bool is_param(const std::string& name) const {
        for (const auto& p : params)
            if (p == name) return true;
        return false;
    }
};

Rational parse_rational(const std::string& text);

// Chart polynomial: integers, rationals a/b, variables q1..qn, u, p1..pn, e,
// phi, declared parameters, operators + - * ^ and parentheses.
Polynomial parse_polynomial(const std::string& text, const ParseContext& ctx);

// Jet polynomial: same arithmetic over field symbols (phi, phi_1, psi_12, ...),
// base coordinates q1..qn and parameters.
JetPolynomial parse_jet_polynomial(const std::string& text, const ParseContext& ctx);

// Differential form DSL:
//   form  := ["+"|"-"] term (("+"|"-") term)*
//   term  := (polyfactor "*")* [mono]
//   mono  := atom ("^" atom)*
//   atom  := dq<i> | du | dp<i> | de | dphi | beta | beta_<i> | Omega
//          | contact | d[i,...;j,...]
// d[a,b;c,d] denotes dq^a^dq^b^dp_c^dp_d (either index list may be empty).
// The chart is inferred: dphi selects the covariant phase space chart
// {dq,dp,de,dphi}, otherwise de extends the jet chart, otherwise the plain
// jet chart {dq,du,dp} is used; du and dphi cannot be mixed.
DifferentialForm parse_form(const std::string& text, const ParseContext& ctx);

} // namespace mage
