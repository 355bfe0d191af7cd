#pragma once

#include "mage/exterior.hpp"
#include "mage/jet_poly.hpp"
#include "mage/parser.hpp"

#include <json.hpp>

#include <string>

namespace mage {

enum class Format { Text, Json, Latex };

inline constexpr int kSchemaVersion = 1;

// Canonical, re-parseable text. Terms appear in canonical monomial order;
// parameters print before chart variables inside a monomial.
std::string to_text(const Polynomial& p);
std::string to_text(const JetPolynomial& p);
std::string to_text(const DifferentialForm& f);

// LaTeX in the d^{..}_{..} shorthand; monomials sharing a coefficient are
// grouped, e.g. -d^{1234} + \frac{1}{3}(d^{12}_{12}+d^{34}_{34}) - ...
std::string to_latex(const Rational& r);
std::string to_latex(const Polynomial& p);
std::string to_latex(const JetPolynomial& p);
std::string to_latex(const DifferentialForm& f);

nlohmann::json to_json(const DifferentialForm& f);
nlohmann::json to_json(const JetPolynomial& p, int n);

// Inverse of to_json: the document carries its own dimension and parameters.
DifferentialForm form_from_json(const nlohmann::json& j);
JetPolynomial jet_polynomial_from_json(const nlohmann::json& j);

} // namespace mage
