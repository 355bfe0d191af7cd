#pragma once

// Deterministic random generators shared by the unit and acceptance suites.
// Everything is seeded explicitly so failures reproduce.

#include "mage/euler_op.hpp"
#include "mage/jet_context.hpp"

#include <random>
#include <vector>

namespace mage::testutil {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int lo = -9, int hi = 9, int maxden = 4) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, maxden);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(Rng& rng, int lo = -9, int hi = 9, int maxden = 4) {
    Rational r;
    do {
        r = random_rational(rng, lo, hi, maxden);
    } while (r == 0);
    return r;
}

// Pool of chart variables for dimension n, optionally with parameters.
inline std::vector<VariableId> chart_variables(int n, const std::vector<std::string>& params = {}) {
    std::vector<VariableId> v;
    for (int mu = 1; mu <= n; ++mu) v.push_back(VariableId::coord(mu));
    v.push_back(VariableId::fiber());
    for (int mu = 1; mu <= n; ++mu) v.push_back(VariableId::momentum(mu));
    for (const auto& p : params) v.push_back(VariableId::parameter(p));
    return v;
}

inline Polynomial random_polynomial(Rng& rng, const std::vector<VariableId>& vars, int max_degree,
                                    int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> pick(0, vars.empty() ? 0 : vars.size() - 1);
    Polynomial p;
    const int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Monomial m;
        const int d = deg(rng);
        for (int j = 0; j < d && !vars.empty(); ++j)
            m = m * Monomial::variable(vars[pick(rng)]);
        p.add_term(m, random_rational(rng));
    }
    return p;
}

struct FormOptions {
    int max_terms = 3;
    int coeff_degree = 1;
    bool exclude_du = false;
    bool constant_coefficients = false;
    std::vector<std::string> params;
};

inline DifferentialForm random_form(Rng& rng, const JetContext& ctx, int degree,
                                    const FormOptions& opt = {}) {
    const auto monos = enumerate_monomials(ctx.gens, degree, opt.exclude_du);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    std::uniform_int_distribution<int> nterms(0, opt.max_terms);
    const auto vars = chart_variables(ctx.n, opt.params);
    DifferentialForm f(ctx.gens, degree);
    const int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Polynomial c = opt.constant_coefficients
                           ? Polynomial::constant(random_rational(rng))
                           : random_polynomial(rng, vars, opt.coeff_degree, 2);
        f.add_term(monos[pick(rng)], c);
    }
    return f;
}

inline DifferentialForm random_effective_constant_form(Rng& rng, const JetContext& ctx,
                                                       int degree, int max_terms = 3) {
    FormOptions opt;
    opt.max_terms = max_terms;
    opt.exclude_du = true;
    opt.constant_coefficients = true;
    for (int attempt = 0; attempt < 64; ++attempt) {
        DifferentialForm f = effective_part(ctx, random_form(rng, ctx, degree, opt));
        if (!f.is_zero()) return f;
    }
    return DifferentialForm::zero(ctx.gens, degree);
}

} // namespace mage::testutil
