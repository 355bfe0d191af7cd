#include "mage/synthesize.hpp"

#include "mage/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mage {
namespace {

struct Column {
    ExtMonomial mono;
    Monomial coeff;
    JetPolynomial extraction;
};

// Coefficient monomials: chart degree <= chart_bound over {q, u, p}, each
// parameter exponent individually capped.
void enumerate_coeff_monomials(const std::vector<VariableId>& vars, std::size_t i, int chart_left,
                               const std::map<std::string, int>& param_caps, Monomial current,
                               std::vector<Monomial>& out) {
    if (i == vars.size()) {
        out.push_back(std::move(current));
        return;
    }
    const VariableId& v = vars[i];
    const int cap = v.is_parameter() ? param_caps.at(v.name) : chart_left;
    for (int e = 0; e <= cap; ++e) {
        Monomial m = current;
        if (e > 0) m = m * Monomial::variable(v, e);
        enumerate_coeff_monomials(vars, i + 1, v.is_parameter() ? chart_left : chart_left - e,
                                  param_caps, std::move(m), out);
    }
}

struct CoverSearch {
    const std::vector<Column>& cols;
    const std::vector<JetMonomial>& targets;
    const JetPolynomial& lhs;
    int support_size = 0;
    long budget = 0;
    std::map<JetMonomial, std::vector<std::size_t>, GradedLexDesc<JetVar>> covering;
    std::set<std::vector<std::size_t>> tried;
    std::vector<std::vector<std::size_t>> feasible;
    bool budget_exhausted = false;

    bool solves(const std::vector<std::size_t>& support) {
        // rows: union of jet monomials over chosen columns and the target
        std::map<JetMonomial, std::size_t, GradedLexDesc<JetVar>> row_of;
        auto add_rows = [&](const JetPolynomial& p) {
            for (const auto& [m, c] : p.terms())
                row_of.emplace(m, row_of.size());
        };
        add_rows(lhs);
        for (std::size_t j : support) add_rows(cols[j].extraction);

        QMatrix m(row_of.size(), support.size());
        for (std::size_t jj = 0; jj < support.size(); ++jj)
            for (const auto& [jm, c] : cols[support[jj]].extraction.terms())
                m.at(row_of.at(jm), jj) = c;
        std::vector<Rational> rhs(row_of.size(), Rational(0));
        for (const auto& [jm, c] : lhs.terms()) rhs[row_of.at(jm)] = c;

        auto sol = solve<Rational>(m, std::move(rhs));
        if (!sol) return false;
        last_solution = *sol;
        return true;
    }

    std::vector<Rational> last_solution;

    void run(std::vector<std::size_t>& chosen, std::size_t filler_lo) {
        if (budget_exhausted || --budget < 0) {
            budget_exhausted = true;
            return;
        }
        if (static_cast<int>(chosen.size()) == support_size) {
            std::vector<std::size_t> sorted = chosen;
            std::sort(sorted.begin(), sorted.end());
            if (!tried.insert(sorted).second) return;
            if (covered_all(chosen) && solves(sorted)) feasible.push_back(sorted);
            return;
        }
        // first target monomial not covered by the chosen columns
        const JetMonomial* uncovered = nullptr;
        for (const auto& t : targets) {
            bool cov = false;
            for (std::size_t j : chosen)
                if (cols[j].extraction.terms().count(t)) {
                    cov = true;
                    break;
                }
            if (!cov) {
                uncovered = &t;
                break;
            }
        }
        if (uncovered) {
            for (std::size_t j : covering.at(*uncovered)) {
                if (std::find(chosen.begin(), chosen.end(), j) != chosen.end()) continue;
                chosen.push_back(j);
                run(chosen, filler_lo);
                chosen.pop_back();
                if (budget_exhausted) return;
            }
        } else {
            // all covered: remaining slots take cancellation helpers, chosen
            // in ascending order among themselves (any index is allowed; the
            // leaf-level dedup absorbs overlap with cover columns)
            for (std::size_t j = filler_lo; j < cols.size(); ++j) {
                if (std::find(chosen.begin(), chosen.end(), j) != chosen.end()) continue;
                chosen.push_back(j);
                run(chosen, j + 1);
                chosen.pop_back();
                if (budget_exhausted) return;
            }
        }
    }

    bool covered_all(const std::vector<std::size_t>& chosen) const {
        for (const auto& t : targets) {
            bool cov = false;
            for (std::size_t j : chosen)
                if (cols[j].extraction.terms().count(t)) {
                    cov = true;
                    break;
                }
            if (!cov) return false;
        }
        return true;
    }
};

DifferentialForm assemble(const JetContext& ctx, const std::vector<Column>& cols,
                          const std::vector<std::size_t>& support,
                          const std::vector<Rational>& weights) {
    DifferentialForm f(ctx.gens, ctx.n);
    for (std::size_t i = 0; i < support.size(); ++i)
        f.add_term(cols[support[i]].mono, Polynomial::term(cols[support[i]].coeff, weights[i]));
    return f;
}

} // namespace

std::optional<DifferentialForm> synthesize_form(const JetContext& ctx, const JetPolynomial& lhs,
                                                const std::string& field,
                                                const SynthesisOptions& opt) {
    if (lhs.is_zero()) return DifferentialForm::zero(ctx.gens, ctx.n);

    // searched class: order <= 2, one field
    bool representable = true;
    std::map<std::string, int> param_caps;
    lhs.for_each_variable([&](const JetVar& v) {
        if (v.kind == JetVar::Kind::Symbol && (v.field != field || v.order() > 2))
            representable = false;
    });
    if (!representable) return std::nullopt;
    lhs.for_each_variable([&](const JetVar& v) {
        if (v.is_parameter()) param_caps.emplace(v.param, lhs.degree_in(v));
    });

    std::vector<VariableId> coeff_vars = [&] {
        std::vector<VariableId> vars;
        for (int mu = 1; mu <= ctx.n; ++mu) vars.push_back(VariableId::coord(mu));
        vars.push_back(VariableId::fiber());
        for (int mu = 1; mu <= ctx.n; ++mu) vars.push_back(VariableId::momentum(mu));
        for (const auto& [name, cap] : param_caps) vars.push_back(VariableId::parameter(name));
        return vars;
    }();

    const std::vector<ExtMonomial> ext_monos = enumerate_monomials(ctx.gens, ctx.n, true);
    std::vector<JetMonomial> targets;
    for (const auto& [m, c] : lhs.terms()) targets.push_back(m);

    for (int stage = 0; stage <= opt.coeff_degree; ++stage) {
        std::vector<Monomial> coeff_monos;
        enumerate_coeff_monomials(coeff_vars, 0, stage, param_caps, Monomial::one(), coeff_monos);
        std::sort(coeff_monos.begin(), coeff_monos.end(), [](const Monomial& a, const Monomial& b) {
            if (a.degree() != b.degree()) return a.degree() < b.degree();
            return lex_compare(a, b) < 0;
        });

        std::vector<Column> cols;
        for (const Monomial& cm : coeff_monos)
            for (const ExtMonomial& em : ext_monos) {
                DifferentialForm f(ctx.gens, ctx.n);
                f.add_term(em, Polynomial::term(cm, Rational(1)));
                JetPolynomial ex = extract_pde(ctx, f, field);
                if (!ex.is_zero()) cols.push_back({em, cm, std::move(ex)});
            }

        // cover lists; a target monomial no column contains is unreachable at
        // this stage
        CoverSearch search{cols, targets, lhs};
        bool reachable = true;
        for (const auto& t : targets) {
            auto& list = search.covering[t];
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (cols[j].extraction.terms().count(t)) list.push_back(j);
            if (list.empty()) reachable = false;
        }
        if (!reachable) continue;

        bool exhausted = false;
        for (int s = 1; s <= std::min<int>(opt.max_terms, static_cast<int>(cols.size())); ++s) {
            search.support_size = s;
            search.budget = opt.node_budget;
            search.budget_exhausted = false;
            search.tried.clear();
            search.feasible.clear();
            std::vector<std::size_t> chosen;
            search.run(chosen, 0);
            if (!search.feasible.empty()) {
                std::sort(search.feasible.begin(), search.feasible.end());
                const auto& best = search.feasible.front();
                search.solves(best); // repopulate last_solution for the winner
                return assemble(ctx, cols, best, search.last_solution);
            }
            if (search.budget_exhausted) {
                exhausted = true;
                break;
            }
        }

        // The full system decides existence at the last stage (stages are
        // cumulative) and supplies the fallback answer after a budget abort;
        // skipping it at intermediate stages only defers to a later stage.
        if (!exhausted && stage < opt.coeff_degree) continue;

        std::map<JetMonomial, std::size_t, GradedLexDesc<JetVar>> row_of;
        for (const auto& c : cols)
            for (const auto& [m, w] : c.extraction.terms()) row_of.emplace(m, row_of.size());
        for (const auto& [m, w] : lhs.terms()) row_of.emplace(m, row_of.size());

        QMatrix m(row_of.size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (const auto& [jm, w] : cols[j].extraction.terms()) m.at(row_of.at(jm), j) = w;
        std::vector<Rational> rhs(row_of.size(), Rational(0));
        for (const auto& [jm, w] : lhs.terms()) rhs[row_of.at(jm)] = w;

        if (auto sol = solve<Rational>(m, std::move(rhs))) {
            std::vector<std::size_t> support;
            std::vector<Rational> weights;
            for (std::size_t j = 0; j < cols.size(); ++j)
                if ((*sol)[j] != 0) {
                    support.push_back(j);
                    weights.push_back((*sol)[j]);
                }
            return assemble(ctx, cols, support, weights);
        }
    }
    return std::nullopt;
}

} // namespace mage
