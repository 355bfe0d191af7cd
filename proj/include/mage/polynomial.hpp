#pragma once

#include "mage/errors.hpp"
#include "mage/rational.hpp"
#include "mage/variables.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace mage {

// Sparse exponent vector over an ordered variable type. Entries with zero
// exponent are never stored, so structural equality is canonical.
template <class Var>
struct MonomialT {
    std::map<Var, int> exps;

    static MonomialT one() { return {}; }

    static MonomialT variable(const Var& v, int e = 1) {
        MonomialT m;
        if (e != 0) m.exps.emplace(v, e);
        return m;
    }

    int degree() const {
        int d = 0;
        for (const auto& [v, e] : exps) d += e;
        return d;
    }

    template <class Pred>
    int degree_where(Pred keep) const {
        int d = 0;
        for (const auto& [v, e] : exps)
            if (keep(v)) d += e;
        return d;
    }

    int exponent(const Var& v) const {
        auto it = exps.find(v);
        return it == exps.end() ? 0 : it->second;
    }

    MonomialT operator*(const MonomialT& o) const {
        MonomialT r = *this;
        for (const auto& [v, e] : o.exps) {
            int& slot = r.exps[v];
            slot += e;
            if (slot == 0) r.exps.erase(v);
        }
        return r;
    }

    friend bool operator==(const MonomialT&, const MonomialT&) = default;
};

// Three-way lexicographic comparison of exponent vectors in ascending
// variable order; a higher exponent on an earlier variable wins.
template <class Var>
int lex_compare(const MonomialT<Var>& a, const MonomialT<Var>& b) {
    auto ia = a.exps.begin(), ib = b.exps.begin();
    while (ia != a.exps.end() || ib != b.exps.end()) {
        if (ia == a.exps.end()) return -1; // a has exponent 0 at b's next variable
        if (ib == b.exps.end()) return 1;
        if (ia->first < ib->first) return 1;
        if (ib->first < ia->first) return -1;
        if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
        ++ia, ++ib;
    }
    return 0;
}

// Graded-lexicographic term order, descending, so maps iterate leading term
// first and printing is deterministic.
template <class Var>
struct GradedLexDesc {
    bool operator()(const MonomialT<Var>& a, const MonomialT<Var>& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return lex_compare(a, b) > 0;
    }
};

// Exact multivariate polynomial over the rationals. Values are immutable in
// spirit: all operations return fresh polynomials, nothing is mutated through
// the public surface, so concurrent readers need no coordination.
template <class Var>
class PolynomialT {
public:
    using Monomial = MonomialT<Var>;
    using TermMap = std::map<Monomial, Rational, GradedLexDesc<Var>>;

    PolynomialT() = default;

    static PolynomialT zero() { return {}; }

    static PolynomialT constant(Rational c) {
        PolynomialT p;
        if (c != 0) p.terms_.emplace(Monomial::one(), std::move(c));
        return p;
    }

    static PolynomialT variable(const Var& v, int e = 1) {
        PolynomialT p;
        p.terms_.emplace(Monomial::variable(v, e), Rational(1));
        return p;
    }

    static PolynomialT term(Monomial m, Rational c) {
        PolynomialT p;
        if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.exps.empty());
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        auto it = terms_.find(Monomial::one());
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const TermMap& terms() const { return terms_; }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    template <class Pred>
    int degree_where(Pred keep) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree_where(keep));
        return d;
    }

    int degree_in(const Var& v) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
        return d;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    PolynomialT operator+(const PolynomialT& o) const {
        PolynomialT r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    PolynomialT operator-() const {
        PolynomialT r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    PolynomialT operator-(const PolynomialT& o) const { return *this + (-o); }

    PolynomialT operator*(const PolynomialT& o) const {
        PolynomialT r;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    PolynomialT operator*(const Rational& c) const {
        if (c == 0) return {};
        PolynomialT r = *this;
        for (auto& [m, coeff] : r.terms_) coeff *= c;
        return r;
    }

    PolynomialT& operator+=(const PolynomialT& o) { return *this = *this + o; }
    PolynomialT& operator-=(const PolynomialT& o) { return *this = *this - o; }
    PolynomialT& operator*=(const PolynomialT& o) { return *this = *this * o; }

    PolynomialT pow(int e) const {
        PolynomialT r = constant(Rational(1));
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    // Exact partial derivative. Parameters count as ordinary variables here;
    // only the exterior derivative treats them as constants.
    PolynomialT derivative(const Var& v) const {
        PolynomialT r;
        for (const auto& [m, c] : terms_) {
            int e = m.exponent(v);
            if (e == 0) continue;
            Monomial dm = m;
            if (e == 1)
                dm.exps.erase(v);
            else
                dm.exps[v] = e - 1;
            r.add_term(dm, c * e);
        }
        return r;
    }

    Rational eval(const std::map<Var, Rational>& assignment) const {
        Rational total(0);
        for (const auto& [m, c] : terms_) {
            Rational v = c;
            for (const auto& [var, e] : m.exps) {
                auto it = assignment.find(var);
                if (it == assignment.end()) throw MissingAssignment(var.text());
                for (int i = 0; i < e; ++i) v *= it->second;
            }
            total += v;
        }
        return total;
    }

    // Ring homomorphism determined by a variable image map. Used for the
    // prolongation pullback (u -> phi, p_mu -> phi_mu) and the Hamiltonian
    // n-curve substitutions.
    template <class OutPoly, class Fn>
    OutPoly substitute(Fn image) const {
        OutPoly total;
        for (const auto& [m, c] : terms_) {
            OutPoly t = OutPoly::constant(c);
            for (const auto& [var, e] : m.exps) t = t * image(var).pow(e);
            total = total + t;
        }
        return total;
    }

    template <class Fn>
    void for_each_variable(Fn fn) const {
        for (const auto& [m, c] : terms_)
            for (const auto& [var, e] : m.exps) fn(var);
    }

    friend bool operator==(const PolynomialT&, const PolynomialT&) = default;

private:
    TermMap terms_;
};

template <class Var>
PolynomialT<Var> operator*(const Rational& c, const PolynomialT<Var>& p) {
    return p * c;
}

// The coefficient ring of all differential forms on the chart.
using Polynomial = PolynomialT<VariableId>;
using Monomial = MonomialT<VariableId>;

// Degree in chart variables only; parameters are named constants and do not
// count toward search bounds.
inline int chart_degree(const Polynomial& p) {
    return p.degree_where([](const VariableId& v) { return !v.is_parameter(); });
}

} // namespace mage
