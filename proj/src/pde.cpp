#include "mage/pde.hpp"

#include <set>

namespace mage {

int jet_order(const JetPolynomial& p, const std::string& field) {
    int order = -1;
    p.for_each_variable([&](const JetVar& v) {
        if (v.kind == JetVar::Kind::Symbol && v.field == field)
            order = std::max(order, v.order());
    });
    return order;
}

JetPolynomial lift_to_jet(const Polynomial& p, const std::string& field) {
    return p.substitute<JetPolynomial>([&](const VariableId& v) {
        switch (v.kind) {
        case VarKind::BaseCoord: return JetPolynomial::variable(JetVar::coord(v.index));
        case VarKind::Fiber: return JetPolynomial::variable(JetVar::symbol(field));
        case VarKind::Momentum: return JetPolynomial::variable(JetVar::symbol(field, {v.index}));
        case VarKind::Parameter: return JetPolynomial::variable(JetVar::parameter(v.name));
        case VarKind::Extension:
        case VarKind::FieldValue: break;
        }
        throw ExtendedGeneratorPresent();
    });
}

namespace {

// Rows of the pullback matrix: row i lists the dq^nu components of the image
// of the i-th generator in the monomial. Expanding the wedge of the images is
// the determinant; dq rows are unit rows, so forced columns are consumed
// first and only the dp/du rows branch.
JetPolynomial pullback_determinant(const std::vector<std::vector<JetPolynomial>>& rows,
                                   std::vector<bool>& used, std::size_t i, int sign_so_far) {
    const std::size_t n = rows.size();
    if (i == n) return JetPolynomial::constant(Rational(sign_so_far));
    JetPolynomial total;
    int rel = 0; // position among the still-unused columns
    for (std::size_t col = 0; col < n; ++col) {
        if (used[col]) continue;
        const JetPolynomial& entry = rows[i][col];
        if (!entry.is_zero()) {
            used[col] = true;
            const int sign = (rel % 2) ? -1 : 1;
            total = total + entry * pullback_determinant(rows, used, i + 1, sign * sign_so_far);
            used[col] = false;
        }
        ++rel;
    }
    return total;
}

} // namespace

JetPolynomial extract_pde(const JetContext& ctx, const DifferentialForm& omega,
                          const std::string& field) {
    if (omega.degree() != ctx.n)
        throw WrongDegree("PDE extraction needs a form of degree n");
    if (omega.gens().has_de() || omega.gens().has_dphi() || !(omega.gens() == ctx.gens))
        throw ExtendedGeneratorPresent();

    const int n = ctx.n;
    JetPolynomial result;
    for (const auto& [mono, coeff] : omega.terms()) {
        std::vector<std::vector<JetPolynomial>> rows;
        for (int slot : mono.factors()) {
            const Generator g = ctx.gens.generator_at(slot);
            std::vector<JetPolynomial> row(n);
            switch (g.kind) {
            case Generator::Kind::DQ:
                row[g.index - 1] = JetPolynomial::constant(Rational(1));
                break;
            case Generator::Kind::DU:
                for (int nu = 1; nu <= n; ++nu)
                    row[nu - 1] = JetPolynomial::variable(JetVar::symbol(field, {nu}));
                break;
            case Generator::Kind::DP:
                for (int nu = 1; nu <= n; ++nu)
                    row[nu - 1] = JetPolynomial::variable(JetVar::symbol(field, {g.index, nu}));
                break;
            default:
                throw ExtendedGeneratorPresent();
            }
            rows.push_back(std::move(row));
        }
        std::vector<bool> used(n, false);
        result = result + lift_to_jet(coeff, field) * pullback_determinant(rows, used, 0, 1);
    }
    return result;
}

JetPolynomial total_derivative(const JetPolynomial& p, int mu) {
    std::set<JetVar> vars;
    p.for_each_variable([&](const JetVar& v) { vars.insert(v); });

    JetPolynomial r;
    for (const JetVar& v : vars) {
        const JetPolynomial dp = p.derivative(v);
        if (dp.is_zero()) continue;
        switch (v.kind) {
        case JetVar::Kind::Coord:
            if (v.index == mu) r = r + dp;
            break;
        case JetVar::Kind::Symbol: {
            std::vector<int> I = v.multi;
            I.push_back(mu);
            r = r + dp * JetPolynomial::variable(JetVar::symbol(v.field, std::move(I)));
            break;
        }
        case JetVar::Kind::Parameter:
            break;
        }
    }
    return r;
}

JetPolynomial euler_lagrange_field(const JetPolynomial& L, const std::string& field) {
    if (jet_order(L, field) > 2)
        throw OrderTooHigh("Euler-Lagrange expression implemented for jet order <= 2 in '" +
                           field + "'");

    std::set<JetVar> symbols;
    L.for_each_variable([&](const JetVar& v) {
        if (v.kind == JetVar::Kind::Symbol && v.field == field) symbols.insert(v);
    });

    JetPolynomial r;
    for (const JetVar& v : symbols) {
        JetPolynomial term = L.derivative(v);
        if (term.is_zero()) continue;
        for (int mu : v.multi) term = total_derivative(term, mu);
        r = r + (v.order() % 2 ? -term : term);
    }
    return r;
}

std::map<std::string, JetPolynomial> euler_lagrange_fields(
    const JetPolynomial& L, const std::vector<std::string>& fields) {
    std::map<std::string, JetPolynomial> r;
    for (const std::string& f : fields) r.emplace(f, euler_lagrange_field(L, f));
    return r;
}

JetPolynomial substitute_field(const JetPolynomial& p, const std::string& field,
                               const JetPolynomial& expr) {
    return p.substitute<JetPolynomial>([&](const JetVar& v) {
        if (v.kind != JetVar::Kind::Symbol || v.field != field)
            return JetPolynomial::variable(v);
        JetPolynomial image = expr;
        for (int mu : v.multi) image = total_derivative(image, mu);
        return image;
    });
}

} // namespace mage
