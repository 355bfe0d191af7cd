#include "mage/jet_context.hpp"

#include "mage/linalg.hpp"

namespace mage {

JetContext make_jet_context(int n) {
    GeneratorSet gens = GeneratorSet::jet_chart(n);

    DifferentialForm contact = DifferentialForm::product(gens, {Generator::du()});
    for (int mu = 1; mu <= n; ++mu)
        contact = contact + DifferentialForm::product(
                                gens, {Generator::dq(mu)},
                                -Polynomial::variable(VariableId::momentum(mu)));

    std::vector<Generator> qs;
    for (int mu = 1; mu <= n; ++mu) qs.push_back(Generator::dq(mu));
    DifferentialForm beta = DifferentialForm::product(gens, qs);

    std::vector<DifferentialForm> beta_mu;
    for (int mu = 1; mu <= n; ++mu)
        beta_mu.push_back(contract_direction(gens.slot(Generator::dq(mu)), beta));

    PolyBiVector x_omega{gens, {}};
    for (int mu = 1; mu <= n; ++mu)
        x_omega.pairs.push_back({gens.slot(Generator::dq(mu)), gens.slot(Generator::dp(mu)),
                                 Polynomial::constant(Rational(1))});

    return JetContext{n,
                      gens,
                      contact,
                      ext_d(contact),
                      std::move(beta),
                      std::move(beta_mu),
                      PolyVectorField::direction(gens, Generator::du()),
                      std::move(x_omega)};
}

std::vector<ExtMonomial> enumerate_monomials(const GeneratorSet& gens, int degree,
                                             bool exclude_du) {
    std::vector<int> slots = gens.slots();
    if (exclude_du && gens.has_du())
        std::erase(slots, gens.slot(Generator::du()));
    std::vector<ExtMonomial> out;
    if (degree < 0 || degree > static_cast<int>(slots.size())) return out;

    std::vector<int> idx(degree);
    for (int i = 0; i < degree; ++i) idx[i] = i;
    while (true) {
        std::uint32_t bits = 0;
        for (int i : idx) bits |= std::uint32_t{1} << slots[i];
        out.push_back(ExtMonomial{bits});
        int i = degree - 1;
        while (i >= 0 && idx[i] == static_cast<int>(slots.size()) - degree + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < degree; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

DifferentialForm project(const JetContext& ctx, const DifferentialForm& a) {
    if (a.degree() == 0) return a;
    return a - wedge(ctx.contact, contract(ctx.reeb, a));
}

DifferentialForm d_p(const JetContext& ctx, const DifferentialForm& a) {
    return project(ctx, ext_d(a));
}

DifferentialForm bottom(const JetContext& ctx, const DifferentialForm& a) {
    return contract(ctx.x_omega, a);
}

DifferentialForm lie_reeb(const JetContext& ctx, const DifferentialForm& a) {
    DifferentialForm r = contract(ctx.reeb, ext_d(a));
    if (a.degree() > 0) r = r + ext_d(contract(ctx.reeb, a));
    return r;
}

std::optional<EffectivityWitness> effectivity_witness(const JetContext& ctx,
                                                      const DifferentialForm& a) {
    if (a.degree() > ctx.n) throw DegreeTooHigh();
    if (a.degree() > 0) {
        DifferentialForm chi = contract(ctx.reeb, a);
        if (!chi.is_zero())
            return EffectivityWitness{EffectivityWitness::Which::ReebContraction, std::move(chi)};
    }
    DifferentialForm bot = bottom(ctx, a);
    if (!bot.is_zero()) return EffectivityWitness{EffectivityWitness::Which::Bottom, std::move(bot)};
    return std::nullopt;
}

bool is_effective(const JetContext& ctx, const DifferentialForm& a) {
    return !effectivity_witness(ctx, a).has_value();
}

namespace {

bool reeb_degenerate(const JetContext& ctx, const DifferentialForm& a) {
    return a.degree() == 0 || contract(ctx.reeb, a).is_zero();
}

} // namespace

DifferentialForm hodge_lepage_residual(const JetContext& ctx, const DifferentialForm& a) {
    const int k = a.degree();
    if (k < 2 || k > ctx.n) throw WrongDegree("Hodge-Lepage residual needs 2 <= degree <= n");
    if (!reeb_degenerate(ctx, a)) throw NotDegenerateAlongReeb();

    const std::vector<ExtMonomial> basis = enumerate_monomials(ctx.gens, k - 2, true);
    const std::vector<ExtMonomial> rows = enumerate_monomials(ctx.gens, k - 2, true);

    QMatrix m(rows.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        DifferentialForm e(ctx.gens, k - 2);
        e.add_term(basis[j], Polynomial::constant(Rational(1)));
        const DifferentialForm col = bottom(ctx, wedge(e, ctx.symplectic));
        for (std::size_t i = 0; i < rows.size(); ++i)
            m.at(i, j) = col.coefficient(rows[i]).constant_value();
    }

    const DifferentialForm rhs_form = bottom(ctx, a);
    std::vector<Polynomial> rhs(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) rhs[i] = rhs_form.coefficient(rows[i]);

    auto sol = solve<Polynomial>(m, std::move(rhs));
    if (!sol) throw NoResidual();

    DifferentialForm x(ctx.gens, k - 2);
    for (std::size_t j = 0; j < basis.size(); ++j) x.add_term(basis[j], (*sol)[j]);
    return x;
}

DifferentialForm effective_part(const JetContext& ctx, const DifferentialForm& a) {
    const int k = a.degree();
    if (k > ctx.n) throw DegreeTooHigh();
    if (!reeb_degenerate(ctx, a)) throw NotDegenerateAlongReeb();
    if (k <= 1) return a;
    if (k == 2) {
        const Polynomial bot = bottom(ctx, a).coefficient(ExtMonomial{});
        return a - ctx.symplectic.scaled(bot * Rational(1, ctx.n));
    }
    return a - wedge(hodge_lepage_residual(ctx, a), ctx.symplectic);
}

} // namespace mage
