#include "mage/euler_op.hpp"

namespace mage {

FirstOrderLagrangian::FirstOrderLagrangian(const JetContext& ctx, Polynomial L)
    : density(std::move(L)) {
    if (!is_effective(ctx, lagrangian_form(ctx, density)))
        throw NotEffective(); // unreachable for polynomial densities; guards the invariant
}

DifferentialForm lagrangian_form(const JetContext& ctx, const Polynomial& L) {
    return ctx.beta.scaled(L);
}

DifferentialForm euler(const JetContext& ctx, const DifferentialForm& omega) {
    if (omega.degree() != ctx.n)
        throw WrongDegree("the Euler operator acts on forms of degree n");
    return d_p(ctx, bottom(ctx, d_p(ctx, omega))) + lie_reeb(ctx, omega);
}

DifferentialForm euler_first_order(const JetContext& ctx, const FirstOrderLagrangian& L) {
    return euler_first_order(ctx, L.density);
}

DifferentialForm euler_first_order(const JetContext& ctx, const Polynomial& L) {
    DifferentialForm result(ctx.gens, ctx.n);

    // The momentum-Hessian block carries (-1)^n: dp_mu ^ beta = (-1)^n beta ^ dp_mu
    // and bottom(beta ^ dp_mu) = (-1)^(n-1) beta_mu, so the composition
    // d_p bottom d_p picks up the parity of n. For even n it reduces to the
    // familiar B_{mu nu} beta_mu ^ dp_nu.
    const Rational parity(ctx.n % 2 ? -1 : 1);
    for (int mu = 1; mu <= ctx.n; ++mu) {
        const Polynomial dmu = L.derivative(VariableId::momentum(mu));
        for (int nu = 1; nu <= ctx.n; ++nu) {
            const Polynomial b = dmu.derivative(VariableId::momentum(nu)) * parity;
            if (b.is_zero()) continue;
            result = result +
                     wedge(ctx.beta_mu[mu - 1],
                           DifferentialForm::product(ctx.gens, {Generator::dp(nu)})).scaled(b);
        }
    }

    Polynomial source = L.derivative(VariableId::fiber());
    for (int mu = 1; mu <= ctx.n; ++mu) {
        const Polynomial dmu = L.derivative(VariableId::momentum(mu));
        source -= dmu.derivative(VariableId::coord(mu));
        source -= Polynomial::variable(VariableId::momentum(mu)) *
                  dmu.derivative(VariableId::fiber());
    }
    return result + ctx.beta.scaled(source);
}

} // namespace mage
