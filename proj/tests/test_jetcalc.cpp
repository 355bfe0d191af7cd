#include "testutil.hpp"

#include <doctest.h>

using namespace mage;
using testutil::Rng;

namespace {

Polynomial pconst(long num, long den = 1) { return Polynomial::constant(Rational(num, den)); }

// dq^{a...} ^ dp_{b...} with unit coefficient.
DifferentialForm dqdp(const JetContext& ctx, std::vector<int> qs, std::vector<int> ps,
                      Rational c = Rational(1)) {
    std::vector<Generator> gs;
    for (int a : qs) gs.push_back(Generator::dq(a));
    for (int b : ps) gs.push_back(Generator::dp(b));
    return DifferentialForm::product(ctx.gens, gs, Polynomial::constant(c));
}

// The corrected first heavenly representation dq1^dq2^dp1^dp2 - beta.
DifferentialForm plebanski1_rep(const JetContext& ctx) {
    return dqdp(ctx, {1, 2}, {1, 2}) - ctx.beta;
}

// -beta_1 ^ dp1 + sum_{mu>=2} beta_mu ^ dp_mu + m^2 u beta.
DifferentialForm klein_gordon_form(const JetContext& ctx) {
    const Polynomial m = Polynomial::variable(VariableId::parameter("m"));
    const Polynomial uu = Polynomial::variable(VariableId::fiber());
    DifferentialForm f(ctx.gens, 4);
    for (int mu = 1; mu <= 4; ++mu) {
        auto t = wedge(ctx.beta_mu[mu - 1],
                       DifferentialForm::product(ctx.gens, {Generator::dp(mu)}));
        f = f + (mu == 1 ? -t : t);
    }
    return f + ctx.beta.scaled(m * m * uu);
}

} // namespace

TEST_CASE("projection: contact dies, Reeb-degenerate forms are fixed") {
    const JetContext ctx = make_jet_context(4);
    CHECK(project(ctx, ctx.contact).is_zero());
    CHECK(project(ctx, ctx.beta) == ctx.beta);

    // project(m^2 du^beta) equals m^2 p_mu dq^mu ^ beta -- the zero form,
    // since every dq^mu already occurs in beta.
    const Polynomial m = Polynomial::variable(VariableId::parameter("m"));
    const auto du_beta =
        wedge(DifferentialForm::product(ctx.gens, {Generator::du()}), ctx.beta).scaled(m * m);
    DifferentialForm stated(ctx.gens, 5);
    for (int mu = 1; mu <= 4; ++mu)
        stated = stated + wedge(DifferentialForm::product(
                                    ctx.gens, {Generator::dq(mu)},
                                    m * m * Polynomial::variable(VariableId::momentum(mu))),
                                ctx.beta);
    CHECK(project(ctx, du_beta) == stated);
    CHECK(stated.is_zero());
    CHECK(project(ctx, du_beta).is_zero());
}

TEST_CASE("projection is idempotent with Reeb-degenerate image on random forms") {
    Rng rng(11);
    for (int n : {2, 3, 4}) {
        const JetContext ctx = make_jet_context(n);
        std::uniform_int_distribution<int> deg(1, n);
        for (int i = 0; i < 200; ++i) {
            const auto a = testutil::random_form(rng, ctx, deg(rng));
            const auto pa = project(ctx, a);
            CHECK(project(ctx, pa) == pa);
            if (pa.degree() > 0) CHECK(contract(ctx.reeb, pa).is_zero());
        }
    }
}

TEST_CASE("projected derivative") {
    const JetContext ctx = make_jet_context(4);

    CHECK(d_p(ctx, klein_gordon_form(ctx)).is_zero());

    // constant coefficients: d is already zero
    CHECK(d_p(ctx, dqdp(ctx, {1, 2}, {1, 2})).is_zero());

    // d_p(u beta) = project(du ^ beta) = p_mu dq^mu ^ beta = 0
    const auto ub = ctx.beta.scaled(Polynomial::variable(VariableId::fiber()));
    CHECK(d_p(ctx, ub) == project(ctx, ext_d(ub)));
    CHECK(d_p(ctx, ub).is_zero());
}

TEST_CASE("Lie derivative along the Reeb field via the Cartan formula") {
    const JetContext ctx = make_jet_context(3);
    Rng rng(13);
    const auto vars = testutil::chart_variables(3, {"m"});
    for (int i = 0; i < 200; ++i) {
        const Polynomial L = testutil::random_polynomial(rng, vars, 3, 3);
        CHECK(lie_reeb(ctx, ctx.beta.scaled(L)) ==
              ctx.beta.scaled(L.derivative(VariableId::fiber())));
    }
    CHECK(lie_reeb(ctx, dqdp(ctx, {1}, {2})).is_zero());

    const JetContext ctx4 = make_jet_context(4);
    const Polynomial m = Polynomial::variable(VariableId::parameter("m"));
    const Polynomial uu = Polynomial::variable(VariableId::fiber());
    CHECK(lie_reeb(ctx4, ctx4.beta.scaled(m * m * uu)) == ctx4.beta.scaled(m * m));
}

TEST_CASE("effectivity test with witnesses") {
    const JetContext ctx = make_jet_context(4);

    CHECK(is_effective(ctx, klein_gordon_form(ctx)));

    const auto bad = dqdp(ctx, {1, 2}, {1, 2});
    const auto w = effectivity_witness(ctx, bad);
    REQUIRE(w.has_value());
    CHECK(w->which == EffectivityWitness::Which::Bottom);
    CHECK(w->value == dqdp(ctx, {1}, {1}, -1) + dqdp(ctx, {2}, {2}, -1));

    const auto cw = effectivity_witness(ctx, wedge(ctx.contact, ctx.beta_mu[0]));
    REQUIRE(cw.has_value());
    CHECK(cw->which == EffectivityWitness::Which::ReebContraction);

    CHECK_THROWS_AS(is_effective(make_jet_context(2), dqdp(ctx, {1}, {1})), GeneratorSetMismatch);
    DifferentialForm too_big(ctx.gens, 5);
    CHECK_THROWS_AS(is_effective(ctx, too_big), DegreeTooHigh);

    // Example: b_mu beta_mu ^ dp_mu + b beta is effective for any coefficients
    Rng rng(23);
    const auto vars = testutil::chart_variables(4);
    for (int i = 0; i < 50; ++i) {
        DifferentialForm f = ctx.beta.scaled(testutil::random_polynomial(rng, vars, 2, 2));
        for (int mu = 1; mu <= 4; ++mu)
            f = f + wedge(ctx.beta_mu[mu - 1],
                          DifferentialForm::product(ctx.gens, {Generator::dp(mu)}))
                        .scaled(testutil::random_polynomial(rng, vars, 2, 2));
        CHECK(is_effective(ctx, f));
    }
}

TEST_CASE("bottom identity: bottom(w ^ Omega) = bottom(w) Omega + (n-2) w") {
    Rng rng(29);
    for (int n : {3, 4, 5}) {
        const JetContext ctx = make_jet_context(n);
        testutil::FormOptions opt;
        opt.exclude_du = true;
        for (int i = 0; i < 70; ++i) {
            const auto w = testutil::random_form(rng, ctx, 2, opt);
            const auto lhs = bottom(ctx, wedge(w, ctx.symplectic));
            const auto rhs =
                ctx.symplectic.scaled(bottom(ctx, w).coefficient(ExtMonomial{})) +
                w.scaled(Rational(n - 2));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("effective part: first heavenly matches the frozen table row") {
    const JetContext ctx = make_jet_context(4);
    const auto rep = plebanski1_rep(ctx);

    const auto eff = effective_part(ctx, rep);

    DifferentialForm expected = -ctx.beta;
    expected = expected + dqdp(ctx, {1, 2}, {1, 2}, Rational(1, 3)) +
               dqdp(ctx, {3, 4}, {3, 4}, Rational(1, 3));
    for (auto [a, b] : {std::pair{1, 3}, {1, 4}, {2, 3}, {2, 4}})
        expected = expected + dqdp(ctx, {a, b}, {a, b}, Rational(-1, 6));
    CHECK(eff == expected);
    CHECK(is_effective(ctx, eff));

    // degree-4 closed formula as an independent oracle:
    // w - bottom(w)^Omega/(n-2) + bottom^2(w) Omega^Omega / (2(n-1)(n-2))
    const auto b1 = bottom(ctx, rep);
    const auto b2 = bottom(ctx, b1);
    const auto oracle =
        rep - wedge(b1, ctx.symplectic).scaled(Rational(1, 2)) +
        wedge(ctx.symplectic, ctx.symplectic)
            .scaled(b2.coefficient(ExtMonomial{}) * Rational(1, 12));
    CHECK(eff == oracle);
}

TEST_CASE("effective part: idempotence, degree 2, and the residual identity") {
    const JetContext ctx = make_jet_context(4);
    CHECK(effective_part(ctx, ctx.symplectic).is_zero());

    const auto kg = klein_gordon_form(ctx);
    CHECK(effective_part(ctx, kg) == kg);

    CHECK_THROWS_AS(effective_part(ctx, wedge(ctx.contact, ctx.beta_mu[0])),
                    NotDegenerateAlongReeb);

    Rng rng(31);
    for (int n : {2, 3, 4}) {
        const JetContext c = make_jet_context(n);
        std::uniform_int_distribution<int> deg(2, n);
        testutil::FormOptions opt;
        opt.exclude_du = true;
        for (int i = 0; i < 70; ++i) {
            const auto a = testutil::random_form(rng, c, deg(rng), opt);
            const auto eff = effective_part(c, a);
            CHECK(is_effective(c, eff));
            CHECK(effective_part(c, eff) == eff);
            const auto x = hodge_lepage_residual(c, a);
            CHECK(a == eff + wedge(x, c.symplectic));
            if (x.degree() > 0) CHECK(contract(c.reeb, x).is_zero());
        }
    }
}

TEST_CASE("Hodge-Lepage residual frozen examples") {
    const JetContext ctx = make_jet_context(4);

    // a = Omega: x = 1
    CHECK(hodge_lepage_residual(ctx, ctx.symplectic) ==
          DifferentialForm::scalar(ctx.gens, pconst(1)));

    // a = dq1^dq2^dp1^dp2: x = -1/2(dq1^dp1 + dq2^dp2) + 1/6 Omega
    const auto x = hodge_lepage_residual(ctx, dqdp(ctx, {1, 2}, {1, 2}));
    auto expected = dqdp(ctx, {1}, {1}, Rational(-1, 2)) + dqdp(ctx, {2}, {2}, Rational(-1, 2)) +
                    ctx.symplectic.scaled(Rational(1, 6));
    CHECK(x == expected);

    // effective input: x = 0
    CHECK(hodge_lepage_residual(ctx, klein_gordon_form(ctx)).is_zero());
}
