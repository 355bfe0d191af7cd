#include "testutil.hpp"

#include "mage/linalg.hpp"

#include <doctest.h>

using namespace mage;
using testutil::Rng;

namespace {

Polynomial pvar(const VariableId& v) { return Polynomial::variable(v); }
Polynomial pconst(long num, long den = 1) { return Polynomial::constant(Rational(num, den)); }

const VariableId q1 = VariableId::coord(1);
const VariableId q2 = VariableId::coord(2);
const VariableId u = VariableId::fiber();
const VariableId p1 = VariableId::momentum(1);
const VariableId p2 = VariableId::momentum(2);

} // namespace

TEST_CASE("rationals are canonical") {
    Rational a(6, 8);
    CHECK(numerator(a) == 3);
    CHECK(denominator(a) == 4);
    Rational b = Rational(3) / Rational(-4);
    CHECK(denominator(b) == 4);
    CHECK(numerator(b) == -3);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(to_string(Rational(-1, 2)) == "-1/2");
    CHECK(to_string(Rational(5)) == "5");
}

TEST_CASE("polynomial ring axioms hold on random triples") {
    Rng rng(20260809);
    const auto vars = testutil::chart_variables(3, {"m"});
    for (int i = 0; i < 200; ++i) {
        const Polynomial a = testutil::random_polynomial(rng, vars, 3, 3);
        const Polynomial b = testutil::random_polynomial(rng, vars, 3, 3);
        const Polynomial c = testutil::random_polynomial(rng, vars, 3, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == Polynomial::zero());
    }
}

TEST_CASE("partial derivatives commute and match hand values") {
    // d/dp1 (-1/2 p1^2 + 1/2 c p2^2) = -p1
    const VariableId c = VariableId::parameter("c");
    Polynomial L = pvar(p1) * pvar(p1) * Rational(-1, 2) +
                   pvar(c) * pvar(p2) * pvar(p2) * Rational(1, 2);
    CHECK(L.derivative(p1) == -pvar(p1));

    // d/du (m^2 u) = m^2; a parameter is an ordinary variable for d/d(.)
    const VariableId m = VariableId::parameter("m");
    Polynomial mass = pvar(m) * pvar(m) * pvar(u);
    CHECK(mass.derivative(u) == pvar(m) * pvar(m));
    CHECK(mass.derivative(m) == pconst(2) * pvar(m) * pvar(u));

    CHECK(pconst(7).derivative(q1).is_zero());

    Rng rng(1);
    const auto vars = testutil::chart_variables(3, {"m"});
    for (int i = 0; i < 200; ++i) {
        const Polynomial p = testutil::random_polynomial(rng, vars, 4, 4);
        std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
        const VariableId v = vars[pick(rng)];
        const VariableId w = vars[pick(rng)];
        CHECK(p.derivative(v).derivative(w) == p.derivative(w).derivative(v));
    }
}

TEST_CASE("evaluation is exact and checks coverage") {
    Polynomial p = pvar(p1) * pvar(p2);
    CHECK(p.eval({{p1, Rational(2)}, {p2, Rational(3)}}) == 6);
    CHECK(Polynomial::zero().eval({}) == 0);

    const VariableId m = VariableId::parameter("m");
    Polynomial q = pvar(m) * pvar(m) * pvar(u);
    CHECK(q.eval({{m, Rational(2)}, {u, Rational(1, 2)}}) == 2);
    CHECK_THROWS_AS(q.eval({{m, Rational(2)}}), MissingAssignment);
}

TEST_CASE("graded-lex term order is deterministic") {
    Polynomial p = pvar(q2) + pvar(q1) * pvar(q1) + pconst(3);
    std::vector<int> degrees;
    for (const auto& [mono, coeff] : p.terms()) degrees.push_back(mono.degree());
    CHECK(degrees == std::vector<int>{2, 1, 0});
}

TEST_CASE("nullspace basics") {
    QMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(nullspace(id).empty());

    QMatrix zero(2, 2);
    CHECK(nullspace(zero).size() == 2);

    QMatrix row(1, 2);
    row.at(0, 0) = 1;
    row.at(0, 1) = 1;
    const auto basis = nullspace(row);
    REQUIRE(basis.size() == 1);
    // spans (1, -1)
    CHECK(basis[0][0] * Rational(-1) == basis[0][1]);
    CHECK(basis[0][0] != 0);
}

TEST_CASE("nullspace vectors satisfy Mx = 0 exactly and are independent") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        const std::size_t r = dim(rng), c = dim(rng);
        QMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = testutil::random_rational(rng, -3, 3, 2);
        const auto basis = nullspace(m);
        for (const auto& x : basis)
            for (std::size_t i = 0; i < r; ++i) {
                Rational dot(0);
                for (std::size_t j = 0; j < c; ++j) dot += m.at(i, j) * x[j];
                CHECK(dot == 0);
            }
        CHECK(basis.size() == c - rank(m));
    }
}

TEST_CASE("solve returns a particular solution or detects inconsistency") {
    QMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 1;
    m.at(1, 0) = 2;
    m.at(1, 1) = 2;
    CHECK(!solve<Rational>(m, {Rational(1), Rational(3)}).has_value());
    auto sol = solve<Rational>(m, {Rational(1), Rational(2)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] + (*sol)[1] == 1);
}

// --- exterior algebra ---

TEST_CASE("wedge handles repeated generators and permutation signs") {
    const JetContext ctx = make_jet_context(4);
    const auto& g = ctx.gens;

    CHECK(DifferentialForm::product(g, {Generator::dq(1), Generator::dq(1)}).is_zero());

    const auto d11 = DifferentialForm::product(g, {Generator::dq(1), Generator::dp(1)});
    const auto d22 = DifferentialForm::product(g, {Generator::dq(2), Generator::dp(2)});
    const auto d12_12 = DifferentialForm::product(
        g, {Generator::dq(1), Generator::dq(2), Generator::dp(1), Generator::dp(2)});
    CHECK(wedge(d11, d22) == -d12_12);

    // Omega ^ Omega = -2 sum_{mu<nu} dq^mu dq^nu dp_mu dp_nu
    DifferentialForm expected(g, 4);
    for (int mu = 1; mu <= 4; ++mu)
        for (int nu = mu + 1; nu <= 4; ++nu)
            expected = expected + DifferentialForm::product(
                                      g, {Generator::dq(mu), Generator::dq(nu), Generator::dp(mu),
                                          Generator::dp(nu)}, pconst(-2));
    CHECK(wedge(ctx.symplectic, ctx.symplectic) == expected);
}

TEST_CASE("wedge is graded anticommutative and associative on random forms") {
    Rng rng(99);
    const JetContext ctx = make_jet_context(3);
    std::uniform_int_distribution<int> deg(0, 2);
    for (int i = 0; i < 200; ++i) {
        const int da = deg(rng), db = deg(rng), dc = deg(rng);
        const auto a = testutil::random_form(rng, ctx, da);
        const auto b = testutil::random_form(rng, ctx, db);
        const auto c = testutil::random_form(rng, ctx, dc);
        const auto ab = wedge(a, b);
        const auto ba = wedge(b, a);
        CHECK(ab == ((da * db) % 2 ? -ba : ba));
        CHECK(wedge(ab, c) == wedge(a, wedge(b, c)));
    }
}

TEST_CASE("interior product matches hand values and the graded Leibniz rule") {
    const JetContext ctx = make_jet_context(4);
    const auto& g = ctx.gens;

    // Reeb conditions: chi -| contact = 1, chi -| Omega = 0
    CHECK(contract(ctx.reeb, ctx.contact) == DifferentialForm::scalar(g, pconst(1)));
    CHECK(contract(ctx.reeb, ctx.symplectic).is_zero());

    const auto dq1_dir = PolyVectorField::direction(g, Generator::dq(1));
    CHECK(contract(dq1_dir, ctx.beta) == ctx.beta_mu[0]);
    CHECK(ctx.beta_mu[0] ==
          DifferentialForm::product(g, {Generator::dq(2), Generator::dq(3), Generator::dq(4)}));

    const auto dp1_dir = PolyVectorField::direction(g, Generator::dp(1));
    const auto m3 = DifferentialForm::product(g, {Generator::dq(2), Generator::dp(1), Generator::dp(2)});
    CHECK(contract(dp1_dir, m3) ==
          DifferentialForm::product(g, {Generator::dq(2), Generator::dp(2)}, pconst(-1)));

    CHECK_THROWS_AS(contract(dp1_dir, DifferentialForm::scalar(g, pconst(1))), DegreeZero);

    Rng rng(5);
    std::uniform_int_distribution<int> deg(1, 3);
    for (int i = 0; i < 200; ++i) {
        const int da = deg(rng), db = deg(rng);
        const auto a = testutil::random_form(rng, ctx, da);
        const auto b = testutil::random_form(rng, ctx, db);
        PolyVectorField v{g, {}};
        const auto vars = testutil::chart_variables(4);
        for (int s : g.slots())
            if (rng() % 3 == 0) v.components[s] = testutil::random_polynomial(rng, vars, 1, 2);
        const auto lhs = contract(v, wedge(a, b));
        auto rhs = wedge(contract(v, a), b);
        auto vb = wedge(a, contract(v, b));
        rhs = rhs + (da % 2 ? -vb : vb);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("bivector contraction convention gives bottom(Omega) = n") {
    for (int n = 2; n <= 5; ++n) {
        const JetContext ctx = make_jet_context(n);
        CHECK(contract(ctx.x_omega, ctx.symplectic) ==
              DifferentialForm::scalar(ctx.gens, pconst(n)));
    }

    const JetContext ctx = make_jet_context(4);
    const auto& g = ctx.gens;
    const auto m = DifferentialForm::product(
        g, {Generator::dq(1), Generator::dq(2), Generator::dp(1), Generator::dp(2)});
    const DifferentialForm expected =
        DifferentialForm::product(g, {Generator::dq(1), Generator::dp(1)}, pconst(-1)) +
        DifferentialForm::product(g, {Generator::dq(2), Generator::dp(2)}, pconst(-1));
    CHECK(contract(ctx.x_omega, m) == expected);

    CHECK(contract(ctx.x_omega, ctx.beta).is_zero());
}

TEST_CASE("exterior derivative: d(contact) = Omega, parameters are constant, d^2 = 0") {
    const JetContext ctx = make_jet_context(4);
    const auto& g = ctx.gens;

    DifferentialForm omega(g, 2);
    for (int mu = 1; mu <= 4; ++mu)
        omega = omega + DifferentialForm::product(g, {Generator::dq(mu), Generator::dp(mu)});
    CHECK(ext_d(ctx.contact) == omega);
    CHECK(ctx.symplectic == omega);

    // d(m^2 u beta) = m^2 du ^ beta
    const VariableId m = VariableId::parameter("m");
    const auto lhs = ext_d(ctx.beta.scaled(pvar(m) * pvar(m) * pvar(u)));
    auto rhs = wedge(DifferentialForm::product(g, {Generator::du()}), ctx.beta)
                   .scaled(pvar(m) * pvar(m));
    CHECK(lhs == rhs);

    CHECK(ext_d(ctx.beta).is_zero());

    Rng rng(17);
    std::uniform_int_distribution<int> deg(0, 3);
    for (int i = 0; i < 200; ++i) {
        testutil::FormOptions opt;
        opt.coeff_degree = 2;
        opt.params = {"m"};
        const auto a = testutil::random_form(rng, ctx, deg(rng), opt);
        CHECK(ext_d(ext_d(a)).is_zero());
    }
}
