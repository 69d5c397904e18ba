#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "peterson/presentation.hpp"
#include "test_util.hpp"

using namespace peterson;
using namespace peterson::testutil;

namespace {

struct Ring {
    VariableSetPtr vars;
    MonomialOrder order;
    Ring(std::vector<std::string> names)
        : vars(make_variables(std::move(names))), order(MonomialOrder::grevlex(vars->size())) {}
    Polynomial operator()(const std::string& text) const { return P(text, vars, order); }
};

}  // namespace

TEST_CASE("ring operations stay canonical") {
    Ring R({"t", "xi_1", "xi_2"});
    CHECK(R("xi_1") * R("xi_1") == R("xi_1^2"));
    CHECK(R("xi_1^2 - t*xi_1") + R("t*xi_1") == R("xi_1^2"));
    CHECK(R("xi_1 - t") * R("xi_1 + t") == R("xi_1^2 - t^2"));
    CHECK((R("xi_1") - R("xi_1")).is_zero());

    Ring other({"x", "y"});
    CHECK_THROWS_AS(R("xi_1") + other("x"), DomainError);
}

TEST_CASE("homogeneity and grading") {
    Ring R({"t", "xi_1"});
    CHECK(R("xi_1^2 - t*xi_1").is_homogeneous());
    CHECK(R("xi_1^2 - t*xi_1").cohomological_degree() == 4);
    CHECK_FALSE(R("xi_1^2 - t").is_homogeneous());
    CHECK(Polynomial::zero(R.vars, R.order).is_homogeneous());
    CHECK(R("t").cohomological_degree() == 2);
}

TEST_CASE("circle specialization sends t_i to (n+1-i)t") {
    int n = 4;
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("t_" + std::to_string(i));
    Ring R(names);
    VariableSetPtr target = point_variables();
    MonomialOrder torder = MonomialOrder::grevlex(1);
    Polynomial t = Polynomial::variable(target, torder, 0);

    Substitution sub(R.vars, target, torder);
    for (int i = 1; i <= n; ++i)
        sub.set(static_cast<std::size_t>(i - 1), t.scaled(Rational(n + 1 - i)));
    CHECK(substitute(R("t_2"), sub) == t.scaled(Rational(3)));
    CHECK(substitute(R("t_1 - t_4"), sub) == t.scaled(Rational(3)));
}

TEST_CASE("substitution basics") {
    Ring R({"xi_1"});
    VariableSetPtr target = point_variables();
    MonomialOrder torder = MonomialOrder::grevlex(1);

    Substitution to_zero(R.vars, target, torder);
    to_zero.set(0, Polynomial::zero(target, torder));
    CHECK(substitute(R("xi_1^2"), to_zero).is_zero());

    // tau_1 -> t_2, t_1 -> t_1 at the transposition, as on the flag side
    Ring F({"tau_1", "t_1"});
    Ring T({"t_1", "t_2"});
    Substitution w21(F.vars, T.vars, T.order);
    w21.set(0, T("t_2"));
    w21.set(1, T("t_1"));
    CHECK(substitute(F("t_1 - tau_1"), w21) == T("t_1 - t_2"));

    Substitution partial(F.vars, T.vars, T.order);
    partial.set(0, T("t_2"));
    CHECK_THROWS_AS(substitute(F("t_1 - tau_1"), partial), DomainError);

    // images must be zero or linear
    Substitution quadratic(F.vars, T.vars, T.order);
    CHECK_THROWS_AS(quadratic.set(0, T("t_1^2")), DomainError);
    CHECK_THROWS_AS(quadratic.set(0, T("t_1 - 1")), DomainError);
}

TEST_CASE("substitution is a ring homomorphism") {
    Ring R({"x", "y"});
    Ring S({"u", "v"});
    for (int trial = 0; trial < 30; ++trial) {
        Substitution sub(R.vars, S.vars, S.order);
        for (std::size_t v = 0; v < 2; ++v) {
            Polynomial image = Polynomial::variable(S.vars, S.order, 0).scaled(random_rational()) +
                               Polynomial::variable(S.vars, S.order, 1).scaled(random_rational());
            sub.set(v, image);
        }
        Polynomial p = random_polynomial(R.vars, R.order);
        Polynomial q = random_polynomial(R.vars, R.order);
        CHECK(substitute(p * q, sub) == substitute(p, sub) * substitute(q, sub));
        CHECK(substitute(p + q, sub) == substitute(p, sub) + substitute(q, sub));
    }
}

TEST_CASE("elementary symmetric polynomials") {
    Ring R({"x_1", "x_2", "x_3"});
    std::vector<std::size_t> all{0, 1, 2};
    CHECK(elementary_symmetric(R.vars, R.order, 1, all) == R("x_1 + x_2 + x_3"));
    CHECK(elementary_symmetric(R.vars, R.order, 2, all) == R("x_1*x_2 + x_1*x_3 + x_2*x_3"));
    CHECK(elementary_symmetric(R.vars, R.order, 2, all).terms().size() == 3);
    std::vector<std::size_t> two{0, 1};
    CHECK(elementary_symmetric(R.vars, R.order, 2, two) == R("x_1*x_2"));
    CHECK_THROWS_AS(elementary_symmetric(R.vars, R.order, 4, all), DomainError);
    CHECK_THROWS_AS(elementary_symmetric(R.vars, R.order, 0, all), DomainError);
}

TEST_CASE("expanding prod (X - x_i) recovers signed elementary symmetrics") {
    for (std::size_t m = 1; m <= 5; ++m) {
        std::vector<std::string> names{"X"};
        for (std::size_t i = 1; i <= m; ++i) names.push_back("x_" + std::to_string(i));
        Ring R(names);
        Polynomial prod = Polynomial::constant(R.vars, R.order, Rational(1));
        for (std::size_t i = 1; i <= m; ++i)
            prod = prod * (Polynomial::variable(R.vars, R.order, 0) -
                           Polynomial::variable(R.vars, R.order, i));

        std::vector<std::size_t> xs;
        for (std::size_t i = 1; i <= m; ++i) xs.push_back(i);
        for (unsigned k = 1; k <= m; ++k) {
            // gather terms with X-exponent m-k and strip the X factor
            std::vector<Term> rest;
            for (const Term& t : prod.terms()) {
                if (t.mono.exponents[0] != m - k) continue;
                Monomial stripped = t.mono;
                stripped.exponents[0] = 0;
                rest.push_back({stripped, t.coeff});
            }
            Polynomial coeff = Polynomial::from_terms(R.vars, R.order, std::move(rest));
            Polynomial expected =
                elementary_symmetric(R.vars, R.order, k, xs).scaled(k % 2 == 0 ? Rational(1)
                                                                               : Rational(-1));
            CHECK(coeff == expected);
        }
    }
}

TEST_CASE("grevlex and lex comparisons") {
    Ring R({"x", "y"});
    MonomialOrder grevlex = R.order;
    MonomialOrder lex = MonomialOrder::lex(2);
    Monomial x2({2, 0}), xy({1, 1}), x({1, 0}), y2({0, 2});
    CHECK(grevlex.compare(x2, xy) == std::strong_ordering::greater);
    CHECK(grevlex.compare(xy, xy) == std::strong_ordering::equal);
    CHECK(grevlex.compare(x, y2) == std::strong_ordering::less);  // degree dominates
    CHECK(lex.compare(x, y2) == std::strong_ordering::greater);   // precedence dominates
    CHECK(lex.compare(x2, xy) == std::strong_ordering::greater);

    // three variables: grevlex discards the most of the last variable
    MonomialOrder g3 = MonomialOrder::grevlex(3);
    CHECK(g3.compare(Monomial({0, 2, 0}), Monomial({1, 0, 1})) == std::strong_ordering::greater);
}

TEST_CASE("orders are multiplicative") {
    for (auto kind : {OrderKind::grevlex, OrderKind::lex}) {
        MonomialOrder order(kind, {2, 0, 1});
        for (int trial = 0; trial < 200; ++trial) {
            Monomial m = random_monomial(3), m1 = random_monomial(3), m2 = random_monomial(3);
            CHECK(order.compare(m1, m2) == order.compare(m * m1, m * m2));
        }
    }
}

TEST_CASE("parser round trips and rejects") {
    Ring R({"t", "xi_1", "xi_2"});
    CHECK(R("3/2*xi_1^2*t - xi_2").coefficient(Monomial({1, 2, 0})) == Rational(3, 2));
    CHECK(R("3/2*xi_1^2*t - xi_2") == R("-xi_2 + 3/2*t*xi_1^2"));
    CHECK(R("0").is_zero());

    CHECK_THROWS_AS(R("xi_3"), ParseError);
    CHECK_THROWS_AS(R("xi_1 +"), ParseError);
    CHECK_THROWS_AS(R("xi_1 xi_2"), ParseError);
    CHECK_THROWS_AS(R("xi_1^"), ParseError);
    CHECK_THROWS_AS(R(""), ParseError);
    bool caught = false;
    try {
        R("xi_1 + bad_name");
    } catch (const ParseError& e) {
        caught = true;
        CHECK(e.position == 7);
    }
    CHECK(caught);

    for (const char* bad : {"--", "1//2", "^2", "xi_1*", "*xi_1", "xi_1^x", "+", "3/(4)"})
        CHECK_THROWS_AS(R(bad), ParseError);

    for (int trial = 0; trial < 40; ++trial) {
        Polynomial p = random_polynomial(R.vars, R.order, 5, 3);
        CHECK(P(p.str(), R.vars, R.order) == p);
    }
}

TEST_CASE("printing follows the active order") {
    int n = 3;
    VariableSetPtr vars = equivariant_variables(n);
    Polynomial gen = P("xi_1^2 - 1/2*xi_1*xi_2 - t*xi_1", vars, equivariant_order(n));
    CHECK(gen.str() == "xi_1^2 - 1/2*xi_1*xi_2 - t*xi_1");
}
