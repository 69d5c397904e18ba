#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "peterson/matrix.hpp"
#include "peterson/rational.hpp"
#include "test_util.hpp"

using namespace peterson;
using namespace peterson::testutil;

TEST_CASE("arithmetic on exact fractions") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1) / Rational(4) == Rational(1, 4));

    for (int i = 0; i < 50; ++i) {
        Rational x = random_rational();
        CHECK(x * Rational(1) == x);
    }
}

TEST_CASE("division by zero is a reported error") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("canonical form after every operation") {
    CHECK(Rational(2, 4).numerator() == 1);
    CHECK(Rational(2, 4).denominator() == 2);
    CHECK(Rational(1, -2).denominator() == 2);
    CHECK(Rational(1, -2).numerator() == -1);
    Rational zero = Rational(3, 7) - Rational(3, 7);
    CHECK(zero.numerator() == 0);
    CHECK(zero.denominator() == 1);
    for (int i = 0; i < 100; ++i) {
        Rational x = random_rational(999, 999) * random_rational(999, 999);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
        CHECK(g == 1);
        CHECK(x.denominator() > 0);
    }
}

TEST_CASE("string round trips") {
    CHECK(Rational(5, 6).str() == "5/6");
    CHECK(Rational(-7).str() == "-7");
    CHECK(Rational::from_string("3/4") == Rational(3, 4));
    CHECK(Rational::from_string("-3/6") == Rational(-1, 2));
    CHECK(Rational::from_string("12") == Rational(12));
    CHECK_THROWS_AS(Rational::from_string("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::from_string("a/2"), ParseError);
    CHECK_THROWS_AS(Rational::from_string("1/2x"), ParseError);
    for (int i = 0; i < 50; ++i) {
        Rational x = random_rational(9999, 9999);
        CHECK(Rational::from_string(x.str()) == x);
    }
}

TEST_CASE("commutativity, associativity, and division round trip") {
    for (int i = 0; i < 200; ++i) {
        Rational a = random_rational(), b = random_rational(), c = random_rational();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        Rational d = random_nonzero_rational();
        CHECK((a / d) * d == a);
    }
}

namespace {

RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

}  // namespace

TEST_CASE("rank of known matrices") {
    RationalMatrix id(3, 3);
    for (std::size_t i = 0; i < 3; ++i) id.at(i, i) = Rational(1);
    CHECK(rank(id) == 3);

    CHECK(rank(from_rows({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}})) == 1);

    // the q = 2 Peterson branch matrix; determinant 3/4
    CHECK(rank(from_rows({{Rational(1), Rational(-1, 2)},
                          {Rational(-1, 2), Rational(1)}})) == 2);
}

TEST_CASE("rank equals rank of the transpose") {
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int i = 0; i < 40; ++i) {
        RationalMatrix m(dim(rng()), dim(rng()));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = random_rational(3, 3);
        CHECK(rank(m) == rank(m.transposed()));
    }
}

TEST_CASE("rank = cols iff the kernel is trivial, by explicit substitution") {
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int i = 0; i < 40; ++i) {
        RationalMatrix m(dim(rng()), dim(rng()));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = random_rational(3, 3);
        auto kernel = kernel_basis(m);
        CHECK((rank(m) == m.cols()) == kernel.empty());
        for (const auto& v : kernel) {
            bool nonzero = false;
            for (const Rational& x : v) nonzero = nonzero || !x.is_zero();
            CHECK(nonzero);
            for (const Rational& y : multiply(m, v)) CHECK(y.is_zero());
        }
        CHECK(rank(m) + kernel.size() == m.cols());
    }
}
