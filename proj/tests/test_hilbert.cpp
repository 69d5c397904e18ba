#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "peterson/hilbert.hpp"
#include "peterson/matrix.hpp"
#include "peterson/presentation.hpp"
#include "test_util.hpp"

using namespace peterson;
using namespace peterson::testutil;

namespace {

GroebnerBasis peterson_gb(int n, PresentationVariant variant) {
    return buchberger(build_presentation(n, variant).ideal);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("quotient series from staircases") {
    CHECK(series_of_quotient(peterson_gb(2, PresentationVariant::equivariant), 8).coefficients() ==
          std::vector<std::uint64_t>{1, 2, 2, 2, 2});
    CHECK(series_of_quotient(peterson_gb(4, PresentationVariant::ordinary), 8).coefficients() ==
          std::vector<std::uint64_t>{1, 3, 3, 1, 0});
}

TEST_CASE("the empty ideal gives the free polynomial ring series") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<std::string> names;
        for (int i = 1; i <= n; ++i) names.push_back("v_" + std::to_string(i));
        VariableSetPtr vars = make_variables(std::move(names));
        GroebnerBasis empty =
            buchberger(IdealBasis(vars, MonomialOrder::grevlex(vars->size()), {}));
        HilbertSeries series = series_of_quotient(empty, 20);
        for (int d = 0; d <= 20; d += 2)
            CHECK(series.coefficient(d) ==
                  binomial(static_cast<std::uint64_t>(d / 2 + n - 1),
                           static_cast<std::uint64_t>(n - 1)));
    }
}

TEST_CASE("closed-form Peterson series") {
    CHECK(expected_peterson_series(3, SeriesVariant::ordinary, 8).coefficients() ==
          std::vector<std::uint64_t>{1, 2, 1, 0, 0});
    CHECK(expected_peterson_series(3, SeriesVariant::equivariant, 8).coefficients() ==
          std::vector<std::uint64_t>{1, 3, 4, 4, 4});
    CHECK(expected_peterson_series(2, SeriesVariant::ordinary, 8).total() == 2);
    CHECK_THROWS_AS(expected_peterson_series(1, SeriesVariant::ordinary, 8), DomainError);

    auto series = expected_peterson_series(4, SeriesVariant::equivariant, 12);
    REQUIRE(series.closed_form().has_value());
    CHECK(series.closed_form()->numerator == std::vector<long long>{1, 0, 3, 0, 3, 0, 1});
    CHECK(series.closed_form()->denominator_degrees == std::vector<int>{2});
}

TEST_CASE("closed forms must expand to the stated coefficients") {
    SeriesClosedForm form;
    form.numerator = {1, 0, 1};  // 1 + s^2
    CHECK_NOTHROW(HilbertSeries(4, {1, 1, 0}, form));
    CHECK_THROWS_AS(HilbertSeries(4, {1, 2, 0}, form), DomainError);
    SeriesClosedForm odd;
    odd.numerator = {1, 1};
    CHECK_THROWS_AS(HilbertSeries(2, {1, 0}, odd), DomainError);
}

TEST_CASE("regular-sequence series identity") {
    HilbertSeries q2 = series_of_quotient(peterson_gb(2, PresentationVariant::equivariant), 8);
    CHECK(regular_sequence_identity_check(2, {4}, q2));

    for (int n = 2; n <= 6; ++n) {
        std::vector<int> degrees(static_cast<std::size_t>(n - 1), 4);
        degrees.push_back(2);
        HilbertSeries ordinary =
            expected_peterson_series(n, SeriesVariant::ordinary, 4 * n);
        CHECK(regular_sequence_identity_check(static_cast<std::size_t>(n), degrees, ordinary));
    }

    // quotient of one variable by (t) has series 1, not 1,1,1,...
    HilbertSeries wrong(8, {1, 1, 1, 1, 1});
    CHECK_FALSE(regular_sequence_identity_check(1, {2}, wrong));

    CHECK_THROWS_AS(regular_sequence_identity_check(1, {10}, HilbertSeries(4, {1, 1, 1})),
                    DomainError);
}

TEST_CASE("multiplication by t is a (1 - s^2) convolution on the quotient") {
    for (int n = 2; n <= 5; ++n) {
        PresentationRing pres = build_presentation(n, PresentationVariant::equivariant);
        HilbertSeries base = series_of_quotient(buchberger(pres.ideal), 4 * n);

        std::vector<Polynomial> gens = pres.ideal.generators();
        gens.push_back(Polynomial::variable(pres.variables(), pres.order(), 0));
        HilbertSeries with_t = series_of_quotient(
            buchberger(IdealBasis(pres.variables(), pres.order(), std::move(gens))), 4 * n);

        for (int d = 0; d <= 4 * n; d += 2) {
            std::uint64_t prev = d >= 2 ? base.coefficient(d - 2) : 0;
            CHECK(with_t.coefficient(d) == base.coefficient(d) - prev);
        }
    }
}

TEST_CASE("staircase dimensions agree with a Groebner-free rank computation") {
    // independent route: the degree-d slice of the ideal is spanned by the
    // products m * g; its dimension is an exact matrix rank, no division
    // algorithm involved
    for (int n = 2; n <= 4; ++n) {
        PresentationRing pres = build_presentation(n, PresentationVariant::equivariant);
        const auto& gens = pres.ideal.generators();
        GroebnerBasis free_ring = buchberger(IdealBasis(pres.variables(), pres.order(), {}));
        HilbertSeries series =
            series_of_quotient(buchberger(pres.ideal), 12);

        auto monomial_basis = standard_monomials(free_ring, 12);
        for (int d = 0; d <= 12; d += 2) {
            const auto& basis = monomial_basis.at(d);
            std::vector<std::vector<Rational>> rows;
            for (const Polynomial& g : gens) {
                int shift = d - g.cohomological_degree();
                if (shift < 0) continue;
                for (const Monomial& m : monomial_basis.at(shift)) {
                    Polynomial product = g.term_scaled(m, Rational(1));
                    std::vector<Rational> row;
                    row.reserve(basis.size());
                    for (const Monomial& b : basis) row.push_back(product.coefficient(b));
                    rows.push_back(std::move(row));
                }
            }
            RationalMatrix mat(rows.size(), basis.size());
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < basis.size(); ++c) mat.at(r, c) = rows[r][c];
            std::size_t ideal_dim = rank(mat);
            CHECK(series.coefficient(d) == basis.size() - ideal_dim);
        }
    }
}

TEST_CASE("recomputing with a larger truncation extends the series") {
    GroebnerBasis g = peterson_gb(3, PresentationVariant::equivariant);
    HilbertSeries small = series_of_quotient(g, 8);
    HilbertSeries large = series_of_quotient(g, 16);
    for (int d = 0; d <= 8; d += 2) CHECK(small.coefficient(d) == large.coefficient(d));
}

TEST_CASE("series equality compares truncation and coefficients") {
    HilbertSeries a(4, {1, 2, 2});
    HilbertSeries b(4, {1, 2, 2});
    HilbertSeries c(4, {1, 2, 3});
    CHECK(a == b);
    CHECK_FALSE(a == c);
}
