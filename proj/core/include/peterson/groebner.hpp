#pragma once

#include <map>
#include <optional>
#include <vector>

#include "peterson/polynomial.hpp"

namespace peterson {

/// Generators of a homogeneous ideal, together with the monomial order the
/// Groebner computation will use. Zero generators are dropped; a
/// non-homogeneous generator is rejected.
class IdealBasis {
  public:
    IdealBasis(VariableSetPtr vars, MonomialOrder order, std::vector<Polynomial> generators);

    const VariableSetPtr& variables() const { return vars_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Polynomial>& generators() const { return generators_; }

  private:
    VariableSetPtr vars_;
    MonomialOrder order_;
    std::vector<Polynomial> generators_;
};

/// Reduced Groebner basis: monic elements, no monomial of any element
/// divisible by another element's leading term, sorted ascending by leading
/// monomial. Only buchberger() constructs these.
class GroebnerBasis {
  public:
    const VariableSetPtr& variables() const { return vars_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Polynomial>& elements() const { return elements_; }

  private:
    friend GroebnerBasis buchberger(const IdealBasis&, std::optional<int>);
    GroebnerBasis(VariableSetPtr vars, MonomialOrder order, std::vector<Polynomial> elements)
        : vars_(std::move(vars)), order_(std::move(order)), elements_(std::move(elements)) {}
    VariableSetPtr vars_;
    MonomialOrder order_;
    std::vector<Polynomial> elements_;
};

/// Buchberger's algorithm with the coprime-leading-term and chain criteria,
/// normal pair selection (ascending lcm degree, ties by index), followed by
/// inter-reduction. Deterministic for a fixed order and generator list.
/// When degree_cap is set, S-pairs whose lcm exceeds the cohomological cap
/// are discarded; the result is then only valid up to that degree.
GroebnerBasis buchberger(const IdealBasis& basis, std::optional<int> degree_cap = std::nullopt);

/// Remainder of multivariate division by the basis: no monomial of the
/// result is divisible by any leading term, and p - NF(p) lies in the ideal.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g);

bool ideal_membership(const Polynomial& p, const GroebnerBasis& g);

/// Monomials of each even cohomological degree d <= max_degree that no
/// leading term divides, listed descending in the basis order. Their counts
/// are the graded dimensions of the quotient.
std::map<int, std::vector<Monomial>> standard_monomials(const GroebnerBasis& g, int max_degree);

/// True iff every variable has a pure power among the leading terms;
/// equivalently the quotient is a finite-dimensional vector space,
/// equivalently (homogeneous case) the zero set is the origin alone.
bool is_dimension_zero(const GroebnerBasis& g);

/// Test hook: verifies reducedness and that every S-polynomial reduces to
/// zero, with no pair pruning.
bool is_reduced_groebner_basis(const GroebnerBasis& g);

}  // namespace peterson
