#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "peterson/rational.hpp"
#include "peterson/variables.hpp"

namespace peterson {

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Sparse multivariate polynomial over Rational. Terms are kept strictly
/// descending in the attached monomial order with no zero coefficients, so
/// the leading term is terms().front(). Values are immutable; all
/// operations return new polynomials.
class Polynomial {
  public:
    Polynomial(VariableSetPtr vars, MonomialOrder order);

    static Polynomial zero(VariableSetPtr vars, MonomialOrder order);
    static Polynomial constant(VariableSetPtr vars, MonomialOrder order, const Rational& c);
    static Polynomial variable(VariableSetPtr vars, MonomialOrder order, std::size_t index);
    static Polynomial from_terms(VariableSetPtr vars, MonomialOrder order,
                                 std::vector<Term> terms);

    const VariableSetPtr& variables() const { return vars_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Rational& leading_coefficient() const { return leading_term().coeff; }

    bool is_homogeneous() const;
    /// Cohomological degree of the leading term; -1 for the zero polynomial.
    int cohomological_degree() const;

    Rational coefficient(const Monomial& m) const;

    Polynomial with_order(MonomialOrder order) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;
    /// this * c * m, in one pass (multiplicativity keeps terms sorted).
    Polynomial term_scaled(const Monomial& m, const Rational& c) const;
    Polynomial pow(unsigned e) const;
    Polynomial monic() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Text form matching the CLI syntax, e.g. "xi_1^2 - 1/2*xi_1*xi_2 - t*xi_1".
    std::string str() const;

  private:
    void normalize();
    VariableSetPtr vars_;
    MonomialOrder order_;
    std::vector<Term> terms_;
};

/// Degree-preserving ring homomorphism: each assigned image must be zero or
/// homogeneous of cohomological degree 2 (linear).
class Substitution {
  public:
    Substitution(VariableSetPtr source, VariableSetPtr target, MonomialOrder target_order);
    void set(std::size_t source_index, Polynomial image);
    const Polynomial* image(std::size_t source_index) const;
    const VariableSetPtr& source() const { return source_; }
    const VariableSetPtr& target() const { return target_; }
    const MonomialOrder& target_order() const { return order_; }

  private:
    VariableSetPtr source_;
    VariableSetPtr target_;
    MonomialOrder order_;
    std::vector<std::optional<Polynomial>> images_;
};

/// Image of p under the algebra homomorphism extending s. Every variable
/// occurring in p must have an image.
Polynomial substitute(const Polynomial& p, const Substitution& s);

/// Sum of all squarefree degree-k monomials in the chosen variables;
/// 1 <= k <= var_indices.size().
Polynomial elementary_symmetric(VariableSetPtr vars, MonomialOrder order, unsigned k,
                                std::span<const std::size_t> var_indices);

}  // namespace peterson
