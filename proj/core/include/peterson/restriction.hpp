#pragma once

#include <string>
#include <vector>

#include "peterson/fixed_points.hpp"
#include "peterson/presentation.hpp"

namespace peterson {

/// Restriction of xi_k at a fixed point: the integer sum of w(i) - i over
/// i <= k (the coefficient of t). Defined for 0 <= k <= n, with k = 0 and
/// k = n giving 0.
Rational restrict_xi(int k, const PetersonFixedPoint& p);

/// A class of the equivariant ring written out at every fixed point as a
/// polynomial in the single variable t; values align with points.
struct RestrictionVector {
    std::vector<PetersonFixedPoint> points;
    std::vector<Polynomial> values;

    bool is_zero() const;
};

/// Substitutes xi_k -> restrict_xi(k) * t and t -> t at each fixed point.
/// p must live over the equivariant variables [t, xi_1..xi_{n-1}].
RestrictionVector restrict_class(const Polynomial& p,
                                 const std::vector<PetersonFixedPoint>& points);

/// The flag-side restriction tau_i -> t_{w(i)}, t_i -> t_i; with
/// specialize, further t_i -> (n+1-i) t into the single-variable ring.
Polynomial flag_restriction(const Polynomial& p, const Permutation& w, bool specialize);

struct RelationFailure {
    std::string check;
    int k;                      // generator / factor index, 0 when not applicable
    std::vector<int> one_line;  // fixed point where it failed
    std::string detail;
};

/// Zero-restriction and factor-dichotomy report for the quadratic
/// relations at every fixed point.
struct RelationReport {
    int n = 0;
    bool generators_restrict_to_zero = false;
    bool xi_n_class_restricts_to_zero = false;
    bool factor_dichotomy_holds = false;
    std::vector<RelationFailure> failures;

    bool all_pass() const {
        return generators_restrict_to_zero && xi_n_class_restricts_to_zero &&
               factor_dichotomy_holds;
    }
};

RelationReport verify_relations(int n);
/// Same checks against a caller-supplied presentation; lets tests inject a
/// perturbed generator.
RelationReport verify_relations(const PresentationRing& presentation,
                                const std::vector<PetersonFixedPoint>& points);

struct InjectivityDegree {
    int degree = 0;
    std::size_t standard_monomials = 0;
    std::size_t rank = 0;
    bool pass = false;
};

/// Degree-by-degree rank certificate for the fixed-point restriction map:
/// in each even degree d <= degree_bound, the matrix of restrictions of the
/// standard monomials must have full row rank.
struct InjectivityReport {
    int n = 0;
    int degree_bound = 0;
    std::vector<InjectivityDegree> degrees;
    bool all_pass = false;
};

InjectivityReport injectivity_check(int n, int degree_bound, unsigned threads = 1);
InjectivityReport injectivity_check(const PresentationRing& presentation, int degree_bound,
                                    unsigned threads = 1);

}  // namespace peterson
