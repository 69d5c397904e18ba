#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "peterson/groebner.hpp"

namespace peterson {

/// Coefficients of the quadratic system
///   z_1^2     = b_1 z_1 z_2
///   z_i^2     = z_i (a_{i-1} z_{i-1} + b_i z_{i+1})   (1 < i < q)
///   z_q^2     = a_{q-1} z_{q-1} z_q
/// in q >= 2 variables, with the boundary convention z_0 = z_{q+1} = 0.
struct QuadraticSystem {
    std::size_t q;
    std::vector<Rational> a;  // a_1 .. a_{q-1}
    std::vector<Rational> b;  // b_1 .. b_{q-1}

    QuadraticSystem(std::size_t q, std::vector<Rational> a, std::vector<Rational> b);
    std::vector<Rational> c() const;  // c_i = a_i b_i
};

/// The Peterson instance: q = n-1 variables, all a_i = b_i = 1/2; n >= 3.
QuadraticSystem peterson_system(int n);

/// The ideal of the system's polynomials z_i^2 - z_i(...), grevlex.
IdealBasis system_ideal(const QuadraticSystem& sys);

struct BranchWitness {
    std::uint64_t mask;  // bit i-1 set: constraint z_i = a_{i-1}z_{i-1} + b_i z_{i+1}
    std::vector<std::vector<Rational>> kernel;  // nonzero solutions of that branch
};

struct BranchResult {
    bool only_origin = false;
    std::uint64_t branch_count = 0;
    std::optional<BranchWitness> witness;  // first failing branch by mask order
};

/// Exhaustive decomposition into 2^q linear branches, each rank-checked
/// exactly. The solution set of the quadratic system is exactly the union
/// of the branch solution spaces. cap bounds q.
BranchResult branch_solve(const QuadraticSystem& sys, std::size_t cap = 20,
                          unsigned threads = 1);

struct CriterionResult {
    bool holds = false;
    /// First (i, j), 1-based, whose nested expression is zero or undefined.
    std::optional<std::pair<int, int>> failing_pair;
};

/// Nonvanishing of 1 - c_i/(1 - c_{i+1}/(... (1 - c_j))) for all pairs
/// i <= j. Chains are evaluated inner-to-outer; a zero makes the enclosing
/// expressions undefined and counts as failure at that pair.
CriterionResult continued_fraction_criterion(const std::vector<Rational>& c);

struct RecurrenceParams {
    Rational c;
    std::size_t max_index;  // compute x_0 .. x_M
};

enum class RecurrenceCertificate {
    lower_bound_sqrt,  // c in [0, 1/4]: 2x_m - 1 >= 0 and (2x_m - 1)^2 >= 1 - 4c
    at_least_one,      // c < 0:         x_m >= 1
    none,              // c > 1/4: values only, may hit an undefined step
};

struct RecurrenceResult {
    std::vector<Rational> values;  // x_0 onward, stops early if undefined
    std::optional<std::size_t> undefined_at;
    RecurrenceCertificate kind = RecurrenceCertificate::none;
    std::vector<bool> certified;  // entry m-1 for x_m, m >= 1

    bool all_certified() const;
};

/// x_0 = 1, x_m = 1 - c/x_{m-1}, in exact rational arithmetic, with the
/// square-root-free positivity certificates.
RecurrenceResult recurrence_with_bounds(const RecurrenceParams& params);

/// Agreement report of the three engines on one system.
struct SystemReport {
    std::size_t q = 0;
    std::vector<Rational> a, b, c;
    bool trivial = false;  // q = 1 path, solved without branch enumeration
    CriterionResult criterion;
    BranchResult branches;
    bool groebner_dimension_zero = false;
    bool only_origin = false;
    bool consistent = false;
};

/// Runs branch decomposition, the continued-fraction criterion and the
/// Groebner dimension-zero test. Throws InternalError if the branch and
/// Groebner engines disagree, or if the criterion holds while a nonzero
/// solution exists.
SystemReport cross_check(const QuadraticSystem& sys, std::size_t branch_cap = 20,
                         unsigned threads = 1);

/// cross_check of peterson_system(n) for n >= 3; for n = 2 the one-variable
/// system z^2 = 0 is reported as only-origin on the trivial path.
SystemReport peterson_only_origin(int n, std::size_t branch_cap = 20, unsigned threads = 1);

}  // namespace peterson
