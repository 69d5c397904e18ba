#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "peterson/groebner.hpp"

namespace peterson {

/// Rational closed form numerator / prod_i (1 - s^{d_i}), with integer
/// numerator coefficients indexed by the power of s.
struct SeriesClosedForm {
    std::vector<long long> numerator;
    std::vector<int> denominator_degrees;
};

/// Truncated Hilbert series of an evenly graded vector space: coefficient
/// index d/2 holds the dimension in cohomological degree d. When a closed
/// form is attached, its expansion is checked against the coefficients.
class HilbertSeries {
  public:
    HilbertSeries(int truncation, std::vector<std::uint64_t> coefficients,
                  std::optional<SeriesClosedForm> closed_form = std::nullopt);

    int truncation() const { return truncation_; }
    const std::vector<std::uint64_t>& coefficients() const { return coefficients_; }
    std::uint64_t coefficient(int degree) const;
    const std::optional<SeriesClosedForm>& closed_form() const { return closed_form_; }

    /// Sum of all coefficients; the total dimension when the series has
    /// finite support inside the truncation window.
    std::uint64_t total() const;

    friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
        return a.truncation_ == b.truncation_ && a.coefficients_ == b.coefficients_;
    }

  private:
    int truncation_;
    std::vector<std::uint64_t> coefficients_;
    std::optional<SeriesClosedForm> closed_form_;
};

/// Expansion of numerator / prod (1 - s^{d_i}) up to s^truncation.
std::vector<long long> expand_closed_form(const SeriesClosedForm& form, int truncation);

/// Graded dimensions of the quotient by the ideal of g, via standard
/// monomial counts. No closed form is attached.
HilbertSeries series_of_quotient(const GroebnerBasis& g, int truncation);

enum class SeriesVariant { equivariant, ordinary };

/// The known Peterson series: (1+s^2)^{n-1} for ordinary cohomology and
/// (1+s^2)^{n-1}/(1-s^2) for the circle-equivariant ring; n >= 2.
HilbertSeries expected_peterson_series(int n, SeriesVariant variant, int truncation);

/// Series test for regularity of a homogeneous sequence: true iff the
/// quotient coefficients equal the expansion of
///   prod_k (1 - s^{deg f_k}) / (1 - s^2)^{ambient_vars}
/// up to the quotient's truncation.
bool regular_sequence_identity_check(std::size_t ambient_vars,
                                     const std::vector<int>& generator_degrees,
                                     const HilbertSeries& quotient);

}  // namespace peterson
