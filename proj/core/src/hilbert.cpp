#include "peterson/hilbert.hpp"

#include <numeric>

namespace peterson {

HilbertSeries::HilbertSeries(int truncation, std::vector<std::uint64_t> coefficients,
                             std::optional<SeriesClosedForm> closed_form)
    : truncation_(truncation), coefficients_(std::move(coefficients)),
      closed_form_(std::move(closed_form)) {
    if (truncation_ < 0 || truncation_ % 2 != 0)
        throw DomainError("series truncation must be even and nonnegative");
    if (coefficients_.size() != static_cast<std::size_t>(truncation_ / 2 + 1))
        throw DomainError("series coefficient count does not match truncation");
    if (closed_form_) {
        std::vector<long long> expanded = expand_closed_form(*closed_form_, truncation_);
        for (int d = 0; d <= truncation_; d += 2) {
            long long want = expanded[static_cast<std::size_t>(d)];
            if (want < 0 || static_cast<std::uint64_t>(want) != coefficients_[d / 2])
                throw DomainError("closed form does not expand to the stated coefficients");
        }
        for (int s = 1; s <= truncation_; s += 2)
            if (expanded[static_cast<std::size_t>(s)] != 0)
                throw DomainError("closed form has odd-degree terms");
    }
}

std::uint64_t HilbertSeries::coefficient(int degree) const {
    if (degree < 0 || degree % 2 != 0 || degree > truncation_)
        throw DomainError("series coefficient outside truncation");
    return coefficients_[degree / 2];
}

std::uint64_t HilbertSeries::total() const {
    return std::accumulate(coefficients_.begin(), coefficients_.end(), std::uint64_t{0});
}

std::vector<long long> expand_closed_form(const SeriesClosedForm& form, int truncation) {
    std::vector<long long> c(static_cast<std::size_t>(truncation) + 1, 0);
    for (std::size_t i = 0; i < form.numerator.size() && i < c.size(); ++i)
        c[i] = form.numerator[i];
    // dividing by (1 - s^d) is a running sum with stride d
    for (int d : form.denominator_degrees) {
        if (d <= 0) throw DomainError("denominator factor degree must be positive");
        for (std::size_t i = static_cast<std::size_t>(d); i < c.size(); ++i)
            c[i] += c[i - static_cast<std::size_t>(d)];
    }
    return c;
}

HilbertSeries series_of_quotient(const GroebnerBasis& g, int truncation) {
    auto table = standard_monomials(g, truncation);
    std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(truncation / 2 + 1), 0);
    for (const auto& [degree, monos] : table) coeffs[degree / 2] = monos.size();
    return HilbertSeries(truncation, std::move(coeffs));
}

HilbertSeries expected_peterson_series(int n, SeriesVariant variant, int truncation) {
    if (n < 2) throw DomainError("Peterson series requires n >= 2");
    SeriesClosedForm form;
    // (1 + s^2)^{n-1}
    form.numerator.assign(static_cast<std::size_t>(2 * (n - 1) + 1), 0);
    long long binom = 1;
    for (int k = 0; k <= n - 1; ++k) {
        form.numerator[static_cast<std::size_t>(2 * k)] = binom;
        binom = binom * (n - 1 - k) / (k + 1);
    }
    if (variant == SeriesVariant::equivariant) form.denominator_degrees.push_back(2);

    std::vector<long long> expanded = expand_closed_form(form, truncation);
    std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(truncation / 2 + 1), 0);
    for (int d = 0; d <= truncation; d += 2)
        coeffs[d / 2] = static_cast<std::uint64_t>(expanded[static_cast<std::size_t>(d)]);
    return HilbertSeries(truncation, std::move(coeffs), std::move(form));
}

bool regular_sequence_identity_check(std::size_t ambient_vars,
                                     const std::vector<int>& generator_degrees,
                                     const HilbertSeries& quotient) {
    for (int d : generator_degrees) {
        if (d <= 0 || d % 2 != 0) throw DomainError("generator degrees must be positive and even");
        if (d > quotient.truncation())
            throw DomainError("quotient truncation is below a generator degree");
    }
    // numerator prod_k (1 - s^{deg f_k})
    SeriesClosedForm form;
    form.numerator.assign(1, 1);
    for (int d : generator_degrees) {
        std::vector<long long> next(form.numerator.size() + static_cast<std::size_t>(d), 0);
        for (std::size_t i = 0; i < form.numerator.size(); ++i) {
            next[i] += form.numerator[i];
            next[i + static_cast<std::size_t>(d)] -= form.numerator[i];
        }
        form.numerator = std::move(next);
    }
    form.denominator_degrees.assign(ambient_vars, 2);

    std::vector<long long> expanded = expand_closed_form(form, quotient.truncation());
    for (int d = 0; d <= quotient.truncation(); d += 2) {
        long long want = expanded[static_cast<std::size_t>(d)];
        if (want < 0) return false;
        if (static_cast<std::uint64_t>(want) != quotient.coefficient(d)) return false;
    }
    return true;
}

}  // namespace peterson
