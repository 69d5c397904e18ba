#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "peterson/errors.hpp"

namespace peterson {

/// Named variables of a polynomial ring. Every variable carries
/// cohomological degree 2, so the grading of a monomial is twice its
/// exponent sum and all rings are evenly graded.
class VariableSet {
  public:
    explicit VariableSet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const VariableSet& a, const VariableSet& b) {
        return a.names_ == b.names_;
    }

  private:
    std::vector<std::string> names_;
};

using VariableSetPtr = std::shared_ptr<const VariableSet>;

inline VariableSetPtr make_variables(std::vector<std::string> names) {
    return std::make_shared<const VariableSet>(std::move(names));
}

/// Exponent vector indexed by a VariableSet.
struct Monomial {
    std::vector<std::uint32_t> exponents;

    explicit Monomial(std::size_t nvars) : exponents(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exponents(std::move(e)) {}

    std::uint32_t total_degree() const;
    int cohomological_degree() const { return 2 * static_cast<int>(total_degree()); }
    bool is_one() const { return total_degree() == 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exponents == b.exponents;
    }
};

bool divides(const Monomial& d, const Monomial& m);
Monomial operator*(const Monomial& a, const Monomial& b);
/// a / b; requires divides(b, a).
Monomial quotient(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

enum class OrderKind { grevlex, lex };

/// A multiplicative total order on monomials: graded reverse lexicographic
/// or lexicographic, over an explicit variable precedence (highest first).
class MonomialOrder {
  public:
    MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence);

    /// Identity precedence (declaration order of the VariableSet).
    static MonomialOrder grevlex(std::size_t nvars);
    static MonomialOrder lex(std::size_t nvars);

    OrderKind kind() const { return kind_; }
    const std::vector<std::size_t>& precedence() const { return precedence_; }
    std::size_t nvars() const { return precedence_.size(); }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind_ == b.kind_ && a.precedence_ == b.precedence_;
    }

  private:
    OrderKind kind_;
    std::vector<std::size_t> precedence_;
};

}  // namespace peterson
