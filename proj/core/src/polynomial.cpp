#include "peterson/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace peterson {

// --- VariableSet / Monomial / MonomialOrder -------------------------------

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw DomainError("empty variable name");
        if (!seen.insert(n).second) throw DomainError("duplicate variable name: " + n);
    }
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

std::uint32_t Monomial::total_degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), std::uint32_t{0});
}

bool divides(const Monomial& d, const Monomial& m) {
    for (std::size_t i = 0; i < d.exponents.size(); ++i)
        if (d.exponents[i] > m.exponents[i]) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exponents.size(); ++i) r.exponents[i] += b.exponents[i];
    return r;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exponents.size(); ++i) {
        if (b.exponents[i] > r.exponents[i]) throw DomainError("monomial quotient is not exact");
        r.exponents[i] -= b.exponents[i];
    }
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exponents.size(); ++i)
        r.exponents[i] = std::max(r.exponents[i], b.exponents[i]);
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exponents.size(); ++i)
        if (a.exponents[i] > 0 && b.exponents[i] > 0) return false;
    return true;
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
    std::vector<bool> seen(precedence_.size(), false);
    for (std::size_t v : precedence_) {
        if (v >= precedence_.size() || seen[v])
            throw DomainError("monomial order precedence is not a permutation");
        seen[v] = true;
    }
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
    std::vector<std::size_t> id(nvars);
    std::iota(id.begin(), id.end(), 0);
    return MonomialOrder(OrderKind::grevlex, std::move(id));
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
    std::vector<std::size_t> id(nvars);
    std::iota(id.begin(), id.end(), 0);
    return MonomialOrder(OrderKind::lex, std::move(id));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.exponents.size() != precedence_.size() || b.exponents.size() != precedence_.size())
        throw DomainError("monomial size does not match order");
    if (kind_ == OrderKind::lex) {
        for (std::size_t v : precedence_) {
            if (a.exponents[v] != b.exponents[v])
                return a.exponents[v] < b.exponents[v] ? std::strong_ordering::less
                                                       : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }
    // grevlex: total degree first, then the last (lowest-precedence)
    // differing exponent with inverted sign.
    std::uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
    for (auto it = precedence_.rbegin(); it != precedence_.rend(); ++it) {
        std::size_t v = *it;
        if (a.exponents[v] != b.exponents[v])
            return a.exponents[v] > b.exponents[v] ? std::strong_ordering::less
                                                   : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

// --- Polynomial ------------------------------------------------------------

Polynomial::Polynomial(VariableSetPtr vars, MonomialOrder order)
    : vars_(std::move(vars)), order_(std::move(order)) {
    if (order_.nvars() != vars_->size())
        throw DomainError("monomial order size does not match variable set");
}

Polynomial Polynomial::zero(VariableSetPtr vars, MonomialOrder order) {
    return Polynomial(std::move(vars), std::move(order));
}

Polynomial Polynomial::constant(VariableSetPtr vars, MonomialOrder order, const Rational& c) {
    Polynomial p(std::move(vars), std::move(order));
    if (!c.is_zero()) p.terms_.push_back({Monomial(p.vars_->size()), c});
    return p;
}

Polynomial Polynomial::variable(VariableSetPtr vars, MonomialOrder order, std::size_t index) {
    Polynomial p(std::move(vars), std::move(order));
    if (index >= p.vars_->size()) throw DomainError("variable index out of range");
    Monomial m(p.vars_->size());
    m.exponents[index] = 1;
    p.terms_.push_back({std::move(m), Rational(1)});
    return p;
}

Polynomial Polynomial::from_terms(VariableSetPtr vars, MonomialOrder order,
                                  std::vector<Term> terms) {
    Polynomial p(std::move(vars), std::move(order));
    for (const Term& t : terms)
        if (t.mono.exponents.size() != p.vars_->size())
            throw DomainError("term does not match variable set");
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    std::stable_sort(terms_.begin(), terms_.end(), [this](const Term& x, const Term& y) {
        return order_.compare(x.mono, y.mono) == std::strong_ordering::greater;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
    return terms_.front();
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::uint32_t d = terms_.front().mono.total_degree();
    for (const Term& t : terms_)
        if (t.mono.total_degree() != d) return false;
    return true;
}

int Polynomial::cohomological_degree() const {
    if (terms_.empty()) return -1;
    return terms_.front().mono.cohomological_degree();
}

Rational Polynomial::coefficient(const Monomial& m) const {
    for (const Term& t : terms_)
        if (t.mono == m) return t.coeff;
    return Rational(0);
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
    Polynomial p(vars_, std::move(order));
    p.terms_ = terms_;
    p.normalize();
    return p;
}

namespace {
void require_compatible(const Polynomial& a, const Polynomial& b) {
    if (!(*a.variables() == *b.variables()))
        throw DomainError("polynomials over different variable sets");
    if (!(a.order() == b.order()))
        throw DomainError("polynomials carry different monomial orders");
}
}  // namespace

Polynomial Polynomial::operator-() const { return scaled(Rational(-1)); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_compatible(a, b);
    Polynomial r(a.vars_, a.order_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        auto c = a.order_.compare(a.terms_[i].mono, b.terms_[j].mono);
        if (c == std::strong_ordering::greater) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (c == std::strong_ordering::less) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            Rational s = a.terms_[i].coeff + b.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back({a.terms_[i].mono, s});
            ++i, ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_compatible(a, b);
    Polynomial r(a.vars_, a.order_);
    for (const Term& tb : b.terms_) {
        Polynomial part = a.term_scaled(tb.mono, tb.coeff);
        r = r + part;
    }
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(vars_, order_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
}

Polynomial Polynomial::term_scaled(const Monomial& m, const Rational& c) const {
    Polynomial r(vars_, order_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial acc = Polynomial::constant(vars_, order_, Rational(1));
    Polynomial base = *this;
    while (e != 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / leading_coefficient());
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!(*a.vars_ == *b.vars_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    if (a.order_ == b.order_) {
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].mono == b.terms_[i].mono && a.terms_[i].coeff == b.terms_[i].coeff))
                return false;
        return true;
    }
    return a.with_order(b.order_) == b;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        Rational mag = t.coeff.abs();
        if (first) {
            if (t.coeff.sign() < 0) os << "-";
            first = false;
        } else {
            os << (t.coeff.sign() < 0 ? " - " : " + ");
        }
        bool wrote_factor = false;
        if (!(mag == Rational(1)) || t.mono.is_one()) {
            os << mag.str();
            wrote_factor = true;
        }
        for (std::size_t v = 0; v < vars_->size(); ++v) {
            std::uint32_t e = t.mono.exponents[v];
            if (e == 0) continue;
            if (wrote_factor) os << "*";
            os << vars_->name(v);
            if (e > 1) os << "^" << e;
            wrote_factor = true;
        }
    }
    return os.str();
}

// --- Substitution ----------------------------------------------------------

Substitution::Substitution(VariableSetPtr source, VariableSetPtr target, MonomialOrder target_order)
    : source_(std::move(source)), target_(std::move(target)), order_(std::move(target_order)),
      images_(source_->size()) {
    if (order_.nvars() != target_->size())
        throw DomainError("target order does not match target variable set");
}

void Substitution::set(std::size_t source_index, Polynomial image) {
    if (source_index >= source_->size()) throw DomainError("substituted variable out of range");
    if (!(*image.variables() == *target_))
        throw DomainError("substitution image lies in the wrong ring");
    if (!image.is_zero()) {
        if (!image.is_homogeneous() || image.cohomological_degree() != 2)
            throw DomainError("substitution image must be zero or homogeneous of degree 2");
    }
    images_[source_index] = std::move(image);
}

const Polynomial* Substitution::image(std::size_t source_index) const {
    if (source_index >= images_.size() || !images_[source_index]) return nullptr;
    return &*images_[source_index];
}

Polynomial substitute(const Polynomial& p, const Substitution& s) {
    if (!(*p.variables() == *s.source()))
        throw DomainError("polynomial does not live in the substitution's source ring");
    Polynomial acc = Polynomial::zero(s.target(), s.target_order());
    for (const Term& t : p.terms()) {
        Polynomial factor = Polynomial::constant(s.target(), s.target_order(), t.coeff);
        for (std::size_t v = 0; v < t.mono.exponents.size(); ++v) {
            std::uint32_t e = t.mono.exponents[v];
            if (e == 0) continue;
            const Polynomial* img = s.image(v);
            if (img == nullptr)
                throw DomainError("no substitution image for variable " + p.variables()->name(v));
            factor = factor * img->pow(e);
        }
        acc = acc + factor;
    }
    return acc;
}

Polynomial elementary_symmetric(VariableSetPtr vars, MonomialOrder order, unsigned k,
                                std::span<const std::size_t> var_indices) {
    if (k < 1 || k > var_indices.size())
        throw DomainError("elementary symmetric index out of range");
    std::vector<Term> terms;
    std::vector<std::size_t> pick(k);
    // enumerate k-subsets of var_indices by position
    auto emit = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
        if (depth == k) {
            Monomial m(vars->size());
            for (std::size_t pos : pick) m.exponents[var_indices[pos]] = 1;
            terms.push_back({std::move(m), Rational(1)});
            return;
        }
        for (std::size_t i = start; i + (k - depth) <= var_indices.size(); ++i) {
            pick[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    emit(emit, 0, 0);
    return Polynomial::from_terms(std::move(vars), std::move(order), std::move(terms));
}

}  // namespace peterson
