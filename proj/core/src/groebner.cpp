#include "peterson/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

namespace peterson {

IdealBasis::IdealBasis(VariableSetPtr vars, MonomialOrder order,
                       std::vector<Polynomial> generators)
    : vars_(std::move(vars)), order_(std::move(order)) {
    if (order_.nvars() != vars_->size())
        throw DomainError("ideal order does not match variable set");
    for (Polynomial& g : generators) {
        if (g.is_zero()) continue;
        if (!(*g.variables() == *vars_))
            throw DomainError("ideal generator over a different variable set");
        if (!g.is_homogeneous()) throw DomainError("ideal generator is not homogeneous");
        generators_.push_back(g.order() == order_ ? std::move(g) : g.with_order(order_));
    }
}

namespace {

// Full remainder of division by a list; deterministic (first divisor whose
// leading term divides wins).
Polynomial divide_full(const Polynomial& p, const std::vector<Polynomial>& divisors) {
    Polynomial work = p;
    std::vector<Term> remainder;
    while (!work.is_zero()) {
        const Term& lt = work.leading_term();
        const Polynomial* red = nullptr;
        for (const Polynomial& g : divisors) {
            if (!g.is_zero() && divides(g.leading_monomial(), lt.mono)) {
                red = &g;
                break;
            }
        }
        if (red != nullptr) {
            Monomial q = quotient(lt.mono, red->leading_monomial());
            Rational f = lt.coeff / red->leading_coefficient();
            work = work - red->term_scaled(q, f);
        } else {
            remainder.push_back(lt);
            std::vector<Term> rest(work.terms().begin() + 1, work.terms().end());
            work = Polynomial::from_terms(work.variables(), work.order(), std::move(rest));
        }
    }
    return Polynomial::from_terms(p.variables(), p.order(), std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial lhs = f.term_scaled(quotient(l, f.leading_monomial()),
                                   Rational(1) / f.leading_coefficient());
    Polynomial rhs = g.term_scaled(quotient(l, g.leading_monomial()),
                                   Rational(1) / g.leading_coefficient());
    return lhs - rhs;
}

// Inter-reduce a basis in place until it is the reduced basis: minimal
// leading terms, monic, fully tail-reduced.
void reduce_basis(std::vector<Polynomial>& basis, const MonomialOrder& order) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(basis.size() - 1);
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (j != i) others.push_back(basis[j]);
            Polynomial r = divide_full(basis[i], others);
            if (r.is_zero()) {
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
            r = r.monic();
            if (!(r == basis[i])) {
                basis[i] = std::move(r);
                changed = true;
                break;
            }
        }
    }
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& x, const Polynomial& y) {
        return order.compare(x.leading_monomial(), y.leading_monomial()) ==
               std::strong_ordering::less;
    });
}

}  // namespace

GroebnerBasis buchberger(const IdealBasis& basis, std::optional<int> degree_cap) {
    const MonomialOrder& order = basis.order();
    std::vector<Polynomial> g;
    for (const Polynomial& p : basis.generators()) g.push_back(p.monic());

    // pending pairs keyed by (lcm cohomological degree, i, j), i < j
    using PairKey = std::tuple<int, std::size_t, std::size_t>;
    std::set<PairKey> pending;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = lcm(g[i].leading_monomial(), g[j].leading_monomial());
            pending.insert({l.cohomological_degree(), i, j});
        }
    };
    for (std::size_t j = 0; j < g.size(); ++j) push_pairs_for(j);

    auto still_pending = [&](std::size_t x, std::size_t y) {
        std::size_t i = std::min(x, y), j = std::max(x, y);
        Monomial l = lcm(g[i].leading_monomial(), g[j].leading_monomial());
        return pending.count({l.cohomological_degree(), i, j}) != 0;
    };

    while (!pending.empty()) {
        auto [deg, i, j] = *pending.begin();
        pending.erase(pending.begin());
        if (degree_cap && deg > *degree_cap) continue;

        const Monomial& lmi = g[i].leading_monomial();
        const Monomial& lmj = g[j].leading_monomial();
        if (coprime(lmi, lmj)) continue;  // S-polynomial reduces to zero

        // chain criterion: some other leading term divides the lcm and both
        // connecting pairs were already handled
        Monomial l = lcm(lmi, lmj);
        bool skip = false;
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (k == i || k == j) continue;
            if (divides(g[k].leading_monomial(), l) && !still_pending(i, k) &&
                !still_pending(j, k)) {
                skip = true;
                break;
            }
        }
        if (skip) continue;

        Polynomial h = divide_full(s_polynomial(g[i], g[j]), g);
        if (!h.is_zero()) {
            g.push_back(h.monic());
            push_pairs_for(g.size() - 1);
        }
    }

    reduce_basis(g, order);
    return GroebnerBasis(basis.variables(), order, std::move(g));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g) {
    if (!(*p.variables() == *g.variables()))
        throw DomainError("polynomial over a different variable set than the basis");
    Polynomial q = p.order() == g.order() ? p : p.with_order(g.order());
    return divide_full(q, g.elements());
}

bool ideal_membership(const Polynomial& p, const GroebnerBasis& g) {
    return normal_form(p, g).is_zero();
}

namespace {

void enumerate_exponents(std::size_t nvars, std::uint32_t total, std::vector<std::uint32_t>& cur,
                         std::size_t at, std::vector<Monomial>& out) {
    if (at + 1 == nvars) {
        cur[at] = total;
        out.emplace_back(cur);
        return;
    }
    for (std::uint32_t e = 0; e <= total; ++e) {
        cur[at] = e;
        enumerate_exponents(nvars, total - e, cur, at + 1, out);
    }
}

}  // namespace

std::map<int, std::vector<Monomial>> standard_monomials(const GroebnerBasis& g, int max_degree) {
    if (max_degree < 0 || max_degree % 2 != 0)
        throw DomainError("degree bound must be even and nonnegative");
    std::vector<const Monomial*> leads;
    for (const Polynomial& p : g.elements()) leads.push_back(&p.leading_monomial());

    std::map<int, std::vector<Monomial>> result;
    std::size_t nvars = g.variables()->size();
    for (int d = 0; d <= max_degree; d += 2) {
        std::vector<Monomial> all;
        if (nvars == 0) {
            if (d == 0) all.emplace_back(std::vector<std::uint32_t>{});
        } else {
            std::vector<std::uint32_t> cur(nvars, 0);
            enumerate_exponents(nvars, static_cast<std::uint32_t>(d / 2), cur, 0, all);
        }
        std::vector<Monomial> standard;
        for (Monomial& m : all) {
            bool reducible = false;
            for (const Monomial* lt : leads) {
                if (divides(*lt, m)) {
                    reducible = true;
                    break;
                }
            }
            if (!reducible) standard.push_back(std::move(m));
        }
        std::sort(standard.begin(), standard.end(), [&](const Monomial& x, const Monomial& y) {
            return g.order().compare(x, y) == std::strong_ordering::greater;
        });
        result.emplace(d, std::move(standard));
    }
    return result;
}

bool is_dimension_zero(const GroebnerBasis& g) {
    for (std::size_t v = 0; v < g.variables()->size(); ++v) {
        bool has_pure_power = false;
        for (const Polynomial& p : g.elements()) {
            const Monomial& lt = p.leading_monomial();
            if (lt.exponents[v] == 0) continue;
            bool pure = true;
            for (std::size_t u = 0; u < lt.exponents.size(); ++u)
                if (u != v && lt.exponents[u] != 0) pure = false;
            if (pure) {
                has_pure_power = true;
                break;
            }
        }
        if (!has_pure_power) return false;
    }
    return true;
}

bool is_reduced_groebner_basis(const GroebnerBasis& g) {
    const auto& elems = g.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i].is_zero()) return false;
        if (!(elems[i].leading_coefficient() == Rational(1))) return false;
        for (const Term& t : elems[i].terms())
            for (std::size_t j = 0; j < elems.size(); ++j)
                if (j != i && divides(elems[j].leading_monomial(), t.mono)) return false;
    }
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            if (!divide_full(s_polynomial(elems[i], elems[j]), elems).is_zero()) return false;
    return true;
}

}  // namespace peterson
