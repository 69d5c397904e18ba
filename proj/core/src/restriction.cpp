#include "peterson/restriction.hpp"

#include "peterson/matrix.hpp"
#include "peterson/parallel.hpp"

namespace peterson {

Rational restrict_xi(int k, const PetersonFixedPoint& p) {
    if (k < 0 || k > p.n()) throw DomainError("restriction index k out of range");
    long sum = 0;
    for (int i = 1; i <= k; ++i) sum += p.w()(i) - i;
    return Rational(sum);
}

bool RestrictionVector::is_zero() const {
    for (const Polynomial& v : values)
        if (!v.is_zero()) return false;
    return true;
}

RestrictionVector restrict_class(const Polynomial& p,
                                 const std::vector<PetersonFixedPoint>& points) {
    if (points.empty()) throw DomainError("restriction needs at least one fixed point");
    int n = points.front().n();
    VariableSetPtr evars = equivariant_variables(n);
    if (!(*p.variables() == *evars))
        throw DomainError("class must live over the equivariant variables [t, xi_1..]");

    VariableSetPtr target = point_variables();
    MonomialOrder torder = MonomialOrder::grevlex(1);
    Polynomial t = Polynomial::variable(target, torder, 0);

    RestrictionVector out;
    out.points = points;
    out.values.reserve(points.size());
    for (const PetersonFixedPoint& pt : points) {
        Substitution sub(p.variables(), target, torder);
        sub.set(0, t);
        for (int k = 1; k <= n - 1; ++k)
            sub.set(static_cast<std::size_t>(k), t.scaled(restrict_xi(k, pt)));
        out.values.push_back(substitute(p, sub));
    }
    return out;
}

Polynomial flag_restriction(const Polynomial& p, const Permutation& w, bool specialize) {
    int n = w.n();
    VariableSetPtr fvars = flag_variables(n);
    if (!(*p.variables() == *fvars))
        throw DomainError("class must live over the flag variables [tau_1.., t_1..]");

    if (!specialize) {
        std::vector<std::string> names;
        for (int i = 1; i <= n; ++i) names.push_back("t_" + std::to_string(i));
        VariableSetPtr target = make_variables(std::move(names));
        MonomialOrder torder = MonomialOrder::grevlex(target->size());
        Substitution sub(p.variables(), target, torder);
        for (int i = 1; i <= n; ++i) {
            std::size_t image = static_cast<std::size_t>(w(i) - 1);
            sub.set(static_cast<std::size_t>(i - 1),
                    Polynomial::variable(target, torder, image));
            sub.set(static_cast<std::size_t>(n + i - 1),
                    Polynomial::variable(target, torder, static_cast<std::size_t>(i - 1)));
        }
        return substitute(p, sub);
    }

    VariableSetPtr target = point_variables();
    MonomialOrder torder = MonomialOrder::grevlex(1);
    Polynomial t = Polynomial::variable(target, torder, 0);
    Substitution sub(p.variables(), target, torder);
    for (int i = 1; i <= n; ++i) {
        sub.set(static_cast<std::size_t>(i - 1), t.scaled(Rational(n + 1 - w(i))));
        sub.set(static_cast<std::size_t>(n + i - 1), t.scaled(Rational(n + 1 - i)));
    }
    return substitute(p, sub);
}

RelationReport verify_relations(int n) {
    return verify_relations(build_presentation(n, PresentationVariant::equivariant),
                            enumerate_fixed_points(n));
}

RelationReport verify_relations(const PresentationRing& presentation,
                                const std::vector<PetersonFixedPoint>& points) {
    if (presentation.variant != PresentationVariant::equivariant)
        throw DomainError("relation verification runs on the equivariant presentation");
    int n = presentation.n;
    RelationReport report;
    report.n = n;

    // (a) every quadratic generator restricts to the zero vector
    report.generators_restrict_to_zero = true;
    const auto& gens = presentation.ideal.generators();
    for (std::size_t k = 0; k < gens.size(); ++k) {
        RestrictionVector rv = restrict_class(gens[k], points);
        for (std::size_t i = 0; i < rv.points.size(); ++i) {
            if (!rv.values[i].is_zero()) {
                report.generators_restrict_to_zero = false;
                report.failures.push_back({"generator_restriction", static_cast<int>(k + 1),
                                           rv.points[i].w().one_line(), rv.values[i].str()});
            }
        }
    }

    // (b) the class sum_{i<=n} (t_i - tau_i) restricts to zero, checked
    // through the flag-side route
    report.xi_n_class_restricts_to_zero = true;
    {
        VariableSetPtr fvars = flag_variables(n);
        MonomialOrder forder = MonomialOrder::grevlex(fvars->size());
        Polynomial cls = Polynomial::zero(fvars, forder);
        for (int i = 1; i <= n; ++i) {
            cls = cls + Polynomial::variable(fvars, forder, static_cast<std::size_t>(n + i - 1)) -
                  Polynomial::variable(fvars, forder, static_cast<std::size_t>(i - 1));
        }
        for (const PetersonFixedPoint& pt : points) {
            Polynomial value = flag_restriction(cls, pt.w(), true);
            if (!value.is_zero()) {
                report.xi_n_class_restricts_to_zero = false;
                report.failures.push_back(
                    {"xi_n_class", n, pt.w().one_line(), value.str()});
            }
        }
    }

    // (c) at every point and every k, one of the two factors vanishes:
    // either sum_{i<=k} (w(i)-i) = 0 or w(k) - w(k+1) - 1 = 0
    report.factor_dichotomy_holds = true;
    for (const PetersonFixedPoint& pt : points) {
        for (int k = 1; k <= n - 1; ++k) {
            bool first_factor = restrict_xi(k, pt).is_zero();
            bool second_factor = pt.w()(k) - pt.w()(k + 1) - 1 == 0;
            if (!first_factor && !second_factor) {
                report.factor_dichotomy_holds = false;
                report.failures.push_back(
                    {"factor_dichotomy", k, pt.w().one_line(), "both factors nonzero"});
            }
        }
    }
    return report;
}

InjectivityReport injectivity_check(int n, int degree_bound, unsigned threads) {
    return injectivity_check(build_presentation(n, PresentationVariant::equivariant),
                             degree_bound, threads);
}

InjectivityReport injectivity_check(const PresentationRing& presentation, int degree_bound,
                                    unsigned threads) {
    if (presentation.variant != PresentationVariant::equivariant)
        throw DomainError("injectivity certification runs on the equivariant presentation");
    if (degree_bound < 0 || degree_bound % 2 != 0)
        throw DomainError("degree bound must be even and nonnegative");
    int n = presentation.n;
    std::vector<PetersonFixedPoint> points = enumerate_fixed_points(n);

    // per-point restriction values of xi_1..xi_{n-1}
    std::vector<std::vector<Rational>> xi_values(points.size());
    for (std::size_t c = 0; c < points.size(); ++c) {
        xi_values[c].reserve(static_cast<std::size_t>(n));
        for (int k = 0; k <= n - 1; ++k) xi_values[c].push_back(restrict_xi(k, points[c]));
    }

    GroebnerBasis gb = buchberger(presentation.ideal);
    auto table = standard_monomials(gb, degree_bound);

    InjectivityReport report;
    report.n = n;
    report.degree_bound = degree_bound;
    report.degrees.resize(static_cast<std::size_t>(degree_bound / 2 + 1));

    std::vector<int> degrees;
    for (int d = 0; d <= degree_bound; d += 2) degrees.push_back(d);
    parallel_for_index(degrees.size(), threads, [&](std::size_t di) {
        int d = degrees[di];
        const std::vector<Monomial>& rows = table.at(d);
        RationalMatrix m(rows.size(), points.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Monomial& mono = rows[r];
            for (std::size_t c = 0; c < points.size(); ++c) {
                // exponent 0 belongs to t and contributes a factor of 1
                Rational entry(1);
                for (int k = 1; k <= n - 1; ++k) {
                    std::uint32_t e = mono.exponents[static_cast<std::size_t>(k)];
                    if (e != 0) entry *= xi_values[c][static_cast<std::size_t>(k)].pow(e);
                }
                m.at(r, c) = entry;
            }
        }
        std::size_t rk = rank(m);
        report.degrees[di] = {d, rows.size(), rk, rk == rows.size()};
    });

    report.all_pass = true;
    for (const InjectivityDegree& d : report.degrees)
        if (!d.pass) report.all_pass = false;
    return report;
}

}  // namespace peterson
