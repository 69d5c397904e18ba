#include "peterson/presentation.hpp"

#include <numeric>

namespace peterson {

VariableSetPtr equivariant_variables(int n) {
    if (n < 2) throw DomainError("presentation requires n >= 2");
    std::vector<std::string> names{"t"};
    for (int k = 1; k <= n - 1; ++k) names.push_back("xi_" + std::to_string(k));
    return make_variables(std::move(names));
}

VariableSetPtr ordinary_variables(int n) {
    if (n < 2) throw DomainError("presentation requires n >= 2");
    std::vector<std::string> names;
    for (int k = 1; k <= n - 1; ++k) names.push_back("xi_" + std::to_string(k));
    return make_variables(std::move(names));
}

VariableSetPtr flag_variables(int n) {
    if (n < 2) throw DomainError("presentation requires n >= 2");
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("tau_" + std::to_string(i));
    for (int i = 1; i <= n; ++i) names.push_back("t_" + std::to_string(i));
    return make_variables(std::move(names));
}

VariableSetPtr point_variables() { return make_variables({"t"}); }

namespace {

MonomialOrder identity_order(OrderKind kind, std::size_t nvars) {
    std::vector<std::size_t> id(nvars);
    std::iota(id.begin(), id.end(), 0);
    return MonomialOrder(kind, std::move(id));
}

}  // namespace

MonomialOrder equivariant_order(int n, OrderKind kind) {
    std::vector<std::size_t> precedence;
    for (int k = 1; k <= n - 1; ++k) precedence.push_back(static_cast<std::size_t>(k));
    precedence.push_back(0);  // t last
    return MonomialOrder(kind, std::move(precedence));
}

PresentationRing build_presentation(int n, PresentationVariant variant, OrderKind kind) {
    if (n < 2) throw DomainError("presentation requires n >= 2");

    if (variant == PresentationVariant::flag) {
        VariableSetPtr vars = flag_variables(n);
        MonomialOrder order = identity_order(kind, vars->size());
        std::vector<std::size_t> taus, ts;
        for (int i = 0; i < n; ++i) taus.push_back(static_cast<std::size_t>(i));
        for (int i = 0; i < n; ++i) ts.push_back(static_cast<std::size_t>(n + i));
        std::vector<Polynomial> gens;
        for (int i = 1; i <= n; ++i) {
            Polynomial e_tau = elementary_symmetric(vars, order, static_cast<unsigned>(i), taus);
            Polynomial e_t = elementary_symmetric(vars, order, static_cast<unsigned>(i), ts);
            gens.push_back(e_tau - e_t);
        }
        return PresentationRing{n, variant, IdealBasis(vars, order, std::move(gens))};
    }

    const bool equivariant = variant == PresentationVariant::equivariant;
    VariableSetPtr vars = equivariant ? equivariant_variables(n) : ordinary_variables(n);
    MonomialOrder order =
        equivariant ? equivariant_order(n, kind) : identity_order(kind, vars->size());
    auto xi = [&](int k) {
        std::size_t index =
            equivariant ? static_cast<std::size_t>(k) : static_cast<std::size_t>(k - 1);
        return Polynomial::variable(vars, order, index);
    };

    std::vector<Polynomial> gens;
    Rational half(1, 2);
    for (int k = 1; k <= n - 1; ++k) {
        Polynomial inner = xi(k);
        if (k - 1 >= 1) inner = inner - xi(k - 1).scaled(half);
        if (k + 1 <= n - 1) inner = inner - xi(k + 1).scaled(half);
        if (equivariant) inner = inner - Polynomial::variable(vars, order, 0);
        gens.push_back(xi(k) * inner);
    }
    return PresentationRing{n, variant, IdealBasis(vars, order, std::move(gens))};
}

}  // namespace peterson
