#pragma once

#include "peterson/groebner.hpp"

namespace peterson {

enum class PresentationVariant { equivariant, ordinary, flag };

/// Variables [t, xi_1 .. xi_{n-1}]; index 0 is t, index k is xi_k.
VariableSetPtr equivariant_variables(int n);
/// Variables [xi_1 .. xi_{n-1}]; index k-1 is xi_k.
VariableSetPtr ordinary_variables(int n);
/// Variables [tau_1 .. tau_n, t_1 .. t_n]; index i-1 is tau_i, index
/// n+i-1 is t_i.
VariableSetPtr flag_variables(int n);
/// Single variable [t] for fixed-point restrictions.
VariableSetPtr point_variables();

/// Precedence xi_1 > ... > xi_{n-1} > t; grevlex by default.
MonomialOrder equivariant_order(int n, OrderKind kind = OrderKind::grevlex);

/// One of the three presented rings. The ideal generators are, by variant:
///   equivariant: xi_k(xi_k - 1/2 xi_{k-1} - 1/2 xi_{k+1} - t), k = 1..n-1,
///                with xi_0 = xi_n = 0 (the vanished terms are dropped);
///   ordinary:    the same with t removed;
///   flag:        e_i(tau) - e_i(t), i = 1..n.
struct PresentationRing {
    int n;
    PresentationVariant variant;
    IdealBasis ideal;

    const VariableSetPtr& variables() const { return ideal.variables(); }
    const MonomialOrder& order() const { return ideal.order(); }
};

PresentationRing build_presentation(int n, PresentationVariant variant,
                                    OrderKind kind = OrderKind::grevlex);

}  // namespace peterson
