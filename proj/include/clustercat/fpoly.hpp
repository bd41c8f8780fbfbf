#pragma once

#include "clustercat/exactalg.hpp"
#include "clustercat/rep.hpp"

namespace clustercat {

/// F_V(y) = sum_e chi(Gr_e(V)) y^e, together with dim V.
struct FPolynomial {
    IntPolyY poly;
    DimVec dim;
};

FPolynomial f_polynomial(const Representation& v);

/// y^e as a polynomial in n variables.
IntPolyY y_monomial(const DimVec& e);

/// F_V * F_W == F_{V (+) W}.
bool check_product(const Representation& v, const Representation& w);

/// F_{tau V} * F_V == F_E + y^{dim V} for an almost-split sequence
/// 0 -> tau V -> E -> V -> 0 supplied by the caller.
bool check_ar_identity(const Representation& tau_v, const Representation& e, const Representation& v);

}  // namespace clustercat
