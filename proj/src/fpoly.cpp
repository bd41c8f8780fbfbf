#include "clustercat/fpoly.hpp"

#include "clustercat/grass.hpp"

namespace clustercat {

IntPolyY y_monomial(const DimVec& e) { return IntPolyY::monomial(ExpVec(e.begin(), e.end())); }

FPolynomial f_polynomial(const Representation& v) {
    LaurentPoly poly(v.dims().size());
    for (const auto& [e, chi] : grass_table(v)) poly.add_term(ExpVec(e.begin(), e.end()), chi);
    return {IntPolyY(std::move(poly)), v.dims()};
}

bool check_product(const Representation& v, const Representation& w) {
    const Representation sum = direct_sum(v, w);
    return f_polynomial(v).poly * f_polynomial(w).poly == f_polynomial(sum).poly;
}

bool check_ar_identity(const Representation& tau_v, const Representation& e, const Representation& v) {
    return f_polynomial(tau_v).poly * f_polynomial(v).poly == f_polynomial(e).poly + y_monomial(v.dims());
}

}  // namespace clustercat
