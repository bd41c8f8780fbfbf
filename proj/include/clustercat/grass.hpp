#pragma once

#include "clustercat/exactalg.hpp"
#include "clustercat/linalg.hpp"
#include "clustercat/rep.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace clustercat {

/// Enumerates the e-dimensional subspaces of F_q^d, each exactly once, as
/// reduced row-echelon bases (e x d).
class SubspaceIter {
public:
    SubspaceIter(int d, int e, std::uint32_t q);

    bool done() const { return done_; }
    const Matrix<std::uint32_t>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }
    void advance();

private:
    void load_pivots();
    void write_basis();

    int d_;
    int e_;
    std::uint32_t q_;
    bool done_ = false;
    std::vector<int> pivots_;
    std::vector<std::pair<int, int>> free_slots_;  // (row, column)
    std::vector<std::uint32_t> free_values_;
    Matrix<std::uint32_t> basis_;
};

/// True iff v lies in the row span of an RREF basis over F_q.
bool in_span(const Matrix<std::uint32_t>& rref, const std::vector<int>& pivots, std::vector<std::uint32_t> v,
             std::uint32_t q);

/// Gaussian binomial [d choose e]_q by the product formula.
BigInt gaussian_binomial(int d, int e, std::int64_t q);

/// [d choose e]_q by enumeration.
BigInt count_subspaces(int d, int e, std::int64_t q);

/// Number of subrepresentations of V over F_q with dimension vector e.
BigInt count_subreps(const Representation& v, const DimVec& e, std::int64_t q);

struct GrassCount {
    DimVec e;
    std::int64_t q;
    BigInt count;
};

/// sum_i e_i (d_i - e_i): dimension of the ambient product of Grassmannians.
int grassmannian_degree_bound(const Representation& v, const DimVec& e);

std::vector<std::int64_t> first_primes(std::size_t count);

/// Point counts at the first D+2 primes, interpolated to N(q) of degree <= D.
/// Throws NotPolynomialCount if the counts do not come from an integer
/// polynomial of that degree.
UniPolyQ counting_polynomial(const Representation& v, const DimVec& e);

/// Euler characteristic of Gr_e(V), read off as N(1).
BigInt euler_char(const Representation& v, const DimVec& e);

/// euler_char for every e <= dim V (zeros included), lexicographic in e.
std::map<DimVec, BigInt> grass_table(const Representation& v);

}  // namespace clustercat
