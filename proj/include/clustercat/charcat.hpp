#pragma once

#include "clustercat/artypea.hpp"
#include "clustercat/exactalg.hpp"
#include "clustercat/fpoly.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace clustercat {

using IndexVec = std::vector<int>;

/// Everything the cluster character needs for Q of type A_n with the
/// reference cluster-tilting object T = kQ[1]: the AR quiver, B and the
/// substitution y_i -> prod_j x_j^{b_ji}.
class TypeAContext {
public:
    /// `flip_b_sign` negates B everywhere it is used (fault injection for
    /// the verification suites). Throws NotTypeA.
    explicit TypeAContext(Quiver q, bool flip_b_sign = false);

    const Quiver& quiver() const { return quiver_; }
    int rank() const { return quiver_.vertex_count(); }
    const ARQuiver& ar() const { return ar_; }
    const ExchangeMatrix& b() const { return b_; }
    const std::vector<LaurentPoly>& y_hat() const { return y_hat_; }

    /// The interval module as a representation of Q^op (cached).
    const Representation& module(const Interval& m) const;
    const FPolynomial& f_polynomial_of(const Interval& m) const;

    /// dim Ext^1 in the cluster category (cached).
    int ext(const IndecObject& x, const IndecObject& y) const;

private:
    Quiver quiver_;
    ARQuiver ar_;
    ExchangeMatrix b_;
    std::vector<LaurentPoly> y_hat_;
    mutable std::map<Interval, Representation> modules_;
    mutable std::map<Interval, FPolynomial> fpolys_;
    mutable std::map<std::pair<IndecObject, IndecObject>, int> ext_;
};

/// ind_T of a module over Q^op: a - b from its minimal injective copresentation.
IndexVec module_index(const Representation& v);

/// e_i for T_i; a - b from the copresentation for modules.
IndexVec object_index(const TypeAContext& ctx, const IndecObject& x);

/// iota(e)_j = -sum_i b_ji e_i. Throws LengthMismatch.
IndexVec iota(const DimVec& e, const ExchangeMatrix& b);

/// x^{ind V} F_V(y-hat) for an arbitrary module V over Q^op.
LaurentPoly cc_module(const TypeAContext& ctx, const Representation& v);
LaurentPoly cc(const TypeAContext& ctx, const IndecObject& x);
/// CC of the zero object.
LaurentPoly cc_zero(const TypeAContext& ctx);

class CCTable {
public:
    const std::vector<IndecObject>& objects() const { return objects_; }
    const LaurentPoly& at(const IndecObject& x) const;
    std::optional<IndecObject> lookup(const LaurentPoly& value) const;
    std::size_t size() const { return objects_.size(); }

    /// Replaces a value without any checks. Only for negative-control fixtures.
    void overwrite_for_testing(const IndecObject& x, LaurentPoly value);

private:
    friend CCTable cc_table(const TypeAContext& ctx);

    std::vector<IndecObject> objects_;
    std::map<IndecObject, LaurentPoly> values_;
    std::map<std::string, IndecObject> inverse_;
};

/// CC over every indecomposable of the cluster category. Throws
/// CollisionDetected if two objects share a value.
CCTable cc_table(const TypeAContext& ctx);

/// Basic cluster-tilting object: summand R_i sits at position i, with the
/// Gabriel quiver of its endomorphism algebra.
struct CTObject {
    std::vector<IndecObject> summands;
    Quiver quiver;

    /// Sorted summand ids, e.g. "[1,3] T2 T3 T4".
    std::string canonical() const;
};

/// T = kQ[1]: summands T_1..T_n with quiver Q.
CTObject initial_ct_object(const TypeAContext& ctx);

/// Replaces R_i by the object whose CC is the exchange quotient; the quiver
/// is mutated at i. Throws NotDivisible, NotInTable, VertexOutOfRange.
CTObject ct_mutate(const CTObject& r, int i, const CCTable& table);

/// BFS closure of the initial object under ct_mutate, sorted by canonical form.
std::vector<CTObject> ct_enumerate(const TypeAContext& ctx, const CCTable& table);

/// Complement R_i^* computed from Ext vanishing in the cluster category,
/// without using CC values. Nullopt unless it is unique.
std::optional<IndecObject> ext_complement(const TypeAContext& ctx, const CTObject& r, int i);

/// CC(R_i) CC(R_i^*) == prod_{i->j} CC(R_j) + prod_{h->i} CC(R_h), with R_i^*
/// from ext_complement and every CC value read from `table`.
bool verify_exchange(const TypeAContext& ctx, const CTObject& r, int i, const CCTable& table,
                     std::string* diagnostics = nullptr);

struct ARMultiplicationCheck {
    Interval tau_x;
    std::vector<Interval> middle;
    Interval x;
    std::string identity;
};

/// CC(tau X) CC(X) == prod_{middle} CC + 1 for every non-projective X.
/// Throws IdentityFailed with the counterexample.
std::vector<ARMultiplicationCheck> verify_ar_multiplication(const TypeAContext& ctx);

}  // namespace clustercat
