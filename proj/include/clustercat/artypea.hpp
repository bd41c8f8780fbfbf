#pragma once

#include "clustercat/linalg.hpp"
#include "clustercat/quiver.hpp"
#include "clustercat/rep.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace clustercat {

/// Support [a, b] of an indecomposable module over a type A path algebra.
struct Interval {
    int a = 1;
    int b = 1;

    DimVec dims(int n) const;
    std::string to_string() const { return "[" + std::to_string(a) + "," + std::to_string(b) + "]"; }

    friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// The interval whose indicator vector is `dims`, if there is one.
std::optional<Interval> interval_of(const DimVec& dims);

/// Indecomposable object of the cluster category of type A_n: an interval
/// module, or the shifted projective T_i = P_i[1].
class IndecObject {
public:
    static IndecObject module(Interval m) { return IndecObject(m, 0); }
    static IndecObject shifted_projective(int i) { return IndecObject({}, i); }
    /// "[a,b]" or "T<i>".
    static IndecObject parse(std::string_view text);

    bool is_module() const { return vertex_ == 0; }
    bool is_shifted_projective() const { return vertex_ != 0; }
    const Interval& interval() const { return interval_; }
    int vertex() const { return vertex_; }
    std::string id() const;

    friend auto operator<=>(const IndecObject&, const IndecObject&) = default;

private:
    IndecObject(Interval m, int vertex) : interval_(m), vertex_(vertex) {}

    Interval interval_;
    int vertex_;  // 0 for modules
};

/// Auslander-Reiten quiver of mod kQ for Q of type A_n, built by knitting
/// from the projectives.
class ARQuiver {
public:
    const Quiver& quiver() const { return quiver_; }
    int rank() const { return quiver_.vertex_count(); }

    /// Vertices in knitting order.
    const std::vector<Interval>& vertices() const { return vertices_; }
    /// Irreducible maps as (from, to) vertex indices.
    const std::vector<std::pair<std::size_t, std::size_t>>& arrows() const { return arrows_; }
    std::size_t index_of(const Interval& m) const;

    bool is_projective(const Interval& m) const;
    bool is_injective(const Interval& m) const;
    /// P_i and I_i as intervals.
    Interval projective(int i) const { return projectives_[static_cast<std::size_t>(i - 1)]; }
    Interval injective(int i) const { return injectives_[static_cast<std::size_t>(i - 1)]; }

    std::optional<Interval> tau_of(const Interval& m) const;
    std::vector<Interval> predecessors(const Interval& m) const;
    std::vector<Interval> successors(const Interval& m) const;

    /// Loewy layers top to bottom, e.g. "3/2/1" for [1,3] on 1->2->3->4.
    std::string composition_series(const Interval& m) const;

private:
    friend ARQuiver knit(const Quiver& q);

    Quiver quiver_;
    std::vector<Interval> vertices_;
    std::vector<std::pair<std::size_t, std::size_t>> arrows_;
    std::vector<std::optional<std::size_t>> tau_;
    std::vector<Interval> projectives_;
    std::vector<Interval> injectives_;
};

/// Throws NotTypeA.
ARQuiver knit(const Quiver& q);

/// Throws IsProjective.
Interval tau(const ARQuiver& m, const Interval& x);

struct ARSequence {
    Interval tau_x;
    std::vector<Interval> middle;
    Interval x;
};

ARSequence ar_sequence(const ARQuiver& m, const Interval& x);

/// Phi with Phi * dim X = dim tau X for non-projective X and
/// Phi * dim P_j = -dim I_j; computed as -C^T C^{-1} with C_ij = #paths i -> j.
Matrix<std::int64_t> coxeter_matrix(const Quiver& q);

/// All intervals [a,b] in lexicographic order, then T_1..T_n.
std::vector<IndecObject> cluster_indecomposables(const Quiver& q);

/// Suspension on objects of the cluster category (Sigma = tau there).
IndecObject sigma(const ARQuiver& m, const IndecObject& x);

/// The module underlying an interval object, as a representation of Q^op.
Representation module_of(const ARQuiver& m, const Interval& x);

}  // namespace clustercat
