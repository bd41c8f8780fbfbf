#pragma once

#include "clustercat/exactalg.hpp"
#include "clustercat/linalg.hpp"
#include "clustercat/quiver.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace clustercat {

/// Dimension vector, indexed 0..n-1 for vertices 1..n.
using DimVec = std::vector<int>;

/// Integer combination of paths sharing source and target. Each path lists
/// arrow ids in written order: {"b", "a"} is the path ba (a traversed first).
struct Relation {
    std::vector<std::vector<std::string>> paths;
    std::vector<std::int64_t> coeffs;
};

/// Representation with integer matrices. The matrix of arrow a : s -> t has
/// shape dims[t] x dims[s] and acts on column vectors.
///
/// Modules over a path algebra kQ are right modules, i.e. representations of
/// Q^op: every module constructor below takes the algebra's quiver Q and
/// returns a representation of Q.opposite().
class Representation {
public:
    Representation() = default;
    /// Missing matrices are filled with zeros only when their shape has a zero
    /// dimension; any other missing or mis-shaped matrix throws ShapeMismatch.
    Representation(Quiver quiver, DimVec dims, std::map<std::string, IntMatrix> matrices,
                   std::vector<Relation> relations = {});

    static Representation zero(const Quiver& quiver);

    const Quiver& quiver() const { return quiver_; }
    const DimVec& dims() const { return dims_; }
    int dim(int vertex) const { return dims_[static_cast<std::size_t>(vertex - 1)]; }
    int total_dimension() const;
    const IntMatrix& matrix(const std::string& arrow_id) const;
    const std::map<std::string, IntMatrix>& matrices() const { return matrices_; }
    const std::vector<Relation>& relations() const { return relations_; }

    /// Composite V_w for a path given as written arrow ids (leftmost last).
    Matrix<BigInt> path_matrix(const std::vector<std::string>& written_path) const;

    friend bool operator==(const Representation& a, const Representation& b) {
        return a.quiver_ == b.quiver_ && a.dims_ == b.dims_ && a.matrices_ == b.matrices_;
    }

private:
    Quiver quiver_;
    DimVec dims_;
    std::map<std::string, IntMatrix> matrices_;
    std::vector<Relation> relations_;
};

/// Representation over the prime field F_p; entries in [0, p).
struct RepresentationFp {
    Quiver quiver;
    DimVec dims;
    std::uint32_t p = 2;
    std::vector<Matrix<std::uint32_t>> matrices;  // indexed like quiver.arrows()
};

bool is_prime(std::int64_t p);

RepresentationFp specialize_mod_p(const Representation& v, std::int64_t p);

Representation direct_sum(const Representation& v, const Representation& w);

bool check_relations(const Representation& v, const std::vector<Relation>& rels);

enum class ModuleKind { Simple, Projective, Injective };

/// Simple, indecomposable projective or indecomposable injective right
/// kQ-module at vertex j, with the canonical path-basis maps.
Representation standard_module(const Quiver& q, ModuleKind kind, int j);

/// Interval module [a, b] for a quiver whose underlying graph is 1 - ... - n;
/// identity maps inside the interval.
Representation interval_module(const Quiver& q, int a, int b);

/// Largest semisimple subrepresentation, as a dimension vector.
DimVec socle(const Representation& v);

struct InjectiveCopresentation {
    DimVec injective_hull;  // b: multiplicities of I_j in J0
    DimVec cokernel;        // a: multiplicities of I_j in J1
};

/// Minimal injective copresentation 0 -> V -> J0 -> J1 over the
/// representation's own (acyclic, relation-free) quiver.
InjectiveCopresentation injective_copresentation(const Representation& v);

/// Dimension vectors of the indecomposable injectives of rep(quiver):
/// (I_j)_i = number of paths i -> j.
std::vector<DimVec> injective_dims(const Quiver& quiver);

int dim_hom(const Representation& v, const Representation& w);

}  // namespace clustercat
