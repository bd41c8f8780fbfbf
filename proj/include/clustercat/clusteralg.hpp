#pragma once

#include "clustercat/errors.hpp"
#include "clustercat/exactalg.hpp"
#include "clustercat/quiver.hpp"

#include <string>
#include <vector>

namespace clustercat {

struct Seed {
    Quiver quiver;
    std::vector<LaurentPoly> cluster;

    /// Sorted cluster strings plus the arrow multiset with endpoints replaced
    /// by those strings; invariant under relabeling the vertices.
    std::string canonical() const;
};

/// (Q, (x_1, ..., x_n)). Throws HasLoop / HasTwoCycle.
Seed initial_seed(const Quiver& q);

/// Exchange relation at i with exact division; the quiver is mutated at i.
/// Throws VertexOutOfRange, or NotDivisible with the whole seed in the message.
Seed mutate_seed(const Seed& s, int i);

struct SeedEnumeration {
    std::vector<Seed> seeds;            // sorted by canonical form
    std::vector<LaurentPoly> variables;  // sorted by canonical string
    int depth = 0;                       // deepest BFS level reached
};

class DepthExceededError : public Error {
public:
    DepthExceededError(const std::string& what, SeedEnumeration partial)
        : Error(ErrorCode::DepthExceeded, what), partial_(std::move(partial)) {}
    const SeedEnumeration& partial() const { return partial_; }

private:
    SeedEnumeration partial_;
};

/// BFS over seeds from the initial seed. Seeds up to `max_depth` mutations
/// away are explored; if one of them still has an unseen neighbour the
/// search throws DepthExceededError carrying everything collected so far.
/// `vertex_order` fixes the order in which vertices are tried (default 1..n).
SeedEnumeration enumerate_seeds(const Quiver& q, int max_depth = 12, std::vector<int> vertex_order = {});

}  // namespace clustercat
