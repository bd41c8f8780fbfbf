#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace clustercat {

struct Arrow {
    std::string id;
    int source = 0;
    int target = 0;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A path a_m ... a_1 a_0 stored in traversal order (a_0 first); an empty
/// arrow list is the lazy path at `source`.
struct Path {
    int source = 0;
    int target = 0;
    std::vector<std::size_t> arrows;  // indices into Quiver::arrows()

    std::size_t length() const { return arrows.size(); }
    bool is_lazy() const { return arrows.empty(); }

    friend bool operator==(const Path&, const Path&) = default;
};

/// Finite quiver on vertices 1..n. Loops and multiple arrows are allowed.
class Quiver {
public:
    Quiver() = default;
    /// Arrows with an empty id get "a<k>" (k = 1-based position in the list).
    Quiver(int n, std::vector<Arrow> arrows);

    int vertex_count() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::size_t arrow_index(const std::string& id) const;
    const Arrow& arrow(const std::string& id) const { return arrows_[arrow_index(id)]; }

    /// Number of arrows i -> j.
    int arrow_count(int i, int j) const;
    std::vector<std::size_t> arrows_from(int v) const;
    std::vector<std::size_t> arrows_to(int v) const;

    bool has_vertex(int v) const { return v >= 1 && v <= n_; }
    bool is_acyclic() const;
    /// Same vertices and arrow ids, every arrow reversed.
    Quiver opposite() const;

    /// Multiset of (source, target) pairs, sorted.
    std::vector<std::pair<int, int>> arrow_multiset() const;

    std::string path_string(const Path& p) const;

    friend bool operator==(const Quiver&, const Quiver&) = default;

private:
    int n_ = 0;
    std::vector<Arrow> arrows_;
};

/// Skew-symmetric integer matrix, 1-based accessors.
class ExchangeMatrix {
public:
    explicit ExchangeMatrix(int n = 0) : n_(n), entries_(static_cast<std::size_t>(n) * n, 0) {}

    int size() const { return n_; }
    int operator()(int i, int j) const { return entries_[index(i, j)]; }
    int& operator()(int i, int j) { return entries_[index(i, j)]; }
    bool is_skew_symmetric() const;

    friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i - 1) * n_ + (j - 1); }

    int n_;
    std::vector<int> entries_;
};

/// Throws HasLoop / HasTwoCycle.
void validate_mutable(const Quiver& q);

/// b_ij = #(i -> j) - #(j -> i).
ExchangeMatrix b_matrix(const Quiver& q);

/// Fomin-Zelevinsky mutation at vertex i. Arrow ids of the result are
/// reassigned "a1".."ak" in (source, target) order.
Quiver mutate_quiver(const Quiver& q, int i);

/// All paths including the lazy ones, ordered by length, then by arrow
/// indices. Throws NotAcyclic.
std::vector<Path> enumerate_paths(const Quiver& q);

/// True iff the underlying graph is the path 1 - 2 - ... - n (one arrow per
/// consecutive pair, any orientation).
bool is_type_a(const Quiver& q);

/// Paths from `from` to `to` in an acyclic quiver.
std::vector<Path> paths_between(const Quiver& q, int from, int to);

}  // namespace clustercat
