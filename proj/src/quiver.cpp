#include "clustercat/quiver.hpp"

#include "clustercat/errors.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace clustercat {

Quiver::Quiver(int n, std::vector<Arrow> arrows) : n_(n), arrows_(std::move(arrows)) {
    if (n < 0) fail(ErrorCode::InvalidInput, "negative vertex count");
    for (std::size_t k = 0; k < arrows_.size(); ++k) {
        Arrow& a = arrows_[k];
        if (a.id.empty()) a.id = "a" + std::to_string(k + 1);
        if (!has_vertex(a.source) || !has_vertex(a.target)) {
            fail(ErrorCode::VertexOutOfRange, "arrow " + a.id + " has endpoint outside 1.." + std::to_string(n));
        }
    }
    for (std::size_t k = 0; k < arrows_.size(); ++k) {
        for (std::size_t l = k + 1; l < arrows_.size(); ++l) {
            if (arrows_[k].id == arrows_[l].id) fail(ErrorCode::InvalidInput, "duplicate arrow id " + arrows_[k].id);
        }
    }
}

std::size_t Quiver::arrow_index(const std::string& id) const {
    for (std::size_t k = 0; k < arrows_.size(); ++k) {
        if (arrows_[k].id == id) return k;
    }
    fail(ErrorCode::PathInvalid, "unknown arrow " + id);
}

int Quiver::arrow_count(int i, int j) const {
    return static_cast<int>(std::count_if(arrows_.begin(), arrows_.end(),
                                          [&](const Arrow& a) { return a.source == i && a.target == j; }));
}

std::vector<std::size_t> Quiver::arrows_from(int v) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < arrows_.size(); ++k) {
        if (arrows_[k].source == v) out.push_back(k);
    }
    return out;
}

std::vector<std::size_t> Quiver::arrows_to(int v) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < arrows_.size(); ++k) {
        if (arrows_[k].target == v) out.push_back(k);
    }
    return out;
}

bool Quiver::is_acyclic() const {
    std::vector<int> indegree(static_cast<std::size_t>(n_) + 1, 0);
    for (const auto& a : arrows_) ++indegree[a.target];
    std::queue<int> ready;
    for (int v = 1; v <= n_; ++v) {
        if (indegree[v] == 0) ready.push(v);
    }
    int seen = 0;
    while (!ready.empty()) {
        const int v = ready.front();
        ready.pop();
        ++seen;
        for (std::size_t k : arrows_from(v)) {
            if (--indegree[arrows_[k].target] == 0) ready.push(arrows_[k].target);
        }
    }
    return seen == n_;
}

Quiver Quiver::opposite() const {
    std::vector<Arrow> rev = arrows_;
    for (auto& a : rev) std::swap(a.source, a.target);
    return Quiver(n_, std::move(rev));
}

std::vector<std::pair<int, int>> Quiver::arrow_multiset() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(arrows_.size());
    for (const auto& a : arrows_) out.emplace_back(a.source, a.target);
    std::sort(out.begin(), out.end());
    return out;
}

std::string Quiver::path_string(const Path& p) const {
    if (p.is_lazy()) return "e" + std::to_string(p.source);
    std::string out;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) out += arrows_[*it].id;
    return out;
}

bool ExchangeMatrix::is_skew_symmetric() const {
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            if ((*this)(i, j) != -(*this)(j, i)) return false;
        }
    }
    return true;
}

void validate_mutable(const Quiver& q) {
    for (const auto& a : q.arrows()) {
        if (a.source == a.target) fail(ErrorCode::HasLoop, "loop at vertex " + std::to_string(a.source));
    }
    for (int i = 1; i <= q.vertex_count(); ++i) {
        for (int j = i + 1; j <= q.vertex_count(); ++j) {
            if (q.arrow_count(i, j) > 0 && q.arrow_count(j, i) > 0) {
                fail(ErrorCode::HasTwoCycle, "2-cycle between " + std::to_string(i) + " and " + std::to_string(j));
            }
        }
    }
}

ExchangeMatrix b_matrix(const Quiver& q) {
    validate_mutable(q);
    ExchangeMatrix b(q.vertex_count());
    for (const auto& a : q.arrows()) {
        b(a.source, a.target) += 1;
        b(a.target, a.source) -= 1;
    }
    return b;
}

Quiver mutate_quiver(const Quiver& q, int i) {
    if (!q.has_vertex(i)) fail(ErrorCode::VertexOutOfRange, "mutation at " + std::to_string(i));
    validate_mutable(q);

    std::vector<std::pair<int, int>> kept;
    std::vector<int> into;   // sources h of arrows h -> i
    std::vector<int> outof;  // targets j of arrows i -> j
    for (const auto& a : q.arrows()) {
        if (a.target == i) {
            into.push_back(a.source);
            kept.emplace_back(i, a.source);
        } else if (a.source == i) {
            outof.push_back(a.target);
            kept.emplace_back(a.target, i);
        } else {
            kept.emplace_back(a.source, a.target);
        }
    }
    for (int h : into) {
        for (int j : outof) kept.emplace_back(h, j);
    }

    // Cancel 2-cycles pairwise; the surviving multiset does not depend on
    // which pairs are matched.
    std::map<std::pair<int, int>, int> count;
    for (const auto& e : kept) ++count[e];
    for (auto& [edge, c] : count) {
        const auto [s, t] = edge;
        if (s >= t) continue;
        auto back = count.find({t, s});
        if (back == count.end()) continue;
        const int cancel = std::min(c, back->second);
        c -= cancel;
        back->second -= cancel;
    }
    std::vector<Arrow> arrows;
    for (const auto& [edge, c] : count) {
        for (int k = 0; k < c; ++k) arrows.push_back({"", edge.first, edge.second});
    }
    return Quiver(q.vertex_count(), std::move(arrows));
}

namespace {

void extend_paths(const Quiver& q, Path current, std::vector<Path>& out) {
    for (std::size_t k : q.arrows_from(current.target)) {
        Path next = current;
        next.arrows.push_back(k);
        next.target = q.arrows()[k].target;
        out.push_back(next);
        extend_paths(q, next, out);
    }
}

}  // namespace

std::vector<Path> enumerate_paths(const Quiver& q) {
    if (!q.is_acyclic()) fail(ErrorCode::NotAcyclic, "path algebra is infinite-dimensional");
    std::vector<Path> out;
    for (int v = 1; v <= q.vertex_count(); ++v) {
        Path lazy{v, v, {}};
        out.push_back(lazy);
        extend_paths(q, lazy, out);
    }
    std::stable_sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        if (a.is_lazy()) return a.source < b.source;
        return std::lexicographical_compare(a.arrows.rbegin(), a.arrows.rend(), b.arrows.rbegin(), b.arrows.rend());
    });
    return out;
}

bool is_type_a(const Quiver& q) {
    const int n = q.vertex_count();
    if (n < 1 || static_cast<int>(q.arrows().size()) != n - 1) return false;
    for (int k = 1; k < n; ++k) {
        if (q.arrow_count(k, k + 1) + q.arrow_count(k + 1, k) != 1) return false;
    }
    return true;
}

std::vector<Path> paths_between(const Quiver& q, int from, int to) {
    std::vector<Path> out;
    for (auto& p : enumerate_paths(q)) {
        if (p.source == from && p.target == to) out.push_back(std::move(p));
    }
    return out;
}

}  // namespace clustercat
