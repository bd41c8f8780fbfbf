#include "clustercat/clusteralg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace clustercat {

std::string Seed::canonical() const {
    std::vector<std::string> names;
    for (const auto& u : cluster) names.push_back(u.to_string());
    std::vector<std::pair<std::string, std::string>> arrows;
    for (const auto& a : quiver.arrows()) arrows.emplace_back(names[a.source - 1], names[a.target - 1]);
    std::sort(names.begin(), names.end());
    std::sort(arrows.begin(), arrows.end());
    std::string out = "{";
    for (std::size_t k = 0; k < names.size(); ++k) out += (k ? "; " : "") + names[k];
    out += "} ";
    for (const auto& [s, t] : arrows) out += "(" + s + " -> " + t + ")";
    return out;
}

Seed initial_seed(const Quiver& q) {
    validate_mutable(q);
    const auto n = static_cast<std::size_t>(q.vertex_count());
    Seed s{q, {}};
    for (std::size_t i = 1; i <= n; ++i) s.cluster.push_back(LaurentPoly::variable(n, i));
    return s;
}

Seed mutate_seed(const Seed& s, int i) {
    const int n = s.quiver.vertex_count();
    if (i < 1 || i > n) fail(ErrorCode::VertexOutOfRange, "mutation at " + std::to_string(i));
    const std::size_t nvars = s.cluster.empty() ? 0 : s.cluster[0].nvars();
    LaurentPoly out = LaurentPoly::constant(nvars, 1);
    LaurentPoly in = LaurentPoly::constant(nvars, 1);
    for (const auto& a : s.quiver.arrows()) {
        if (a.source == i) out = out * s.cluster[a.target - 1];
        if (a.target == i) in = in * s.cluster[a.source - 1];
    }
    Seed next{mutate_quiver(s.quiver, i), s.cluster};
    try {
        next.cluster[i - 1] = lp_exact_div(out + in, s.cluster[i - 1]);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotDivisible) throw;
        fail(ErrorCode::NotDivisible, "exchange at " + std::to_string(i) + " in seed " + s.canonical());
    }
    return next;
}

SeedEnumeration enumerate_seeds(const Quiver& q, int max_depth, std::vector<int> vertex_order) {
    const int n = q.vertex_count();
    if (vertex_order.empty()) {
        for (int i = 1; i <= n; ++i) vertex_order.push_back(i);
    }
    std::vector<int> check = vertex_order;
    std::sort(check.begin(), check.end());
    for (int i = 1; i <= n; ++i) {
        if (check.size() != static_cast<std::size_t>(n) || check[i - 1] != i) {
            fail(ErrorCode::InvalidInput, "vertex order must be a permutation of 1.." + std::to_string(n));
        }
    }

    std::map<std::string, Seed> seen;
    std::map<std::string, LaurentPoly> variables;
    const Seed start = initial_seed(q);
    auto record = [&](const Seed& s) {
        for (const auto& u : s.cluster) variables.emplace(u.to_string(), u);
        return seen.emplace(s.canonical(), s).second;
    };
    record(start);

    auto collect = [&](int depth) {
        SeedEnumeration out;
        out.depth = depth;
        for (const auto& [key, s] : seen) out.seeds.push_back(s);
        for (const auto& [key, u] : variables) out.variables.push_back(u);
        return out;
    };

    std::vector<Seed> frontier{start};
    int depth = 0;
    while (!frontier.empty()) {
        std::vector<Seed> next;
        for (const auto& s : frontier) {
            for (int i : vertex_order) {
                Seed m = mutate_seed(s, i);
                if (seen.count(m.canonical())) continue;
                if (depth == max_depth) {
                    throw DepthExceededError("seeds beyond depth " + std::to_string(max_depth) + " remain", collect(depth));
                }
                record(m);
                next.push_back(std::move(m));
            }
        }
        if (next.empty()) break;
        frontier = std::move(next);
        ++depth;
    }
    return collect(depth);
}

}  // namespace clustercat
