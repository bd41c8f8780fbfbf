#include "clustercat/clusteralg.hpp"

#include <doctest.h>

#include <set>

using namespace clustercat;

namespace {

Quiver linear(int n) {
    std::vector<Arrow> arrows;
    for (int i = 1; i < n; ++i) arrows.push_back({"", i, i + 1});
    return Quiver(n, arrows);
}

LaurentPoly P(const char* s, std::size_t n) { return LaurentPoly::parse(s, n); }

std::set<std::string> keys(const std::vector<Seed>& seeds) {
    std::set<std::string> out;
    for (const auto& s : seeds) out.insert(s.canonical());
    return out;
}

}  // namespace

TEST_CASE("seed mutation by hand") {
    const Seed s0 = initial_seed(linear(2));
    const Seed s1 = mutate_seed(s0, 1);
    CHECK(s1.cluster[0] == P("x1^-1 + x1^-1*x2", 2));
    CHECK(s1.cluster[1] == P("x2", 2));
    CHECK(mutate_seed(s1, 1).canonical() == s0.canonical());
    const Seed s12 = mutate_seed(s1, 2);
    CHECK(s12.cluster[0] == P("x1^-1 + x1^-1*x2", 2));
    CHECK(s12.cluster[1] == lp_exact_div(P("1 + x1 + x2", 2), P("x1*x2", 2)));
    CHECK_THROWS_AS(mutate_seed(s0, 3), Error);
    CHECK_THROWS_AS(initial_seed(Quiver(1, {{"l", 1, 1}})), Error);
}

TEST_CASE("finite type enumeration") {
    const std::size_t seeds[] = {0, 2, 5, 14, 42, 132};
    for (int n = 1; n <= 5; ++n) {
        const auto e = enumerate_seeds(linear(n));
        CHECK(e.seeds.size() == seeds[n]);
        CHECK(e.variables.size() == static_cast<std::size_t>(n * (n + 3) / 2));
    }
    // Another orientation of A4 gives the same counts.
    const auto alt = enumerate_seeds(Quiver(4, {{"", 2, 1}, {"", 2, 3}, {"", 4, 3}}));
    CHECK(alt.seeds.size() == 42);
    CHECK(alt.variables.size() == 14);
}

TEST_CASE("BFS result does not depend on vertex order") {
    const auto forward = enumerate_seeds(linear(4), 12, {1, 2, 3, 4});
    const auto backward = enumerate_seeds(linear(4), 12, {4, 3, 2, 1});
    CHECK(keys(forward.seeds) == keys(backward.seeds));
    CHECK(forward.variables == backward.variables);
    CHECK_THROWS_AS(enumerate_seeds(linear(3), 12, {1, 1, 2}), Error);
}

TEST_CASE("canonical form ignores vertex labels") {
    const Seed a = initial_seed(Quiver(2, {{"", 1, 2}}));
    Seed b{Quiver(2, {{"", 2, 1}}), {P("x2", 2), P("x1", 2)}};
    CHECK(a.canonical() == b.canonical());
    Seed c{Quiver(2, {{"", 2, 1}}), {P("x1", 2), P("x2", 2)}};
    CHECK_FALSE(a.canonical() == c.canonical());
}

TEST_CASE("Kronecker exceeds any depth bound") {
    const Quiver kron(2, {{"", 1, 2}, {"", 1, 2}});
    try {
        enumerate_seeds(kron, 8);
        FAIL("expected DepthExceeded");
    } catch (const DepthExceededError& e) {
        CHECK(e.code() == ErrorCode::DepthExceeded);
        CHECK(e.partial().variables.size() >= 9);
        CHECK(e.partial().depth == 8);
        std::set<std::string> distinct;
        for (const auto& u : e.partial().variables) distinct.insert(u.to_string());
        CHECK(distinct.size() == e.partial().variables.size());
    }
}
