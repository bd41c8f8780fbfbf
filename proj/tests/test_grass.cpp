#include "clustercat/errors.hpp"
#include "clustercat/grass.hpp"

#include <doctest.h>

#include <set>

using namespace clustercat;

namespace {

IntMatrix mat(std::size_t r, std::size_t c, std::vector<std::int64_t> v) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) m(i, j) = v[i * c + j];
    }
    return m;
}

Representation kronecker_v() {
    const Quiver q(2, {{"a", 1, 2}, {"b", 1, 2}});
    return Representation(q, {2, 2}, {{"a", mat(2, 2, {1, 0, 0, 1})}, {"b", mat(2, 2, {1, 1, 0, 1})}});
}

// Brute-force oracle: vectors of F_q^d as base-q integers, subspaces as the
// sorted set of all their elements.
using Vec = std::vector<int>;
using Subspace = std::set<Vec>;

std::vector<Vec> all_vectors(int d, int q) {
    std::vector<Vec> out;
    Vec v(static_cast<std::size_t>(d), 0);
    while (true) {
        out.push_back(v);
        int i = 0;
        while (i < d && ++v[i] == q) v[i++] = 0;
        if (i == d) return out;
    }
}

std::set<Subspace> oracle_subspaces(int d, int e, int q) {
    const auto vecs = all_vectors(d, q);
    std::set<Subspace> found;
    std::vector<std::size_t> pick(static_cast<std::size_t>(e), 0);
    std::size_t target = 1;
    for (int i = 0; i < e; ++i) target *= static_cast<std::size_t>(q);
    while (true) {
        Subspace span;
        for (const auto& coeffs : all_vectors(e, q)) {
            Vec v(static_cast<std::size_t>(d), 0);
            for (int k = 0; k < e; ++k) {
                for (int i = 0; i < d; ++i) v[i] = (v[i] + coeffs[k] * vecs[pick[k]][i]) % q;
            }
            span.insert(v);
        }
        if (span.size() == target) found.insert(span);
        int k = 0;
        while (k < e && ++pick[k] == vecs.size()) pick[k++] = 0;
        if (k == e) return found;
    }
}

Vec apply(const IntMatrix& m, const Vec& v, int q) {
    Vec out(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        long long acc = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
        out[i] = static_cast<int>(((acc % q) + q) % q);
    }
    return out;
}

long long oracle_subreps(const Representation& v, const DimVec& e, int q) {
    const int n = v.quiver().vertex_count();
    std::vector<std::vector<Subspace>> choices;
    for (int i = 1; i <= n; ++i) {
        const auto s = oracle_subspaces(v.dim(i), e[i - 1], q);
        choices.emplace_back(s.begin(), s.end());
    }
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    long long count = 0;
    while (true) {
        bool ok = true;
        for (const auto& a : v.quiver().arrows()) {
            for (const auto& w : choices[a.source - 1][idx[a.source - 1]]) {
                if (!choices[a.target - 1][idx[a.target - 1]].count(apply(v.matrix(a.id), w, q))) ok = false;
            }
        }
        if (ok) ++count;
        int k = 0;
        while (k < n && ++idx[k] == choices[k].size()) idx[k++] = 0;
        if (k == n) return count;
    }
}

}  // namespace

TEST_CASE("subspace counts") {
    CHECK(count_subspaces(2, 1, 3) == 4);
    CHECK(count_subspaces(4, 2, 2) == 35);
    CHECK(count_subspaces(3, 0, 5) == 1);
    CHECK_THROWS_AS(count_subspaces(2, 3, 2), Error);
    for (int q : {2, 3, 5}) {
        for (int d = 0; d <= 4; ++d) {
            for (int e = 0; e <= d; ++e) CHECK(count_subspaces(d, e, q) == gaussian_binomial(d, e, q));
        }
    }
}

TEST_CASE("enumerated subspaces are distinct and match brute force") {
    for (int q : {2, 3}) {
        for (int d = 0; d <= 3; ++d) {
            for (int e = 0; e <= d; ++e) {
                std::set<Subspace> seen;
                for (SubspaceIter it(d, e, static_cast<std::uint32_t>(q)); !it.done(); it.advance()) {
                    Subspace span;
                    for (const auto& c : all_vectors(e, q)) {
                        Vec v(static_cast<std::size_t>(d), 0);
                        for (int k = 0; k < e; ++k) {
                            for (int i = 0; i < d; ++i) v[i] = static_cast<int>((v[i] + c[k] * it.basis()(k, i)) % q);
                        }
                        span.insert(v);
                    }
                    CHECK(seen.insert(span).second);
                }
                CHECK(seen == oracle_subspaces(d, e, q));
            }
        }
    }
}

TEST_CASE("Kronecker subrepresentation counts") {
    const auto v = kronecker_v();
    for (int q : {2, 3, 5}) {
        CHECK(count_subreps(v, {1, 1}, q) == 1);
        CHECK(count_subreps(v, {0, 1}, q) == q + 1);
        CHECK(count_subreps(v, {2, 2}, q) == 1);
        CHECK(count_subreps(v, {1, 0}, q) == 0);
    }
    CHECK_THROWS_AS(count_subreps(v, {3, 0}, 2), Error);
    CHECK_THROWS_AS(count_subreps(v, {1}, 2), Error);
}

TEST_CASE("count_subreps agrees with a direct double loop") {
    std::vector<Representation> reps{kronecker_v()};
    reps.push_back(Representation(Quiver(1, {{"l", 1, 1}}), {2}, {{"l", mat(2, 2, {0, 0, 1, 0})}}));
    reps.push_back(Representation(Quiver(2, {{"a", 1, 2}, {"b", 2, 1}}), {2, 1},
                                  {{"a", mat(1, 2, {1, 0})}, {"b", mat(2, 1, {0, 1})}}));
    reps.push_back(Representation(Quiver(3, {{"a", 1, 2}}), {2, 1, 2}, {{"a", mat(1, 2, {1, 2})}}));
    reps.push_back(Representation(Quiver(2, {{"a", 1, 2}, {"b", 2, 1}}), {2, 2},
                                  {{"a", mat(2, 2, {1, 1, 0, 2})}, {"b", mat(2, 2, {0, 1, 1, 0})}}));
    for (const auto& v : reps) {
        for (int q : {2, 3}) {
            BigInt total = 0;
            long long oracle_total = 0;
            DimVec e(v.dims().size(), 0);
            while (true) {
                const BigInt c = count_subreps(v, e, q);
                const long long o = oracle_subreps(v, e, q);
                CHECK(c == o);
                total += c;
                oracle_total += o;
                std::size_t i = 0;
                while (i < e.size() && ++e[i] > v.dims()[i]) e[i++] = 0;
                if (i == e.size()) break;
            }
            CHECK(total == oracle_total);
        }
    }
}

TEST_CASE("Euler characteristics") {
    const auto v = kronecker_v();
    CHECK(euler_char(v, {0, 1}) == 2);
    CHECK(euler_char(v, {1, 0}) == 0);
    CHECK(euler_char(Representation(Quiver(1, {}), {4}, {}), {2}) == 6);
    CHECK(counting_polynomial(v, {0, 1}) == UniPolyQ({1, 1}));
    CHECK(grassmannian_degree_bound(v, {1, 1}) == 2);
    CHECK(first_primes(5) == std::vector<std::int64_t>{2, 3, 5, 7, 11});
}

TEST_CASE("Grassmannian tables") {
    const std::map<DimVec, BigInt> kron{{{0, 0}, 1}, {{0, 1}, 2}, {{0, 2}, 1}, {{1, 0}, 0}, {{1, 1}, 1},
                                        {{1, 2}, 2}, {{2, 0}, 0}, {{2, 1}, 0}, {{2, 2}, 1}};
    CHECK(grass_table(kronecker_v()) == kron);

    const Representation loop2(Quiver(1, {{"l", 1, 1}}), {2}, {{"l", mat(2, 2, {0, 0, 1, 0})}});
    CHECK(grass_table(loop2) == std::map<DimVec, BigInt>{{{0}, 1}, {{1}, 1}, {{2}, 1}});

    const Quiver a4(4, {{"", 1, 2}, {"", 2, 3}, {"", 3, 4}});
    const auto t = grass_table(interval_module(a4, 1, 3));
    CHECK(t.size() == 8);
    for (const auto& [e, chi] : t) {
        const bool nonzero = e == DimVec{0, 0, 0, 0} || e == DimVec{1, 0, 0, 0} || e == DimVec{1, 1, 0, 0} ||
                             e == DimVec{1, 1, 1, 0};
        CHECK(chi == (nonzero ? 1 : 0));
    }
}

TEST_CASE("table endpoints are points for assorted modules") {
    const Quiver a4(4, {{"", 1, 2}, {"", 3, 2}, {"", 3, 4}});
    for (int a = 1; a <= 4; ++a) {
        for (int b = a; b <= 4; ++b) {
            const auto m = interval_module(a4, a, b);
            const auto t = grass_table(m);
            CHECK(t.at(DimVec(4, 0)) == 1);
            CHECK(t.at(m.dims()) == 1);
            for (const auto& [e, chi] : t) CHECK((chi == 0 || chi == 1));
        }
    }
}
