#include "clustercat/errors.hpp"
#include "clustercat/quiver.hpp"

#include <doctest.h>

#include <functional>

#include <random>

using namespace clustercat;

namespace {

Quiver linear(int n) {
    std::vector<Arrow> arrows;
    for (int i = 1; i < n; ++i) arrows.push_back({"", i, i + 1});
    return Quiver(n, arrows);
}

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidInput;
}

// Textbook matrix mutation, written out independently of mutate_quiver.
ExchangeMatrix matrix_mutation(const ExchangeMatrix& b, int k) {
    const int n = b.size();
    ExchangeMatrix out(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == k || j == k) {
                out(i, j) = -b(i, j);
            } else {
                out(i, j) = b(i, j) + std::max(0, b(i, k)) * b(k, j) + b(i, k) * std::max(0, -b(k, j));
            }
        }
    }
    return out;
}

Quiver quiver_from_b(const ExchangeMatrix& b) {
    std::vector<Arrow> arrows;
    for (int i = 1; i <= b.size(); ++i) {
        for (int j = 1; j <= b.size(); ++j) {
            for (int k = 0; k < b(i, j); ++k) arrows.push_back({"", i, j});
        }
    }
    return Quiver(b.size(), arrows);
}

}  // namespace

TEST_CASE("construction and ids") {
    const Quiver q(2, {{"", 1, 2}, {"b", 1, 2}});
    CHECK(q.arrows()[0].id == "a1");
    CHECK(q.arrow("b").target == 2);
    CHECK(q.arrow_count(1, 2) == 2);
    CHECK(code_of([] { Quiver(2, {{"", 1, 3}}); }) == ErrorCode::VertexOutOfRange);
    CHECK(code_of([] { Quiver(2, {{"x", 1, 2}, {"x", 2, 1}}); }) == ErrorCode::InvalidInput);
    CHECK(code_of([&] { (void)q.arrow("zz"); }) == ErrorCode::PathInvalid);
}

TEST_CASE("validate_mutable") {
    validate_mutable(linear(4));
    CHECK(code_of([] { validate_mutable(Quiver(1, {{"l", 1, 1}})); }) == ErrorCode::HasLoop);
    CHECK(code_of([] { validate_mutable(Quiver(2, {{"", 1, 2}, {"", 2, 1}})); }) == ErrorCode::HasTwoCycle);
}

TEST_CASE("exchange matrix") {
    const auto b = b_matrix(linear(4));
    CHECK(b(1, 2) == 1);
    CHECK(b(2, 3) == 1);
    CHECK(b(3, 4) == 1);
    CHECK(b(2, 1) == -1);
    CHECK(b(1, 3) == 0);
    CHECK(b.is_skew_symmetric());
    CHECK(b_matrix(Quiver(2, {{"", 1, 2}, {"", 1, 2}}))(1, 2) == 2);
    CHECK(b_matrix(Quiver(3, {})) == ExchangeMatrix(3));
}

TEST_CASE("mutation examples") {
    const Quiver kron(2, {{"", 1, 2}, {"", 1, 2}});
    CHECK(mutate_quiver(kron, 1).arrow_multiset() == std::vector<std::pair<int, int>>{{2, 1}, {2, 1}});
    const auto m = mutate_quiver(linear(3), 2);
    CHECK(m.arrow_multiset() == std::vector<std::pair<int, int>>{{1, 3}, {2, 1}, {3, 2}});
    validate_mutable(m);
    CHECK(code_of([] { mutate_quiver(linear(3), 4); }) == ErrorCode::VertexOutOfRange);
}

TEST_CASE("mutation matches the matrix formula and is an involution") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-2, 2);
    int checked = 0;
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 40; ++trial) {
            ExchangeMatrix b(n);
            for (int i = 1; i <= n; ++i) {
                for (int j = i + 1; j <= n; ++j) {
                    b(i, j) = entry(rng);
                    b(j, i) = -b(i, j);
                }
            }
            const Quiver q = quiver_from_b(b);
            for (int k = 1; k <= n; ++k) {
                const Quiver mq = mutate_quiver(q, k);
                validate_mutable(mq);
                CHECK(b_matrix(mq) == matrix_mutation(b, k));
                CHECK(mutate_quiver(mq, k).arrow_multiset() == q.arrow_multiset());
                ++checked;
            }
        }
    }
    CHECK(checked == 40 * 15);
}

TEST_CASE("path enumeration") {
    const Quiver a3 = linear(3);
    const auto paths = enumerate_paths(a3);
    REQUIRE(paths.size() == 6);
    std::vector<std::string> names;
    for (const auto& p : paths) names.push_back(a3.path_string(p));
    CHECK(names == std::vector<std::string>{"e1", "e2", "e3", "a1", "a2", "a2a1"});
    CHECK(enumerate_paths(Quiver(1, {})).size() == 1);
    CHECK(code_of([] { enumerate_paths(Quiver(1, {{"l", 1, 1}})); }) == ErrorCode::NotAcyclic);
    for (int n = 1; n <= 6; ++n) CHECK(enumerate_paths(linear(n)).size() == static_cast<std::size_t>(n * (n + 1) / 2));
    CHECK(paths_between(a3, 1, 3).size() == 1);
    CHECK(paths_between(Quiver(2, {{"", 1, 2}, {"", 1, 2}}), 1, 2).size() == 2);
}

TEST_CASE("type A recognition and opposite") {
    CHECK(is_type_a(linear(5)));
    CHECK(is_type_a(Quiver(3, {{"", 2, 1}, {"", 2, 3}})));
    CHECK_FALSE(is_type_a(Quiver(2, {{"", 1, 2}, {"", 1, 2}})));
    CHECK_FALSE(is_type_a(Quiver(3, {{"", 1, 3}, {"", 2, 3}})));
    const Quiver op = linear(3).opposite();
    CHECK(op.arrow("a1").source == 2);
    CHECK(op.opposite() == linear(3));
}
