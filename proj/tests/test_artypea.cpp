#include "clustercat/artypea.hpp"
#include "clustercat/errors.hpp"

#include <doctest.h>

#include <set>

using namespace clustercat;

namespace {

Quiver linear(int n) {
    std::vector<Arrow> arrows;
    for (int i = 1; i < n; ++i) arrows.push_back({"", i, i + 1});
    return Quiver(n, arrows);
}

// Every orientation of A_n, encoded by a bitmask over the n-1 edges.
std::vector<Quiver> orientations(int n) {
    std::vector<Quiver> out;
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
        std::vector<Arrow> arrows;
        for (int i = 1; i < n; ++i) {
            if (mask & (1 << (i - 1))) arrows.push_back({"", i + 1, i});
            else arrows.push_back({"", i, i + 1});
        }
        out.emplace_back(n, arrows);
    }
    return out;
}

DimVec times(const Matrix<std::int64_t>& m, const DimVec& v) {
    DimVec out(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += static_cast<int>(m(i, j)) * v[j];
    }
    return out;
}

}  // namespace

// Module part of the picture of the derived category of 1 -> 2 -> 3 -> 4,
// modules written by composition series.
const std::set<std::pair<std::string, std::string>> kFigureArrows{
    {"1", "2/1"},         {"2/1", "2"},     {"2/1", "3/2/1"}, {"2", "3/2"},         {"3/2/1", "3/2"},
    {"3/2/1", "4/3/2/1"}, {"3/2", "3"},     {"3/2", "4/3/2"}, {"4/3/2/1", "4/3/2"}, {"3", "4/3"},
    {"4/3/2", "4/3"},     {"4/3", "4"},
};

TEST_CASE("linear A4 matches the figure arrow for arrow") {
    const ARQuiver ar = knit(linear(4));
    CHECK(ar.vertices().size() == 10);
    std::set<std::pair<std::string, std::string>> arrows;
    for (const auto& [s, t] : ar.arrows()) {
        arrows.emplace(ar.composition_series(ar.vertices()[s]), ar.composition_series(ar.vertices()[t]));
    }
    CHECK(arrows == kFigureArrows);
    CHECK(ar.composition_series({1, 3}) == "3/2/1");
    // Top row of the figure: tau(2) = 1, tau(3) = 2, tau(4) = 3.
    CHECK(tau(ar, {2, 2}) == Interval{1, 1});
    CHECK(tau(ar, {3, 3}) == Interval{2, 2});
    CHECK(tau(ar, {4, 4}) == Interval{3, 3});
    CHECK(tau(ar, {2, 3}) == Interval{1, 2});
    for (int i = 1; i <= 4; ++i) {
        try {
            tau(ar, ar.projective(i));
            FAIL("expected IsProjective");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::IsProjective);
        }
    }
}

TEST_CASE("almost-split sequences") {
    const ARQuiver a2 = knit(linear(2));
    CHECK(a2.vertices().size() == 3);
    const auto s = ar_sequence(a2, {2, 2});
    CHECK(s.tau_x == Interval{1, 1});
    CHECK(s.middle == std::vector<Interval>{{1, 2}});

    const ARQuiver a4 = knit(linear(4));
    const auto m = ar_sequence(a4, {2, 3});
    REQUIRE(m.middle.size() == 2);
    DimVec total(4, 0);
    for (const auto& y : m.middle) {
        const auto d = y.dims(4);
        for (int i = 0; i < 4; ++i) total[i] += d[i];
    }
    CHECK(total == DimVec{1, 2, 1, 0});
    CHECK(m.middle == std::vector<Interval>{{1, 3}, {2, 2}});
    const auto edge = ar_sequence(a4, {4, 4});
    CHECK(edge.tau_x == Interval{3, 3});
    CHECK(edge.middle == std::vector<Interval>{{3, 4}});
}

TEST_CASE("knitting invariants for every orientation, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& q : orientations(n)) {
            const ARQuiver ar = knit(q);
            std::set<Interval> seen(ar.vertices().begin(), ar.vertices().end());
            CHECK(seen.size() == static_cast<std::size_t>(n * (n + 1) / 2));
            CHECK(ar.vertices().size() == seen.size());
            const auto phi = coxeter_matrix(q);
            for (const auto& x : ar.vertices()) {
                const DimVec image = times(phi, x.dims(n));
                const auto as_interval = interval_of(image);
                const auto t = ar.tau_of(x);
                CHECK(t.has_value() == !ar.is_projective(x));
                CHECK(as_interval.has_value() == t.has_value());
                if (!t) continue;
                CHECK(*as_interval == *t);
                const auto seq = ar_sequence(ar, x);
                CHECK((seq.middle.size() == 1 || seq.middle.size() == 2));
                DimVec lhs = t->dims(n), rhs(static_cast<std::size_t>(n), 0);
                const DimVec dx = x.dims(n);
                for (int i = 0; i < n; ++i) lhs[i] += dx[i];
                for (const auto& y : seq.middle) {
                    const DimVec dy = y.dims(n);
                    for (int i = 0; i < n; ++i) rhs[i] += dy[i];
                }
                CHECK(lhs == rhs);
            }
            for (int j = 1; j <= n; ++j) {
                DimVec neg = ar.injective(j).dims(n);
                for (auto& v : neg) v = -v;
                CHECK(times(phi, ar.projective(j).dims(n)) == neg);
            }
        }
    }
}

TEST_CASE("cluster category objects and suspension") {
    CHECK(cluster_indecomposables(linear(4)).size() == 14);
    CHECK(cluster_indecomposables(linear(2)).size() == 5);
    CHECK(cluster_indecomposables(linear(1)).size() == 2);
    CHECK_THROWS_AS(cluster_indecomposables(Quiver(2, {{"", 1, 2}, {"", 1, 2}})), Error);

    const ARQuiver a4 = knit(linear(4));
    CHECK(sigma(a4, IndecObject::module({2, 2})) == IndecObject::module({1, 1}));
    CHECK(sigma(a4, IndecObject::module({1, 1})) == IndecObject::shifted_projective(1));
    CHECK(sigma(a4, IndecObject::shifted_projective(1)) == IndecObject::module({1, 4}));

    for (int n = 1; n <= 6; ++n) {
        for (const auto& q : orientations(n)) {
            const ARQuiver ar = knit(q);
            const auto objs = cluster_indecomposables(q);
            std::set<IndecObject> image;
            for (const auto& x : objs) {
                const auto y = sigma(ar, x);
                CHECK_FALSE(y == x);
                image.insert(y);
            }
            CHECK(image == std::set<IndecObject>(objs.begin(), objs.end()));
        }
    }
}

TEST_CASE("object identifiers") {
    CHECK(IndecObject::parse("[1,3]") == IndecObject::module({1, 3}));
    CHECK(IndecObject::parse(" [2, 4] ").id() == "[2,4]");
    CHECK(IndecObject::parse("T2").id() == "T2");
    CHECK_THROWS_AS(IndecObject::parse("[3,1]"), Error);
    CHECK_THROWS_AS(IndecObject::parse("X"), Error);
    CHECK(interval_of({0, 1, 1, 0}) == Interval{2, 3});
    CHECK_FALSE(interval_of({1, 0, 1}).has_value());
    CHECK_FALSE(interval_of({0, 2}).has_value());
    CHECK_THROWS_AS(knit(Quiver(2, {{"", 1, 2}, {"", 1, 2}})), Error);
}
