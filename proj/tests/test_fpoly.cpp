#include "clustercat/artypea.hpp"
#include "clustercat/fpoly.hpp"

#include <doctest.h>

using namespace clustercat;

namespace {

IntMatrix mat(std::size_t r, std::size_t c, std::vector<std::int64_t> v) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) m(i, j) = v[i * c + j];
    }
    return m;
}

const Quiver kq(2, {{"a", 1, 2}, {"b", 1, 2}});
const Quiver lq(1, {{"l", 1, 1}});

Representation kronecker_v() {
    return Representation(kq, {2, 2}, {{"a", mat(2, 2, {1, 0, 0, 1})}, {"b", mat(2, 2, {1, 1, 0, 1})}});
}
Representation loop1() { return Representation(lq, {1}, {{"l", mat(1, 1, {0})}}); }
Representation loop2() { return Representation(lq, {2}, {{"l", mat(2, 2, {0, 0, 1, 0})}}); }

Quiver linear(int n) {
    std::vector<Arrow> arrows;
    for (int i = 1; i < n; ++i) arrows.push_back({"", i, i + 1});
    return Quiver(n, arrows);
}

IntPolyY Y(const char* s, std::size_t n) { return IntPolyY::parse(s, n); }

BigInt binom(int d, int i) {
    BigInt r = 1;
    for (int k = 0; k < i; ++k) r = r * (d - k) / (k + 1);
    return r;
}

Representation sum_of(const std::vector<Interval>& parts, const Quiver& q) {
    Representation out = Representation::zero(q.opposite());
    for (const auto& p : parts) out = direct_sum(out, interval_module(q, p.a, p.b));
    return out;
}

}  // namespace

TEST_CASE("golden F-polynomials") {
    CHECK(f_polynomial(kronecker_v()).poly == Y("1 + 2*y2 + y2^2 + y1*y2 + 2*y1*y2^2 + y1^2*y2^2", 2));
    CHECK(f_polynomial(loop1()).poly == Y("1 + y", 1));
    CHECK(f_polynomial(loop2()).poly == Y("1 + y + y^2", 1));
    const Representation v1(kq, {1, 1}, {{"a", mat(1, 1, {0})}, {"b", mat(1, 1, {1})}});
    const Representation v2(kq, {1, 1}, {{"a", mat(1, 1, {1})}, {"b", mat(1, 1, {0})}});
    CHECK_FALSE(v1 == v2);
    CHECK(f_polynomial(v1).poly == Y("1 + y2 + y1*y2", 2));
    CHECK(f_polynomial(v2).poly == Y("1 + y2 + y1*y2", 2));
    const Representation cyc(Quiver(2, {{"a", 1, 2}, {"b", 2, 1}}), {2, 1}, {{"a", mat(1, 2, {1, 0})}, {"b", mat(2, 1, {0, 1})}});
    const auto fc = f_polynomial(cyc).poly;
    CHECK(fc == Y("1 + y1 + y1*y2 + y1^2*y2", 2));
    CHECK(fc == Y("1 + y1*y2", 2) * Y("1 + y1", 2));
    CHECK(f_polynomial(kronecker_v()).dim == DimVec{2, 2});
}

TEST_CASE("vector spaces give binomial coefficients") {
    for (int d = 0; d <= 5; ++d) {
        const auto f = f_polynomial(Representation(Quiver(1, {}), {d}, {})).poly;
        IntPolyY expected(1);
        for (int i = 0; i <= d; ++i) expected = expected + IntPolyY::monomial({i}, binom(d, i));
        CHECK(f == expected);
    }
}

TEST_CASE("direct-sum identity on the full grid") {
    std::vector<Representation> one_vertex{loop1(), loop2()};
    std::vector<Representation> kron{kronecker_v(), Representation(kq, {1, 1}, {{"a", mat(1, 1, {0})}, {"b", mat(1, 1, {1})}}),
                                     Representation::zero(kq)};
    std::vector<Representation> a4;
    const Quiver q = linear(4);
    for (int a = 1; a <= 4; ++a) {
        for (int b = a; b <= 4; ++b) a4.push_back(interval_module(q, a, b));
    }
    int checked = 0;
    for (const auto* family : {&one_vertex, &kron, &a4}) {
        for (const auto& v : *family) {
            for (const auto& w : *family) {
                CHECK(check_product(v, w));
                ++checked;
            }
        }
    }
    CHECK(checked == 4 + 9 + 100);
    CHECK(f_polynomial(direct_sum(loop1(), loop1())).poly == Y("1 + 2*y + y^2", 1));
}

TEST_CASE("almost-split identity") {
    CHECK(check_ar_identity(loop1(), loop2(), loop1()));
    // A split sequence misses the extra monomial.
    CHECK_FALSE(check_ar_identity(loop1(), direct_sum(loop1(), loop1()), loop1()));

    for (int n : {4, 5}) {
        const Quiver q = linear(n);
        const ARQuiver ar = knit(q);
        int meshes = 0;
        for (const auto& x : ar.vertices()) {
            if (ar.is_projective(x)) continue;
            const auto s = ar_sequence(ar, x);
            CHECK(check_ar_identity(interval_module(q, s.tau_x.a, s.tau_x.b), sum_of(s.middle, q), interval_module(q, x.a, x.b)));
            ++meshes;
        }
        CHECK(meshes == n * (n - 1) / 2);
    }
    // The mesh ending at 3/2 on A4 has middle {2, 3/2/1}.
    const Quiver q = linear(4);
    CHECK(check_ar_identity(interval_module(q, 1, 2), sum_of({{2, 2}, {1, 3}}, q), interval_module(q, 2, 3)));
}

TEST_CASE("constant and top coefficients") {
    const Quiver q(3, {{"", 2, 1}, {"", 2, 3}});
    for (int a = 1; a <= 3; ++a) {
        for (int b = a; b <= 3; ++b) {
            const auto f = f_polynomial(interval_module(q, a, b));
            CHECK(f.poly.coefficient({0, 0, 0}) == 1);
            CHECK(f.poly.coefficient(f.dim) == 1);
        }
    }
    CHECK(y_monomial({1, 0, 2}) == Y("y1*y3^2", 3));
}
