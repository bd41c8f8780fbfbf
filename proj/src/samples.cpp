#include "clustercat/samples.hpp"

namespace clustercat::samples {

namespace {

IntMatrix mat(std::size_t r, std::size_t c, std::vector<std::int64_t> v) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) m(i, j) = v[i * c + j];
    }
    return m;
}

}  // namespace

Quiver linear_a(int n) {
    std::vector<Arrow> arrows;
    for (int i = 1; i < n; ++i) arrows.push_back({"", i, i + 1});
    return Quiver(n, arrows);
}

Quiver kronecker() { return Quiver(2, {{"a", 1, 2}, {"b", 1, 2}}); }

Quiver loop() { return Quiver(1, {{"l", 1, 1}}); }

Quiver two_cycle() { return Quiver(2, {{"a", 1, 2}, {"b", 2, 1}}); }

Representation kronecker_v() {
    return Representation(kronecker(), {2, 2}, {{"a", mat(2, 2, {1, 0, 0, 1})}, {"b", mat(2, 2, {1, 1, 0, 1})}});
}

Representation kronecker_line(bool a_vanishes) {
    const std::int64_t a = a_vanishes ? 0 : 1;
    return Representation(kronecker(), {1, 1}, {{"a", mat(1, 1, {a})}, {"b", mat(1, 1, {1 - a})}});
}

Representation loop_block(int d) {
    IntMatrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (int i = 1; i < d; ++i) m(static_cast<std::size_t>(i), static_cast<std::size_t>(i - 1)) = 1;
    return Representation(loop(), {d}, {{"l", m}});
}

Representation two_cycle_rep() {
    return Representation(two_cycle(), {2, 1}, {{"a", mat(1, 2, {1, 0})}, {"b", mat(2, 1, {0, 1})}});
}

Representation vector_space(int d) { return Representation(Quiver(1, {}), {d}, {}); }

}  // namespace clustercat::samples
