#include "clustercat/linalg.hpp"

#include <utility>

namespace clustercat {

std::size_t rank(RatMatrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r) {
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(pivot, k));
        }
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            const Rational factor = m(i, c) / m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k) m(i, k) -= factor * m(r, k);
        }
        ++r;
    }
    return r;
}

std::optional<std::vector<Rational>> solve_square(RatMatrix a, std::vector<Rational> b) {
    const std::size_t n = a.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a(pivot, c) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a(c, k), a(pivot, k));
            std::swap(b[c], b[pivot]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            const Rational factor = a(i, c) / a(c, c);
            for (std::size_t k = c; k < n; ++k) a(i, k) -= factor * a(c, k);
            b[i] -= factor * b[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= a(i, i);
    return b;
}

}  // namespace clustercat
