#include "clustercat/grass.hpp"

#include "clustercat/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace clustercat {

SubspaceIter::SubspaceIter(int d, int e, std::uint32_t q) : d_(d), e_(e), q_(q) {
    if (d < 0 || e < 0 || e > d) fail(ErrorCode::BadDims, "subspace of dimension " + std::to_string(e) + " in " + std::to_string(d));
    pivots_.resize(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) pivots_[i] = i;
    load_pivots();
}

void SubspaceIter::load_pivots() {
    free_slots_.clear();
    for (int r = 0; r < e_; ++r) {
        for (int c = pivots_[r] + 1; c < d_; ++c) {
            if (!std::binary_search(pivots_.begin(), pivots_.end(), c)) free_slots_.emplace_back(r, c);
        }
    }
    free_values_.assign(free_slots_.size(), 0);
    write_basis();
}

void SubspaceIter::write_basis() {
    basis_ = Matrix<std::uint32_t>(static_cast<std::size_t>(e_), static_cast<std::size_t>(d_));
    for (int r = 0; r < e_; ++r) basis_(r, pivots_[r]) = 1;
    for (std::size_t k = 0; k < free_slots_.size(); ++k) {
        basis_(free_slots_[k].first, free_slots_[k].second) = free_values_[k];
    }
}

void SubspaceIter::advance() {
    if (done_) return;
    for (std::size_t k = 0; k < free_values_.size(); ++k) {
        if (++free_values_[k] < q_) {
            basis_(free_slots_[k].first, free_slots_[k].second) = free_values_[k];
            return;
        }
        free_values_[k] = 0;
        basis_(free_slots_[k].first, free_slots_[k].second) = 0;
    }
    int i = e_ - 1;
    while (i >= 0 && pivots_[i] == d_ - e_ + i) --i;
    if (i < 0) {
        done_ = true;
        return;
    }
    ++pivots_[i];
    for (int k = i + 1; k < e_; ++k) pivots_[k] = pivots_[k - 1] + 1;
    load_pivots();
}

bool in_span(const Matrix<std::uint32_t>& rref, const std::vector<int>& pivots, std::vector<std::uint32_t> v,
             std::uint32_t q) {
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const std::uint64_t coef = v[static_cast<std::size_t>(pivots[r])];
        if (coef == 0) continue;
        for (std::size_t c = 0; c < v.size(); ++c) {
            const std::uint64_t sub = (coef * rref(r, c)) % q;
            v[c] = static_cast<std::uint32_t>((v[c] + q - sub) % q);
        }
    }
    return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

BigInt gaussian_binomial(int d, int e, std::int64_t q) {
    if (d < 0 || e < 0 || e > d) fail(ErrorCode::BadDims, "gaussian binomial");
    BigInt num = 1, den = 1;
    const BigInt bq = q;
    for (int i = 0; i < e; ++i) {
        num *= boost::multiprecision::pow(bq, static_cast<unsigned>(d - i)) - 1;
        den *= boost::multiprecision::pow(bq, static_cast<unsigned>(i + 1)) - 1;
    }
    return num / den;
}

BigInt count_subspaces(int d, int e, std::int64_t q) {
    if (!is_prime(q)) fail(ErrorCode::NotPrime, std::to_string(q));
    BigInt count = 0;
    for (SubspaceIter it(d, e, static_cast<std::uint32_t>(q)); !it.done(); it.advance()) ++count;
    return count;
}

namespace {

struct Chosen {
    Matrix<std::uint32_t> basis;
    std::vector<int> pivots;
};

using RowVec = std::vector<std::uint32_t>;

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

// Rank over F_p of a list of row vectors (destroys the input).
std::size_t rank_mod_p(std::vector<RowVec> rows, std::uint32_t p) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const std::uint64_t inv = inverse_mod(rows[r][c], p);
        for (auto& x : rows[r]) x = static_cast<std::uint32_t>(x * inv % p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const std::uint64_t f = rows[i][c];
            for (std::size_t k = 0; k < cols; ++k) {
                rows[i][k] = static_cast<std::uint32_t>((rows[i][k] + p - f * rows[r][k] % p) % p);
            }
        }
        ++r;
    }
    return r;
}

RowVec apply_mod_p(const Matrix<std::uint32_t>& m, const RowVec& v, std::uint32_t p) {
    RowVec out(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < m.cols(); ++k) acc = (acc + std::uint64_t(m(i, k)) * v[k]) % p;
        out[i] = static_cast<std::uint32_t>(acc);
    }
    return out;
}

RowVec basis_row(const Chosen& w, std::size_t r) {
    RowVec v(w.basis.cols());
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = w.basis(r, c);
    return v;
}

// Rows y spanning the annihilator of an RREF row space: x lies in the
// subspace iff y . x = 0 for every returned y.
std::vector<RowVec> annihilator(const Chosen& w, std::uint32_t p) {
    const std::size_t d = w.basis.cols();
    std::vector<RowVec> out;
    for (std::size_t c = 0; c < d; ++c) {
        if (std::binary_search(w.pivots.begin(), w.pivots.end(), static_cast<int>(c))) continue;
        RowVec y(d, 0);
        y[c] = 1;
        for (std::size_t r = 0; r < w.pivots.size(); ++r) y[w.pivots[r]] = (p - w.basis(r, c)) % p;
        out.push_back(std::move(y));
    }
    return out;
}

bool arrow_stable(const Matrix<std::uint32_t>& va, const Chosen& src, const Chosen& dst, std::uint32_t q) {
    for (std::size_t r = 0; r < src.basis.rows(); ++r) {
        if (!in_span(dst.basis, dst.pivots, apply_mod_p(va, basis_row(src, r), q), q)) return false;
    }
    return true;
}

}  // namespace

BigInt count_subreps(const Representation& v, const DimVec& e, std::int64_t q) {
    const Quiver& quiver = v.quiver();
    const int n = quiver.vertex_count();
    if (static_cast<int>(e.size()) != n) fail(ErrorCode::BadDims, "dimension vector length mismatch");
    for (int i = 0; i < n; ++i) {
        if (e[i] < 0 || e[i] > v.dims()[i]) fail(ErrorCode::BadDims, "e exceeds dim V at vertex " + std::to_string(i + 1));
    }
    const RepresentationFp fp = specialize_mod_p(v, q);
    const auto p = static_cast<std::uint32_t>(q);

    // Split the vertices into an enumerated set and a closed set: loop-free
    // vertices with no arrows among them, largest Grassmannians first. Once
    // the enumerated set is fixed, each closed vertex v must satisfy
    // U_v <= W_v <= K_v (U_v: images of incoming arrows, K_v: preimages along
    // outgoing ones), so it contributes a Gaussian binomial.
    std::vector<int> by_size(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) by_size[i] = i + 1;
    auto cost = [&](int i) { return e[i - 1] * (v.dim(i) - e[i - 1]); };
    std::stable_sort(by_size.begin(), by_size.end(), [&](int a, int b) { return cost(a) > cost(b); });
    std::vector<bool> closed(static_cast<std::size_t>(n) + 1, false);
    for (int i : by_size) {
        bool ok = quiver.arrow_count(i, i) == 0;
        for (const auto& a : quiver.arrows()) {
            if ((a.source == i && closed[a.target]) || (a.target == i && closed[a.source])) ok = false;
        }
        closed[i] = ok;
    }
    std::vector<int> order, closed_vertices;
    for (int i = 1; i <= n; ++i) (closed[i] ? closed_vertices : order).push_back(i);

    std::vector<int> position(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = static_cast<int>(k);
    std::vector<std::vector<std::size_t>> checks(order.size());
    for (std::size_t k = 0; k < quiver.arrows().size(); ++k) {
        const Arrow& a = quiver.arrows()[k];
        if (closed[a.source] || closed[a.target]) continue;
        checks[static_cast<std::size_t>(std::max(position[a.source], position[a.target]))].push_back(k);
    }

    std::map<std::pair<int, int>, BigInt> binomials;
    auto binomial = [&](int d, int k) -> const BigInt& {
        auto it = binomials.find({d, k});
        if (it == binomials.end()) it = binomials.emplace(std::make_pair(d, k), gaussian_binomial(d, k, q)).first;
        return it->second;
    };

    std::vector<Chosen> chosen(static_cast<std::size_t>(n) + 1);
    auto closed_factor = [&]() -> BigInt {
        BigInt factor = 1;
        for (int c : closed_vertices) {
            std::vector<RowVec> images, constraints;
            for (std::size_t k = 0; k < quiver.arrows().size(); ++k) {
                const Arrow& a = quiver.arrows()[k];
                if (a.target == c) {
                    for (std::size_t r = 0; r < chosen[a.source].basis.rows(); ++r) {
                        images.push_back(apply_mod_p(fp.matrices[k], basis_row(chosen[a.source], r), p));
                    }
                }
                if (a.source == c) {
                    // y . (V_a x) = (y V_a) . x
                    for (const auto& y : annihilator(chosen[a.target], p)) {
                        RowVec row(static_cast<std::size_t>(v.dim(c)), 0);
                        for (std::size_t col = 0; col < row.size(); ++col) {
                            std::uint64_t acc = 0;
                            for (std::size_t i = 0; i < y.size(); ++i) acc = (acc + std::uint64_t(y[i]) * fp.matrices[k](i, col)) % p;
                            row[col] = static_cast<std::uint32_t>(acc);
                        }
                        constraints.push_back(std::move(row));
                    }
                }
            }
            for (const auto& u : images) {
                for (const auto& y : constraints) {
                    std::uint64_t dot = 0;
                    for (std::size_t i = 0; i < u.size(); ++i) dot = (dot + std::uint64_t(u[i]) * y[i]) % p;
                    if (dot != 0) return 0;
                }
            }
            const int dim_u = static_cast<int>(rank_mod_p(images, p));
            const int dim_k = v.dim(c) - static_cast<int>(rank_mod_p(constraints, p));
            const int want = e[c - 1];
            if (want < dim_u || want > dim_k) return 0;
            factor *= binomial(dim_k - dim_u, want - dim_u);
        }
        return factor;
    };

    BigInt count = 0;
    std::function<void(std::size_t)> search = [&](std::size_t depth) {
        if (depth == order.size()) {
            count += closed_factor();
            return;
        }
        const int vertex = order[depth];
        for (SubspaceIter it(v.dim(vertex), e[vertex - 1], p); !it.done(); it.advance()) {
            chosen[vertex] = Chosen{it.basis(), it.pivots()};
            bool ok = true;
            for (std::size_t k : checks[depth]) {
                const Arrow& a = quiver.arrows()[k];
                if (!arrow_stable(fp.matrices[k], chosen[a.source], chosen[a.target], p)) {
                    ok = false;
                    break;
                }
            }
            if (ok) search(depth + 1);
        }
    };
    search(0);
    return count;
}

int grassmannian_degree_bound(const Representation& v, const DimVec& e) {
    int total = 0;
    for (std::size_t i = 0; i < e.size(); ++i) total += e[i] * (v.dims()[i] - e[i]);
    return total;
}

std::vector<std::int64_t> first_primes(std::size_t count) {
    std::vector<std::int64_t> out;
    for (std::int64_t c = 2; out.size() < count; ++c) {
        if (is_prime(c)) out.push_back(c);
    }
    return out;
}

UniPolyQ counting_polynomial(const Representation& v, const DimVec& e) {
    const int bound = grassmannian_degree_bound(v, e);
    std::vector<CountPoint> points;
    for (std::int64_t q : first_primes(static_cast<std::size_t>(bound) + 2)) {
        points.push_back({BigInt(q), count_subreps(v, e, q)});
    }
    try {
        return interpolate(points, bound);
    } catch (const Error& err) {
        if (err.code() == ErrorCode::InconsistentExtraPoint || err.code() == ErrorCode::NonIntegerCoefficients) {
            fail(ErrorCode::NotPolynomialCount, err.what());
        }
        throw;
    }
}

BigInt euler_char(const Representation& v, const DimVec& e) {
    const Rational at_one = counting_polynomial(v, e)(Rational(1));
    return boost::multiprecision::numerator(at_one);
}

std::map<DimVec, BigInt> grass_table(const Representation& v) {
    std::map<DimVec, BigInt> table;
    DimVec e(v.dims().size(), 0);
    while (true) {
        table.emplace(e, euler_char(v, e));
        std::size_t i = e.size();
        while (i > 0) {
            --i;
            if (e[i] < v.dims()[i]) {
                ++e[i];
                std::fill(e.begin() + static_cast<std::ptrdiff_t>(i) + 1, e.end(), 0);
                break;
            }
            if (i == 0) return table;
        }
        if (e.empty()) return table;
    }
}

}  // namespace clustercat
