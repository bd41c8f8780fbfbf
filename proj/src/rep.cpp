#include "clustercat/rep.hpp"

#include "clustercat/errors.hpp"

#include <algorithm>

namespace clustercat {

namespace {

std::string shape_string(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

void require_same_quiver(const Representation& v, const Representation& w) {
    if (!(v.quiver() == w.quiver())) fail(ErrorCode::QuiverMismatch, "representations live on different quivers");
}

}  // namespace

Representation::Representation(Quiver quiver, DimVec dims, std::map<std::string, IntMatrix> matrices,
                               std::vector<Relation> relations)
    : quiver_(std::move(quiver)), dims_(std::move(dims)), matrices_(std::move(matrices)), relations_(std::move(relations)) {
    if (static_cast<int>(dims_.size()) != quiver_.vertex_count()) {
        fail(ErrorCode::ShapeMismatch, std::to_string(dims_.size()) + " dimensions for " +
                                           std::to_string(quiver_.vertex_count()) + " vertices");
    }
    for (int d : dims_) {
        if (d < 0) fail(ErrorCode::ShapeMismatch, "negative dimension");
    }
    for (const auto& [id, m] : matrices_) quiver_.arrow_index(id);
    for (const auto& a : quiver_.arrows()) {
        const auto rows = static_cast<std::size_t>(dim(a.target));
        const auto cols = static_cast<std::size_t>(dim(a.source));
        auto it = matrices_.find(a.id);
        if (it == matrices_.end()) {
            if (rows != 0 && cols != 0) fail(ErrorCode::ShapeMismatch, "missing matrix for arrow " + a.id);
            matrices_.emplace(a.id, IntMatrix(rows, cols));
            continue;
        }
        if (it->second.rows() != rows || it->second.cols() != cols) {
            fail(ErrorCode::ShapeMismatch, "arrow " + a.id + " expects " + shape_string(rows, cols) + ", got " +
                                               shape_string(it->second.rows(), it->second.cols()));
        }
    }
}

Representation Representation::zero(const Quiver& quiver) {
    return Representation(quiver, DimVec(static_cast<std::size_t>(quiver.vertex_count()), 0), {});
}

int Representation::total_dimension() const {
    int total = 0;
    for (int d : dims_) total += d;
    return total;
}

const IntMatrix& Representation::matrix(const std::string& arrow_id) const {
    auto it = matrices_.find(arrow_id);
    if (it == matrices_.end()) fail(ErrorCode::PathInvalid, "unknown arrow " + arrow_id);
    return it->second;
}

Matrix<BigInt> Representation::path_matrix(const std::vector<std::string>& written_path) const {
    if (written_path.empty()) fail(ErrorCode::PathInvalid, "empty path");
    const Arrow& first = quiver_.arrow(written_path.back());
    auto acc = Matrix<BigInt>::identity(static_cast<std::size_t>(dim(first.source)));
    int at = first.source;
    for (auto it = written_path.rbegin(); it != written_path.rend(); ++it) {
        const Arrow& a = quiver_.arrow(*it);
        if (a.source != at) fail(ErrorCode::PathInvalid, "arrow " + a.id + " does not compose");
        acc = matmul(matrix(a.id).cast<BigInt>(), acc);
        at = a.target;
    }
    return acc;
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

RepresentationFp specialize_mod_p(const Representation& v, std::int64_t p) {
    if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p));
    RepresentationFp out{v.quiver(), v.dims(), static_cast<std::uint32_t>(p), {}};
    for (const auto& a : v.quiver().arrows()) {
        const IntMatrix& m = v.matrix(a.id);
        Matrix<std::uint32_t> r(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = static_cast<std::uint32_t>(((m(i, j) % p) + p) % p);
        }
        out.matrices.push_back(std::move(r));
    }
    return out;
}

Representation direct_sum(const Representation& v, const Representation& w) {
    require_same_quiver(v, w);
    DimVec dims(v.dims().size());
    for (std::size_t i = 0; i < dims.size(); ++i) dims[i] = v.dims()[i] + w.dims()[i];
    std::map<std::string, IntMatrix> mats;
    for (const auto& a : v.quiver().arrows()) {
        const IntMatrix& mv = v.matrix(a.id);
        const IntMatrix& mw = w.matrix(a.id);
        IntMatrix m(mv.rows() + mw.rows(), mv.cols() + mw.cols());
        for (std::size_t r = 0; r < mv.rows(); ++r) {
            for (std::size_t c = 0; c < mv.cols(); ++c) m(r, c) = mv(r, c);
        }
        for (std::size_t r = 0; r < mw.rows(); ++r) {
            for (std::size_t c = 0; c < mw.cols(); ++c) m(mv.rows() + r, mv.cols() + c) = mw(r, c);
        }
        mats.emplace(a.id, std::move(m));
    }
    return Representation(v.quiver(), std::move(dims), std::move(mats), v.relations());
}

bool check_relations(const Representation& v, const std::vector<Relation>& rels) {
    for (const auto& rel : rels) {
        if (rel.paths.size() != rel.coeffs.size() || rel.paths.empty()) {
            fail(ErrorCode::PathInvalid, "relation needs one coefficient per path");
        }
        const Quiver& q = v.quiver();
        const int s = q.arrow(rel.paths.front().back()).source;
        const int t = q.arrow(rel.paths.front().front()).target;
        Matrix<BigInt> total(static_cast<std::size_t>(v.dim(t)), static_cast<std::size_t>(v.dim(s)));
        for (std::size_t k = 0; k < rel.paths.size(); ++k) {
            const auto& path = rel.paths[k];
            if (path.size() < 2) fail(ErrorCode::PathInvalid, "relation paths must have length >= 2");
            if (q.arrow(path.back()).source != s || q.arrow(path.front()).target != t) {
                fail(ErrorCode::PathInvalid, "relation paths must share source and target");
            }
            const Matrix<BigInt> m = v.path_matrix(path);
            for (std::size_t r = 0; r < m.rows(); ++r) {
                for (std::size_t c = 0; c < m.cols(); ++c) total(r, c) += BigInt(rel.coeffs[k]) * m(r, c);
            }
        }
        if (!total.is_zero()) return false;
    }
    return true;
}

namespace {

std::size_t find_path(const std::vector<Path>& basis, const Path& p) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (basis[k].source == p.source && basis[k].arrows == p.arrows) return k;
    }
    return basis.size();
}

}  // namespace

Representation standard_module(const Quiver& q, ModuleKind kind, int j) {
    if (!q.has_vertex(j)) fail(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(j));
    if (!q.is_acyclic()) fail(ErrorCode::NotAcyclic, "standard modules need an acyclic quiver");
    const Quiver acting = q.opposite();
    const int n = acting.vertex_count();

    if (kind == ModuleKind::Simple) {
        DimVec dims(static_cast<std::size_t>(n), 0);
        dims[static_cast<std::size_t>(j - 1)] = 1;
        return Representation(acting, std::move(dims), {});
    }

    // Basis at vertex i: paths j -> i (projective) or paths i -> j (injective,
    // dual basis), all taken in the acting quiver.
    const std::vector<Path> all = enumerate_paths(acting);
    std::vector<std::vector<Path>> basis(static_cast<std::size_t>(n) + 1);
    for (const auto& p : all) {
        if (kind == ModuleKind::Projective && p.source == j) basis[p.target].push_back(p);
        if (kind == ModuleKind::Injective && p.target == j) basis[p.source].push_back(p);
    }
    DimVec dims(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) dims[i - 1] = static_cast<int>(basis[i].size());

    std::map<std::string, IntMatrix> mats;
    for (std::size_t k = 0; k < acting.arrows().size(); ++k) {
        const Arrow& a = acting.arrows()[k];
        const auto& from = basis[a.source];
        const auto& to = basis[a.target];
        IntMatrix m(to.size(), from.size());
        for (std::size_t c = 0; c < from.size(); ++c) {
            Path image;
            if (kind == ModuleKind::Projective) {
                image = from[c];
                image.arrows.push_back(k);
                image.target = a.target;
            } else {
                if (from[c].arrows.empty() || from[c].arrows.front() != k) continue;
                image.source = a.target;
                image.target = j;
                image.arrows.assign(from[c].arrows.begin() + 1, from[c].arrows.end());
            }
            const std::size_t r = find_path(to, image);
            if (r < to.size()) m(r, c) = 1;
        }
        mats.emplace(a.id, std::move(m));
    }
    return Representation(acting, std::move(dims), std::move(mats));
}

Representation interval_module(const Quiver& q, int a, int b) {
    if (!is_type_a(q)) fail(ErrorCode::NotTypeA, "interval modules need a type A quiver");
    const int n = q.vertex_count();
    if (a < 1 || b > n || a > b) {
        fail(ErrorCode::BadInterval, "[" + std::to_string(a) + "," + std::to_string(b) + "] on n=" + std::to_string(n));
    }
    const Quiver acting = q.opposite();
    DimVec dims(static_cast<std::size_t>(n), 0);
    for (int i = a; i <= b; ++i) dims[i - 1] = 1;
    std::map<std::string, IntMatrix> mats;
    for (const auto& arrow : acting.arrows()) {
        const bool inside = arrow.source >= a && arrow.source <= b && arrow.target >= a && arrow.target <= b;
        if (inside) mats.emplace(arrow.id, IntMatrix(1, 1, 1));
    }
    return Representation(acting, std::move(dims), std::move(mats));
}

DimVec socle(const Representation& v) {
    const Quiver& q = v.quiver();
    DimVec out(v.dims().size());
    for (int i = 1; i <= q.vertex_count(); ++i) {
        const auto outgoing = q.arrows_from(i);
        std::size_t rows = 0;
        for (std::size_t k : outgoing) rows += static_cast<std::size_t>(v.dim(q.arrows()[k].target));
        RatMatrix stacked(rows, static_cast<std::size_t>(v.dim(i)));
        std::size_t r0 = 0;
        for (std::size_t k : outgoing) {
            const IntMatrix& m = v.matrix(q.arrows()[k].id);
            for (std::size_t r = 0; r < m.rows(); ++r) {
                for (std::size_t c = 0; c < m.cols(); ++c) stacked(r0 + r, c) = Rational(m(r, c));
            }
            r0 += m.rows();
        }
        out[i - 1] = v.dim(i) - static_cast<int>(rank(stacked));
    }
    return out;
}

std::vector<DimVec> injective_dims(const Quiver& quiver) {
    const int n = quiver.vertex_count();
    std::vector<DimVec> out(static_cast<std::size_t>(n), DimVec(static_cast<std::size_t>(n), 0));
    for (const auto& p : enumerate_paths(quiver)) ++out[p.target - 1][p.source - 1];
    return out;
}

InjectiveCopresentation injective_copresentation(const Representation& v) {
    const Quiver& q = v.quiver();
    if (!q.is_acyclic()) fail(ErrorCode::NotAcyclic, "copresentations need a hereditary path algebra");
    if (!v.relations().empty()) fail(ErrorCode::InvalidInput, "copresentations are computed for relation-free quivers only");
    const auto n = static_cast<std::size_t>(q.vertex_count());
    const auto inj = injective_dims(q);

    InjectiveCopresentation out{socle(v), DimVec(n, 0)};
    std::vector<Rational> rhs(n, Rational(0));
    RatMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            m(i, j) = inj[j][i];
            rhs[i] += Rational(out.injective_hull[j] * inj[j][i]);
        }
    }
    for (std::size_t i = 0; i < n; ++i) rhs[i] -= v.dims()[i];
    const auto sol = solve_square(std::move(m), std::move(rhs));
    if (!sol) fail(ErrorCode::NegativeSolution, "injective dimension vectors are dependent");
    for (std::size_t j = 0; j < n; ++j) {
        const Rational& x = (*sol)[j];
        if (boost::multiprecision::denominator(x) != 1 || x < 0) {
            fail(ErrorCode::NegativeSolution, "cokernel multiplicity " + x.str() + " at vertex " + std::to_string(j + 1));
        }
        out.cokernel[j] = static_cast<int>(boost::multiprecision::numerator(x));
    }
    return out;
}

int dim_hom(const Representation& v, const Representation& w) {
    require_same_quiver(v, w);
    const Quiver& q = v.quiver();
    const auto n = static_cast<std::size_t>(q.vertex_count());
    std::vector<std::size_t> offset(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + static_cast<std::size_t>(w.dims()[i] * v.dims()[i]);
    const std::size_t unknowns = offset[n];
    if (unknowns == 0) return 0;

    // f_i is dim W_i x dim V_i; unknown (r, c) of f_i sits at offset[i] + r*dimV_i + c.
    auto var = [&](int vertex, std::size_t r, std::size_t c) {
        return offset[vertex - 1] + r * static_cast<std::size_t>(v.dim(vertex)) + c;
    };
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
    for (const auto& a : q.arrows()) {
        const IntMatrix& va = v.matrix(a.id);
        const IntMatrix& wa = w.matrix(a.id);
        const auto wt = static_cast<std::size_t>(w.dim(a.target));
        const auto vs = static_cast<std::size_t>(v.dim(a.source));
        const auto ws = static_cast<std::size_t>(w.dim(a.source));
        const auto vt = static_cast<std::size_t>(v.dim(a.target));
        for (std::size_t r = 0; r < wt; ++r) {
            for (std::size_t c = 0; c < vs; ++c) {
                std::vector<std::pair<std::size_t, Rational>> eq;
                for (std::size_t k = 0; k < ws; ++k) {
                    if (wa(r, k) != 0) eq.emplace_back(var(a.source, k, c), Rational(wa(r, k)));
                }
                for (std::size_t k = 0; k < vt; ++k) {
                    if (va(k, c) != 0) eq.emplace_back(var(a.target, r, k), Rational(-va(k, c)));
                }
                if (!eq.empty()) rows.push_back(std::move(eq));
            }
        }
    }
    RatMatrix system(rows.size(), unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (const auto& [col, val] : rows[r]) system(r, col) += val;
    }
    return static_cast<int>(unknowns - rank(std::move(system)));
}

}  // namespace clustercat
