#include "clustercat/artypea.hpp"

#include "clustercat/errors.hpp"

#include <algorithm>
#include <charconv>

namespace clustercat {

DimVec Interval::dims(int n) const {
    DimVec out(static_cast<std::size_t>(n), 0);
    for (int i = a; i <= b; ++i) out[static_cast<std::size_t>(i - 1)] = 1;
    return out;
}

std::optional<Interval> interval_of(const DimVec& dims) {
    int first = 0, last = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] == 0) continue;
        if (dims[i] != 1) return std::nullopt;
        if (first == 0) first = static_cast<int>(i) + 1;
        else if (last != static_cast<int>(i)) return std::nullopt;
        last = static_cast<int>(i) + 1;
    }
    if (first == 0) return std::nullopt;
    return Interval{first, last};
}

namespace {

int parse_positive(std::string_view s, std::string_view whole) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 1) {
        fail(ErrorCode::ParseError, "bad object '" + std::string(whole) + "'");
    }
    return v;
}

}  // namespace

IndecObject IndecObject::parse(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (c != ' ') s += c;
    }
    if (s.size() >= 2 && (s[0] == 'T' || s[0] == 't')) return shifted_projective(parse_positive(std::string_view(s).substr(1), text));
    if (s.size() >= 5 && s.front() == '[' && s.back() == ']') {
        const auto comma = s.find(',');
        if (comma != std::string::npos) {
            const int a = parse_positive(std::string_view(s).substr(1, comma - 1), text);
            const int b = parse_positive(std::string_view(s).substr(comma + 1, s.size() - comma - 2), text);
            if (a > b) fail(ErrorCode::BadInterval, std::string(text));
            return module({a, b});
        }
    }
    fail(ErrorCode::ParseError, "expected \"[a,b]\" or \"T<i>\", got '" + std::string(text) + "'");
}

std::string IndecObject::id() const { return is_module() ? interval_.to_string() : "T" + std::to_string(vertex_); }

std::size_t ARQuiver::index_of(const Interval& m) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), m);
    if (it == vertices_.end() || m.a < 1 || m.b > rank()) fail(ErrorCode::BadInterval, m.to_string());
    return static_cast<std::size_t>(it - vertices_.begin());
}

bool ARQuiver::is_projective(const Interval& m) const {
    return std::find(projectives_.begin(), projectives_.end(), m) != projectives_.end();
}

bool ARQuiver::is_injective(const Interval& m) const {
    return std::find(injectives_.begin(), injectives_.end(), m) != injectives_.end();
}

std::optional<Interval> ARQuiver::tau_of(const Interval& m) const {
    const auto& t = tau_[index_of(m)];
    if (!t) return std::nullopt;
    return vertices_[*t];
}

std::vector<Interval> ARQuiver::predecessors(const Interval& m) const {
    const std::size_t k = index_of(m);
    std::vector<Interval> out;
    for (const auto& [s, t] : arrows_) {
        if (t == k) out.push_back(vertices_[s]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Interval> ARQuiver::successors(const Interval& m) const {
    const std::size_t k = index_of(m);
    std::vector<Interval> out;
    for (const auto& [s, t] : arrows_) {
        if (s == k) out.push_back(vertices_[t]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string ARQuiver::composition_series(const Interval& m) const {
    // Layer of a vertex = longest path inside the support ending there, in the
    // acting quiver Q^op (so the top is layer 0).
    const Quiver acting = quiver_.opposite();
    std::vector<int> layer(static_cast<std::size_t>(rank()) + 1, 0);
    for (int round = 0; round < rank(); ++round) {
        for (const auto& a : acting.arrows()) {
            if (a.source < m.a || a.source > m.b || a.target < m.a || a.target > m.b) continue;
            layer[a.target] = std::max(layer[a.target], layer[a.source] + 1);
        }
    }
    int depth = 0;
    for (int v = m.a; v <= m.b; ++v) depth = std::max(depth, layer[v]);
    std::string out;
    for (int l = 0; l <= depth; ++l) {
        if (l > 0) out += '/';
        bool first = true;
        for (int v = m.a; v <= m.b; ++v) {
            if (layer[v] != l) continue;
            if (!first) out += ',';
            out += std::to_string(v);
            first = false;
        }
    }
    return out;
}

namespace {

std::vector<DimVec> path_count_columns(const Quiver& acting, bool projective) {
    // Projective P_j of rep(acting): (P_j)_i = #paths j -> i; injective I_j: #paths i -> j.
    const int n = acting.vertex_count();
    std::vector<DimVec> out(static_cast<std::size_t>(n), DimVec(static_cast<std::size_t>(n), 0));
    for (const auto& p : enumerate_paths(acting)) {
        if (projective) ++out[p.source - 1][p.target - 1];
        else ++out[p.target - 1][p.source - 1];
    }
    return out;
}

}  // namespace

ARQuiver knit(const Quiver& q) {
    if (!is_type_a(q)) fail(ErrorCode::NotTypeA, "knitting is implemented for type A quivers");
    const int n = q.vertex_count();
    const Quiver acting = q.opposite();

    ARQuiver m;
    m.quiver_ = q;
    for (const auto& d : path_count_columns(acting, true)) m.projectives_.push_back(*interval_of(d));
    for (const auto& d : path_count_columns(acting, false)) m.injectives_.push_back(*interval_of(d));

    std::vector<DimVec> dims;
    std::vector<std::vector<std::size_t>> preds;
    std::vector<bool> expanded;
    std::vector<std::optional<std::size_t>> tau_inverse;
    auto add_vertex = [&](const DimVec& d, std::vector<std::size_t> p) {
        dims.push_back(d);
        preds.push_back(std::move(p));
        expanded.push_back(false);
        tau_inverse.emplace_back();
        m.tau_.emplace_back();
        return dims.size() - 1;
    };

    // Projectives first, with P_i -> P_j for every arrow i -> j of Q.
    for (int j = 1; j <= n; ++j) add_vertex(m.projectives_[j - 1].dims(n), {});
    for (const auto& a : q.arrows()) preds[static_cast<std::size_t>(a.target - 1)].push_back(static_cast<std::size_t>(a.source - 1));

    const std::size_t expected = static_cast<std::size_t>(n) * (n + 1) / 2;
    while (true) {
        std::optional<std::size_t> ready;
        for (std::size_t k = 0; k < dims.size() && !ready; ++k) {
            if (expanded[k]) continue;
            const bool all_done = std::all_of(preds[k].begin(), preds[k].end(), [&](std::size_t p) { return expanded[p]; });
            if (all_done) ready = k;
        }
        if (!ready) break;
        const std::size_t x = *ready;

        std::vector<std::size_t> succ;
        if (x < static_cast<std::size_t>(n)) {
            for (const auto& a : q.arrows()) {
                if (a.source == static_cast<int>(x) + 1) succ.push_back(static_cast<std::size_t>(a.target - 1));
            }
        }
        for (std::size_t z : preds[x]) {
            if (tau_inverse[z]) succ.push_back(*tau_inverse[z]);
        }
        for (std::size_t s : succ) m.arrows_.emplace_back(x, s);
        expanded[x] = true;

        const Interval xi = *interval_of(dims[x]);
        if (m.is_injective(xi)) continue;
        DimVec next(static_cast<std::size_t>(n), 0);
        for (std::size_t s : succ) {
            for (int i = 0; i < n; ++i) next[i] += dims[s][i];
        }
        for (int i = 0; i < n; ++i) next[i] -= dims[x][i];
        if (!interval_of(next) || std::find(dims.begin(), dims.end(), next) != dims.end() || dims.size() >= expected) {
            fail(ErrorCode::InvalidInput, "knitting produced an unexpected dimension vector after " + xi.to_string());
        }
        const std::size_t y = add_vertex(next, succ);
        tau_inverse[x] = y;
        m.tau_[y] = x;
    }

    if (dims.size() != expected || !std::all_of(expanded.begin(), expanded.end(), [](bool b) { return b; })) {
        fail(ErrorCode::InvalidInput, "knitting did not close up");
    }
    for (const auto& d : dims) m.vertices_.push_back(*interval_of(d));
    return m;
}

Interval tau(const ARQuiver& m, const Interval& x) {
    auto t = m.tau_of(x);
    if (!t) fail(ErrorCode::IsProjective, x.to_string() + " is projective");
    return *t;
}

ARSequence ar_sequence(const ARQuiver& m, const Interval& x) {
    const Interval tx = tau(m, x);
    return {tx, m.predecessors(x), x};
}

Matrix<std::int64_t> coxeter_matrix(const Quiver& q) {
    if (!q.is_acyclic()) fail(ErrorCode::NotAcyclic, "Coxeter matrix needs an acyclic quiver");
    const auto n = static_cast<std::size_t>(q.vertex_count());
    RatMatrix c(n, n);
    for (const auto& p : enumerate_paths(q)) c(p.source - 1, p.target - 1) += 1;

    // C^{-1} column by column, then Phi = -C^T C^{-1}.
    RatMatrix c_inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> e(n, Rational(0));
        e[j] = 1;
        const auto col = solve_square(c, e);
        for (std::size_t i = 0; i < n; ++i) c_inv(i, j) = (*col)[i];
    }
    RatMatrix ct(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) ct(i, j) = -c(j, i);
    }
    const RatMatrix phi = matmul(ct, c_inv);
    Matrix<std::int64_t> out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out(i, j) = static_cast<std::int64_t>(boost::multiprecision::numerator(phi(i, j)));
    }
    return out;
}

std::vector<IndecObject> cluster_indecomposables(const Quiver& q) {
    if (!is_type_a(q)) fail(ErrorCode::NotTypeA, "cluster category objects are enumerated for type A only");
    const int n = q.vertex_count();
    std::vector<IndecObject> out;
    for (int a = 1; a <= n; ++a) {
        for (int b = a; b <= n; ++b) out.push_back(IndecObject::module({a, b}));
    }
    for (int i = 1; i <= n; ++i) out.push_back(IndecObject::shifted_projective(i));
    return out;
}

IndecObject sigma(const ARQuiver& m, const IndecObject& x) {
    if (x.is_shifted_projective()) return IndecObject::module(m.injective(x.vertex()));
    const Interval& mod = x.interval();
    if (auto t = m.tau_of(mod)) return IndecObject::module(*t);
    for (int i = 1; i <= m.rank(); ++i) {
        if (m.projective(i) == mod) return IndecObject::shifted_projective(i);
    }
    fail(ErrorCode::InvalidInput, "object " + x.id() + " is neither projective nor has a translate");
}

Representation module_of(const ARQuiver& m, const Interval& x) { return interval_module(m.quiver(), x.a, x.b); }

}  // namespace clustercat
