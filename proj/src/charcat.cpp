#include "clustercat/charcat.hpp"

#include "clustercat/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace clustercat {

TypeAContext::TypeAContext(Quiver q, bool flip_b_sign) : quiver_(std::move(q)), ar_(knit(quiver_)), b_(b_matrix(quiver_)) {
    const int n = rank();
    if (flip_b_sign) {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) b_(i, j) = -b_(i, j);
        }
    }
    for (int i = 1; i <= n; ++i) {
        ExpVec e(static_cast<std::size_t>(n), 0);
        for (int j = 1; j <= n; ++j) e[j - 1] = b_(j, i);
        y_hat_.push_back(LaurentPoly::monomial(e));
    }
}

const Representation& TypeAContext::module(const Interval& m) const {
    auto it = modules_.find(m);
    if (it == modules_.end()) it = modules_.emplace(m, interval_module(quiver_, m.a, m.b)).first;
    return it->second;
}

const FPolynomial& TypeAContext::f_polynomial_of(const Interval& m) const {
    auto it = fpolys_.find(m);
    if (it == fpolys_.end()) it = fpolys_.emplace(m, f_polynomial(module(m))).first;
    return it->second;
}

int TypeAContext::ext(const IndecObject& x, const IndecObject& y) const {
    const auto key = std::make_pair(x, y);
    if (auto it = ext_.find(key); it != ext_.end()) return it->second;
    int value = 0;
    if (x.is_shifted_projective() && y.is_shifted_projective()) {
        value = 0;
    } else if (x.is_shifted_projective()) {
        value = module(y.interval()).dim(x.vertex());
    } else if (y.is_shifted_projective()) {
        value = module(x.interval()).dim(y.vertex());
    } else {
        // Ext_C(M, N) = Ext(M, N) + D Ext(N, M), and Ext(M, N) = D Hom(N, tau M).
        const Interval& m = x.interval();
        const Interval& n = y.interval();
        if (auto tm = ar_.tau_of(m)) value += dim_hom(module(n), module(*tm));
        if (auto tn = ar_.tau_of(n)) value += dim_hom(module(m), module(*tn));
    }
    ext_.emplace(key, value);
    return value;
}

IndexVec module_index(const Representation& v) {
    const auto c = injective_copresentation(v);
    IndexVec out(c.cokernel.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = c.cokernel[i] - c.injective_hull[i];
    return out;
}

IndexVec object_index(const TypeAContext& ctx, const IndecObject& x) {
    if (x.is_shifted_projective()) {
        IndexVec e(static_cast<std::size_t>(ctx.rank()), 0);
        e[static_cast<std::size_t>(x.vertex() - 1)] = 1;
        return e;
    }
    return module_index(ctx.module(x.interval()));
}

IndexVec iota(const DimVec& e, const ExchangeMatrix& b) {
    if (static_cast<int>(e.size()) != b.size()) {
        fail(ErrorCode::LengthMismatch, "dimension vector of length " + std::to_string(e.size()) + " against B of size " +
                                            std::to_string(b.size()));
    }
    const int n = b.size();
    IndexVec out(static_cast<std::size_t>(n), 0);
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= n; ++i) out[j - 1] -= b(j, i) * e[i - 1];
    }
    return out;
}

LaurentPoly cc_module(const TypeAContext& ctx, const Representation& v) {
    const FPolynomial f = f_polynomial(v);
    return LaurentPoly::monomial(module_index(v)) * lp_substitute(f.poly, ctx.y_hat());
}

LaurentPoly cc(const TypeAContext& ctx, const IndecObject& x) {
    const auto n = static_cast<std::size_t>(ctx.rank());
    if (x.is_shifted_projective()) return LaurentPoly::variable(n, static_cast<std::size_t>(x.vertex()));
    const FPolynomial& f = ctx.f_polynomial_of(x.interval());
    return LaurentPoly::monomial(object_index(ctx, x)) * lp_substitute(f.poly, ctx.y_hat());
}

LaurentPoly cc_zero(const TypeAContext& ctx) { return LaurentPoly::constant(static_cast<std::size_t>(ctx.rank()), 1); }

const LaurentPoly& CCTable::at(const IndecObject& x) const {
    auto it = values_.find(x);
    if (it == values_.end()) fail(ErrorCode::NotInTable, "object " + x.id());
    return it->second;
}

std::optional<IndecObject> CCTable::lookup(const LaurentPoly& value) const {
    auto it = inverse_.find(value.to_string());
    if (it == inverse_.end()) return std::nullopt;
    return it->second;
}

void CCTable::overwrite_for_testing(const IndecObject& x, LaurentPoly value) {
    auto it = values_.find(x);
    if (it == values_.end()) fail(ErrorCode::NotInTable, "object " + x.id());
    inverse_.erase(it->second.to_string());
    it->second = std::move(value);
    inverse_.insert_or_assign(it->second.to_string(), x);
}

CCTable cc_table(const TypeAContext& ctx) {
    CCTable t;
    t.objects_ = cluster_indecomposables(ctx.quiver());
    for (const auto& x : t.objects_) {
        LaurentPoly value = cc(ctx, x);
        const std::string key = value.to_string();
        if (auto [it, inserted] = t.inverse_.emplace(key, x); !inserted) {
            fail(ErrorCode::CollisionDetected, x.id() + " and " + it->second.id() + " both have CC " + key);
        }
        t.values_.emplace(x, std::move(value));
    }
    return t;
}

std::string CTObject::canonical() const {
    std::vector<std::string> ids;
    for (const auto& s : summands) ids.push_back(s.id());
    std::sort(ids.begin(), ids.end());
    std::string out;
    for (const auto& id : ids) {
        if (!out.empty()) out += ' ';
        out += id;
    }
    return out;
}

CTObject initial_ct_object(const TypeAContext& ctx) {
    CTObject r{{}, ctx.quiver()};
    for (int i = 1; i <= ctx.rank(); ++i) r.summands.push_back(IndecObject::shifted_projective(i));
    return r;
}

namespace {

// prod_{a: i -> j} v_j and prod_{b: h -> i} v_h over the arrows of q.
std::pair<LaurentPoly, LaurentPoly> exchange_products(const Quiver& q, int i,
                                                      const std::function<const LaurentPoly&(int)>& value,
                                                      std::size_t nvars) {
    LaurentPoly out = LaurentPoly::constant(nvars, 1);
    LaurentPoly in = LaurentPoly::constant(nvars, 1);
    for (const auto& a : q.arrows()) {
        if (a.source == i) out = out * value(a.target);
        if (a.target == i) in = in * value(a.source);
    }
    return {out, in};
}

}  // namespace

CTObject ct_mutate(const CTObject& r, int i, const CCTable& table) {
    const int n = static_cast<int>(r.summands.size());
    if (i < 1 || i > n) fail(ErrorCode::VertexOutOfRange, "mutation at " + std::to_string(i));
    const std::size_t nvars = table.at(r.summands[0]).nvars();
    auto value = [&](int k) -> const LaurentPoly& { return table.at(r.summands[static_cast<std::size_t>(k - 1)]); };
    const auto [out, in] = exchange_products(r.quiver, i, value, nvars);
    const LaurentPoly target = lp_exact_div(out + in, value(i));
    const auto found = table.lookup(target);
    if (!found) fail(ErrorCode::NotInTable, "no object has CC " + target.to_string() + " (mutating " + r.canonical() + " at " + std::to_string(i) + ")");
    CTObject next = r;
    next.summands[static_cast<std::size_t>(i - 1)] = *found;
    next.quiver = mutate_quiver(r.quiver, i);
    return next;
}

std::vector<CTObject> ct_enumerate(const TypeAContext& ctx, const CCTable& table) {
    std::map<std::string, CTObject> seen;
    std::deque<CTObject> queue;
    const CTObject start = initial_ct_object(ctx);
    seen.emplace(start.canonical(), start);
    queue.push_back(start);
    while (!queue.empty()) {
        const CTObject r = queue.front();
        queue.pop_front();
        for (int i = 1; i <= ctx.rank(); ++i) {
            CTObject next = ct_mutate(r, i, table);
            if (seen.emplace(next.canonical(), next).second) queue.push_back(std::move(next));
        }
    }
    std::vector<CTObject> out;
    for (auto& [key, r] : seen) out.push_back(std::move(r));
    return out;
}

std::optional<IndecObject> ext_complement(const TypeAContext& ctx, const CTObject& r, int i) {
    const IndecObject& current = r.summands[static_cast<std::size_t>(i - 1)];
    std::optional<IndecObject> found;
    for (const auto& x : cluster_indecomposables(ctx.quiver())) {
        if (x == current) continue;
        if (std::find(r.summands.begin(), r.summands.end(), x) != r.summands.end()) continue;
        if (ctx.ext(x, x) != 0) continue;
        bool compatible = true;
        for (std::size_t j = 0; j < r.summands.size() && compatible; ++j) {
            if (static_cast<int>(j) + 1 == i) continue;
            compatible = ctx.ext(x, r.summands[j]) == 0;
        }
        if (!compatible) continue;
        if (found) return std::nullopt;
        found = x;
    }
    return found;
}

bool verify_exchange(const TypeAContext& ctx, const CTObject& r, int i, const CCTable& table, std::string* diagnostics) {
    auto report = [&](const std::string& msg) {
        if (diagnostics) *diagnostics = msg;
        return false;
    };
    const auto complement = ext_complement(ctx, r, i);
    if (!complement) return report("no unique complement for " + r.canonical() + " at " + std::to_string(i));
    const std::size_t nvars = static_cast<std::size_t>(ctx.rank());
    auto value = [&](int k) -> const LaurentPoly& { return table.at(r.summands[static_cast<std::size_t>(k - 1)]); };
    const auto [out, in] = exchange_products(r.quiver, i, value, nvars);
    const LaurentPoly lhs = value(i) * table.at(*complement);
    const LaurentPoly rhs = out + in;
    if (!(lhs == rhs)) {
        return report("CC(" + r.summands[static_cast<std::size_t>(i - 1)].id() + ")*CC(" + complement->id() + ") = " +
                      lhs.to_string() + " but the exchange products give " + rhs.to_string());
    }
    if (diagnostics) diagnostics->clear();
    return true;
}

std::vector<ARMultiplicationCheck> verify_ar_multiplication(const TypeAContext& ctx) {
    std::vector<ARMultiplicationCheck> out;
    const ARQuiver& ar = ctx.ar();
    for (const auto& x : ar.vertices()) {
        if (ar.is_projective(x)) continue;
        const ARSequence s = ar_sequence(ar, x);
        const LaurentPoly lhs = cc(ctx, IndecObject::module(s.tau_x)) * cc(ctx, IndecObject::module(x));
        LaurentPoly rhs = cc_zero(ctx);
        std::string middle;
        for (const auto& y : s.middle) {
            rhs = rhs * cc(ctx, IndecObject::module(y));
            middle += (middle.empty() ? "CC(" : "*CC(") + y.to_string() + ")";
        }
        rhs = rhs + cc_zero(ctx);
        const std::string identity = "CC(" + s.tau_x.to_string() + ")*CC(" + x.to_string() + ") = " + middle + " + 1";
        if (!(lhs == rhs)) {
            fail(ErrorCode::IdentityFailed, identity + ": left " + lhs.to_string() + ", right " + rhs.to_string());
        }
        out.push_back({s.tau_x, s.middle, x, identity});
    }
    return out;
}

}  // namespace clustercat
