#include "clustercat/exactalg.hpp"

#include "clustercat/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>

namespace clustercat {

namespace {

void require_same_nvars(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars() != b.nvars()) {
        fail(ErrorCode::VariableCountMismatch,
             std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()) + " variables");
    }
}

ExpVec add_exps(const ExpVec& a, const ExpVec& b) {
    ExpVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

long long total_degree(const ExpVec& e) { return std::accumulate(e.begin(), e.end(), 0LL); }

std::string monomial_string(const ExpVec& e, char var) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += var;
        out += std::to_string(i + 1);
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

}  // namespace

bool GradLexDesc::operator()(const ExpVec& a, const ExpVec& b) const {
    const long long da = total_degree(a);
    const long long db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, const BigInt& c) {
    LaurentPoly p(nvars);
    p.add_term(ExpVec(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i) {
    if (i < 1 || i > nvars) {
        fail(ErrorCode::VertexOutOfRange, "variable x" + std::to_string(i) + " with " + std::to_string(nvars) + " variables");
    }
    ExpVec e(nvars, 0);
    e[i - 1] = 1;
    return monomial(std::move(e));
}

LaurentPoly LaurentPoly::monomial(ExpVec exps, const BigInt& c) {
    LaurentPoly p(exps.size());
    p.add_term(exps, c);
    return p;
}

void LaurentPoly::add_term(const ExpVec& e, const BigInt& c) {
    if (e.size() != nvars_) {
        fail(ErrorCode::VariableCountMismatch, "exponent vector of length " + std::to_string(e.size()));
    }
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

BigInt LaurentPoly::coefficient(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

ExpVec LaurentPoly::min_exponents() const {
    if (terms_.empty()) return ExpVec(nvars_, 0);
    ExpVec out = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < nvars_; ++i) out[i] = std::min(out[i], e[i]);
    }
    return out;
}

ExpVec LaurentPoly::max_exponents() const {
    if (terms_.empty()) return ExpVec(nvars_, 0);
    ExpVec out = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < nvars_; ++i) out[i] = std::max(out[i], e[i]);
    }
    return out;
}

bool LaurentPoly::all_coefficients_nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly result = constant(nvars_, 1);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::shifted(const ExpVec& by) const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(add_exps(e, by), c);
    return out;
}

std::string LaurentPoly::to_string(char var) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        const BigInt mag = negative ? BigInt(-c) : c;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const std::string mono = monomial_string(e, var);
        if (mono.empty()) {
            out += mag.str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.str() + "*" + mono;
        }
    }
    return out;
}

std::string LaurentPoly::to_fraction_string(char var) const {
    const ExpVec mins = min_exponents();
    ExpVec den(nvars_, 0);
    bool trivial = true;
    for (std::size_t i = 0; i < nvars_; ++i) {
        if (mins[i] < 0) {
            den[i] = -mins[i];
            trivial = false;
        }
    }
    if (trivial) return to_string(var);
    const LaurentPoly num = shifted(den);
    std::string num_str = num.to_string(var);
    if (num.term_count() > 1) num_str = "(" + num_str + ")";
    const std::string den_str = monomial_string(den, var);
    const bool multi = std::count_if(den.begin(), den.end(), [](int d) { return d != 0; }) > 1;
    return num_str + "/" + (multi ? "(" + den_str + ")" : den_str);
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
    int value = 0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    if (!s.empty() && *begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || begin == end) {
        fail(ErrorCode::ParseError, "bad integer '" + std::string(s) + "' in '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, std::size_t nvars, char var) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    if (s.empty()) fail(ErrorCode::ParseError, "empty polynomial");

    struct RawTerm {
        BigInt coeff;
        std::vector<std::pair<std::size_t, int>> factors;
    };
    std::vector<RawTerm> raw;
    std::size_t max_index = 0;

    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (pos != 0) {
            fail(ErrorCode::ParseError, "expected sign at offset " + std::to_string(pos) + " in '" + s + "'");
        }
        std::size_t end = pos;
        while (end < s.size() && !((s[end] == '+' || s[end] == '-') && end > pos && s[end - 1] != '^')) ++end;
        const std::string_view term(s.data() + pos, end - pos);
        if (term.empty()) fail(ErrorCode::ParseError, "empty term in '" + s + "'");

        RawTerm rt{negative ? BigInt(-1) : BigInt(1), {}};
        std::size_t fpos = 0;
        while (fpos <= term.size()) {
            std::size_t fend = term.find('*', fpos);
            if (fend == std::string_view::npos) fend = term.size();
            const std::string_view factor = term.substr(fpos, fend - fpos);
            if (factor.empty()) fail(ErrorCode::ParseError, "empty factor in '" + s + "'");
            if (factor[0] == var) {
                const std::size_t caret = factor.find('^');
                const std::string_view idx_str = factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1);
                // A bare variable letter stands for index 1 ("1 + y").
                const int idx = idx_str.empty() ? 1 : parse_int(idx_str, s);
                if (idx < 1) fail(ErrorCode::ParseError, "variable index must be >= 1 in '" + s + "'");
                const int exp = caret == std::string_view::npos ? 1 : parse_int(factor.substr(caret + 1), s);
                rt.factors.emplace_back(static_cast<std::size_t>(idx), exp);
                max_index = std::max(max_index, static_cast<std::size_t>(idx));
            } else if (std::all_of(factor.begin(), factor.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
                rt.coeff *= BigInt(std::string(factor));
            } else {
                fail(ErrorCode::ParseError, "bad factor '" + std::string(factor) + "' in '" + s + "'");
            }
            fpos = fend + 1;
        }
        raw.push_back(std::move(rt));
        pos = end;
    }

    if (nvars == 0) nvars = max_index;
    if (max_index > nvars) {
        fail(ErrorCode::VariableCountMismatch, "variable index " + std::to_string(max_index) + " exceeds " + std::to_string(nvars));
    }
    LaurentPoly out(nvars);
    for (const auto& rt : raw) {
        ExpVec e(nvars, 0);
        for (const auto& [idx, exp] : rt.factors) e[idx - 1] += exp;
        out.add_term(e, rt.coeff);
    }
    return out;
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_nvars(a, b);
    LaurentPoly out = a;
    for (const auto& [e, c] : b.terms()) out.add_term(e, c);
    return out;
}

LaurentPoly lp_neg(const LaurentPoly& a) {
    LaurentPoly out(a.nvars());
    for (const auto& [e, c] : a.terms()) out.add_term(e, -c);
    return out;
}

LaurentPoly lp_sub(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_nvars(a, b);
    LaurentPoly out = a;
    for (const auto& [e, c] : b.terms()) out.add_term(e, -c);
    return out;
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_nvars(a, b);
    LaurentPoly out(a.nvars());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) out.add_term(add_exps(ea, eb), ca * cb);
    }
    return out;
}

LaurentPoly lp_exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    require_same_nvars(num, den);
    if (den.is_zero()) fail(ErrorCode::DivisionByZero, "division by the zero polynomial");
    if (num.is_zero()) return LaurentPoly(num.nvars());

    // Strip monomial factors so both sides are honest polynomials; the
    // quotient is Laurent iff the stripped divisor divides the stripped
    // dividend in Z[x], and grlex leading-term elimination terminates there.
    const std::size_t n = num.nvars();
    const ExpVec den_min = den.min_exponents();
    const ExpVec num_min = num.min_exponents();
    ExpVec neg_den(n), neg_num(n), shift(n);
    for (std::size_t i = 0; i < n; ++i) {
        neg_den[i] = -den_min[i];
        neg_num[i] = -num_min[i];
        shift[i] = num_min[i] - den_min[i];
    }
    const LaurentPoly d0 = den.shifted(neg_den);
    LaurentPoly rem = num.shifted(neg_num);
    LaurentPoly quot(n);

    const ExpVec& lead_e = d0.leading_exponent();
    const BigInt& lead_c = d0.leading_coefficient();
    while (!rem.is_zero()) {
        const ExpVec& re = rem.leading_exponent();
        ExpVec diff(n);
        for (std::size_t i = 0; i < n; ++i) {
            diff[i] = re[i] - lead_e[i];
            if (diff[i] < 0) {
                fail(ErrorCode::NotDivisible, "(" + num.to_string() + ") / (" + den.to_string() + ")");
            }
        }
        const BigInt& rc = rem.leading_coefficient();
        if (rc % lead_c != 0) {
            fail(ErrorCode::NotDivisible, "(" + num.to_string() + ") / (" + den.to_string() + ")");
        }
        const LaurentPoly t = LaurentPoly::monomial(diff, rc / lead_c);
        quot.add_term(diff, rc / lead_c);
        rem = rem - t * d0;
    }
    return quot.shifted(shift);
}

IntPolyY::IntPolyY(LaurentPoly p) : poly_(std::move(p)) {
    for (const auto& [e, c] : poly_.terms()) {
        if (std::any_of(e.begin(), e.end(), [](int v) { return v < 0; })) {
            fail(ErrorCode::InvalidInput, "negative exponent in y-polynomial " + poly_.to_string('y'));
        }
    }
}

IntPolyY IntPolyY::monomial(ExpVec e, const BigInt& c) { return IntPolyY(LaurentPoly::monomial(std::move(e), c)); }

IntPolyY IntPolyY::parse(std::string_view text, std::size_t nvars) { return IntPolyY(LaurentPoly::parse(text, nvars, 'y')); }

LaurentPoly lp_substitute(const IntPolyY& f, std::span<const LaurentPoly> subs) {
    if (subs.size() != f.nvars()) {
        fail(ErrorCode::LengthMismatch, std::to_string(subs.size()) + " substitutions for " + std::to_string(f.nvars()) + " variables");
    }
    if (subs.empty()) return f.as_laurent();
    const std::size_t target_nvars = subs.front().nvars();
    for (const auto& s : subs) {
        if (s.nvars() != target_nvars) fail(ErrorCode::VariableCountMismatch, "substitutions disagree on variable count");
    }
    std::map<std::pair<std::size_t, int>, LaurentPoly> powers;
    auto power = [&](std::size_t i, int e) -> const LaurentPoly& {
        auto key = std::make_pair(i, e);
        auto it = powers.find(key);
        if (it == powers.end()) it = powers.emplace(key, subs[i].pow(static_cast<unsigned>(e))).first;
        return it->second;
    };
    LaurentPoly out(target_nvars);
    for (const auto& [e, c] : f.as_laurent().terms()) {
        LaurentPoly term = LaurentPoly::constant(target_nvars, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) term = term * power(i, e[i]);
        }
        out = out + term;
    }
    return out;
}

UniPolyQ::UniPolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPolyQ::operator()(const Rational& q) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

bool UniPolyQ::has_integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return boost::multiprecision::denominator(c) == 1; });
}

std::string UniPolyQ::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = coeffs_[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const std::string mono = d == 0 ? "" : (d == 1 ? "q" : "q^" + std::to_string(d));
        if (mono.empty()) {
            out += mag.str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.str() + "*" + mono;
        }
    }
    return out;
}

UniPolyQ interpolate(std::span<const CountPoint> points, int degree_bound) {
    if (degree_bound < 0) fail(ErrorCode::InvalidInput, "negative degree bound");
    const auto needed = static_cast<std::size_t>(degree_bound) + 1;
    std::set<BigInt> distinct;
    for (const auto& p : points) distinct.insert(p.q);
    if (distinct.size() != points.size()) fail(ErrorCode::InvalidInput, "interpolation nodes must be distinct");
    if (points.size() < needed) {
        fail(ErrorCode::InsufficientPoints,
             std::to_string(points.size()) + " points for degree bound " + std::to_string(degree_bound));
    }

    // Newton divided differences over Q, then expand to the monomial basis.
    std::vector<Rational> xs(needed), dd(needed);
    for (std::size_t i = 0; i < needed; ++i) {
        xs[i] = Rational(points[i].q);
        dd[i] = Rational(points[i].count);
    }
    for (std::size_t level = 1; level < needed; ++level) {
        for (std::size_t i = needed - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    std::vector<Rational> coeffs(needed, Rational(0));
    for (std::size_t k = needed; k-- > 0;) {
        // coeffs <- coeffs * (q - xs[k]) + dd[k]
        std::vector<Rational> next(needed, Rational(0));
        for (std::size_t d = 0; d + 1 < needed; ++d) {
            next[d + 1] += coeffs[d];
            next[d] -= coeffs[d] * xs[k];
        }
        next[0] += dd[k];
        coeffs = std::move(next);
    }
    UniPolyQ poly(std::move(coeffs));

    for (std::size_t i = needed; i < points.size(); ++i) {
        if (poly(Rational(points[i].q)) != Rational(points[i].count)) {
            fail(ErrorCode::InconsistentExtraPoint,
                 "point (" + points[i].q.str() + ", " + points[i].count.str() + ") is off " + poly.to_string());
        }
    }
    if (!poly.has_integer_coefficients()) fail(ErrorCode::NonIntegerCoefficients, poly.to_string());
    return poly;
}

}  // namespace clustercat
