#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace clustercat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exponent vector of a Laurent monomial; entries may be negative.
using ExpVec = std::vector<int>;

/// Graded-lexicographic *descending*: the first element of a map ordered by
/// this comparator is the leading term.
struct GradLexDesc {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Sparse multivariate Laurent polynomial with integer coefficients.
///
/// Terms are kept in a map keyed by exponent vector in graded-lex descending
/// order; zero coefficients are never stored, so equality is structural.
class LaurentPoly {
public:
    using TermMap = std::map<ExpVec, BigInt, GradLexDesc>;

    explicit LaurentPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static LaurentPoly constant(std::size_t nvars, const BigInt& c);
    /// x_i for 1 <= i <= nvars.
    static LaurentPoly variable(std::size_t nvars, std::size_t i);
    static LaurentPoly monomial(ExpVec exps, const BigInt& c = 1);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Adds c*x^e in place; drops the term if the coefficient cancels.
    void add_term(const ExpVec& e, const BigInt& c);

    const ExpVec& leading_exponent() const { return terms_.begin()->first; }
    const BigInt& leading_coefficient() const { return terms_.begin()->second; }

    /// Coefficient of x^e (zero when absent).
    BigInt coefficient(const ExpVec& e) const;

    /// Componentwise minimum / maximum exponent over all terms (zero vector for 0).
    ExpVec min_exponents() const;
    ExpVec max_exponents() const;

    bool is_monomial() const { return terms_.size() == 1; }
    bool all_coefficients_nonnegative() const;

    LaurentPoly pow(unsigned k) const;
    LaurentPoly shifted(const ExpVec& by) const;  // multiply by x^by

    /// Canonical string: "x1^-1*x4 + 2*x2"; "0" for the zero polynomial.
    std::string to_string(char var = 'x') const;
    /// Display form with a monomial common denominator: "(x1 + x3)/x2".
    std::string to_fraction_string(char var = 'x') const;

    /// Parses the canonical grammar (term order is not required to be
    /// canonical). nvars == 0 infers the count from the largest variable index.
    static LaurentPoly parse(std::string_view text, std::size_t nvars = 0, char var = 'x');

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    std::size_t nvars_;
    TermMap terms_;
};

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_neg(const LaurentPoly& a);

/// Exact quotient num/den in Z[x^{±1}]. Throws NotDivisible when the quotient
/// is not a Laurent polynomial and DivisionByZero for den == 0.
LaurentPoly lp_exact_div(const LaurentPoly& num, const LaurentPoly& den);

inline LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return lp_add(a, b); }
inline LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return lp_sub(a, b); }
inline LaurentPoly operator-(const LaurentPoly& a) { return lp_neg(a); }
inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return lp_mul(a, b); }

/// Polynomial in y_1..y_n with non-negative exponents (F-polynomials, y^e).
class IntPolyY {
public:
    explicit IntPolyY(std::size_t nvars = 0) : poly_(nvars) {}
    explicit IntPolyY(LaurentPoly p);

    static IntPolyY monomial(ExpVec e, const BigInt& c = 1);
    static IntPolyY one(std::size_t nvars) { return IntPolyY(LaurentPoly::constant(nvars, 1)); }

    std::size_t nvars() const { return poly_.nvars(); }
    const LaurentPoly& as_laurent() const { return poly_; }
    BigInt coefficient(const ExpVec& e) const { return poly_.coefficient(e); }

    std::string to_string() const { return poly_.to_string('y'); }
    static IntPolyY parse(std::string_view text, std::size_t nvars = 0);

    friend IntPolyY operator+(const IntPolyY& a, const IntPolyY& b) { return IntPolyY(a.poly_ + b.poly_); }
    friend IntPolyY operator*(const IntPolyY& a, const IntPolyY& b) { return IntPolyY(a.poly_ * b.poly_); }
    friend bool operator==(const IntPolyY& a, const IntPolyY& b) { return a.poly_ == b.poly_; }

private:
    LaurentPoly poly_;
};

/// Evaluates f at y_i -> subs[i].
LaurentPoly lp_substitute(const IntPolyY& f, std::span<const LaurentPoly> subs);

/// Univariate polynomial in q with rational coefficients, ascending degree.
class UniPolyQ {
public:
    UniPolyQ() = default;
    explicit UniPolyQ(std::vector<Rational> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational operator()(const Rational& q) const;
    bool has_integer_coefficients() const;
    std::string to_string() const;

    friend bool operator==(const UniPolyQ&, const UniPolyQ&) = default;

private:
    std::vector<Rational> coeffs_;
};

struct CountPoint {
    BigInt q;
    BigInt count;
};

/// Interpolates through the first degree_bound+1 points; any further points
/// must lie on the result (InconsistentExtraPoint) and the coefficients must be
/// integers (NonIntegerCoefficients).
UniPolyQ interpolate(std::span<const CountPoint> points, int degree_bound);

}  // namespace clustercat
