#pragma once

#include <boost/rational.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace aicrystal {

using Rational = boost::rational<long long>;

// Exact multivariate Laurent polynomial with rational coefficients.
// Terms are keyed by exponent vectors of fixed arity; zero coefficients are
// never stored.
class LaurentPolynomial {
public:
    explicit LaurentPolynomial(int arity = 0) : arity_(arity) {}

    static LaurentPolynomial zero(int arity) { return LaurentPolynomial(arity); }
    static LaurentPolynomial constant(int arity, const Rational& c);
    static LaurentPolynomial monomial(const std::vector<int>& exponents, const Rational& c);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    Rational coefficient(const std::vector<int>& exponents) const;
    void add_term(const std::vector<int>& exponents, const Rational& c);

    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    LaurentPolynomial& operator-=(const LaurentPolynomial& other);
    LaurentPolynomial operator+(const LaurentPolynomial& other) const;
    LaurentPolynomial operator-(const LaurentPolynomial& other) const;
    LaurentPolynomial operator*(const LaurentPolynomial& other) const;
    LaurentPolynomial scaled(const Rational& c) const;

    bool operator==(const LaurentPolynomial& other) const = default;

    // Sum of all coefficients (evaluation at 1, ..., 1).
    Rational evaluate_at_one() const;

    bool is_integral() const;

    // Exact quotient, or nullopt when *this is not a multiple of den.
    std::optional<LaurentPolynomial> divided_by(const LaurentPolynomial& den) const;

    // Renders with the given variable names. Terms are grouped by the first
    // variable carrying a nonzero exponent (constants join the leading group)
    // and sorted lex-descending within a group, e.g. "y1 + 1 + y1^-1".
    std::string to_string(const std::vector<std::string>& names) const;

private:
    int arity_ = 0;
    std::map<std::vector<int>, Rational> terms_;
};

std::vector<std::string> gl_variable_names(int n);   // x1, ..., xn
std::vector<std::string> so_variable_names(int m);   // y1, y3, ..., y_{2m-1}

}  // namespace aicrystal
