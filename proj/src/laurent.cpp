#include "aicrystal/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace aicrystal {

LaurentPolynomial LaurentPolynomial::constant(int arity, const Rational& c) {
    return monomial(std::vector<int>(static_cast<size_t>(arity), 0), c);
}

LaurentPolynomial LaurentPolynomial::monomial(const std::vector<int>& exponents, const Rational& c) {
    LaurentPolynomial p(static_cast<int>(exponents.size()));
    p.add_term(exponents, c);
    return p;
}

Rational LaurentPolynomial::coefficient(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(const std::vector<int>& exponents, const Rational& c) {
    if (static_cast<int>(exponents.size()) != arity_)
        throw std::invalid_argument("laurent: exponent arity mismatch");
    if (c == Rational(0)) return;
    auto [it, inserted] = terms_.emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second == Rational(0)) terms_.erase(it);
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
    if (arity_ != other.arity_) throw std::invalid_argument("laurent: arity mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
    if (arity_ != other.arity_) throw std::invalid_argument("laurent: arity mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& other) const {
    LaurentPolynomial out = *this;
    out += other;
    return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& other) const {
    LaurentPolynomial out = *this;
    out -= other;
    return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& other) const {
    if (arity_ != other.arity_) throw std::invalid_argument("laurent: arity mismatch");
    LaurentPolynomial out(arity_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_) {
            std::vector<int> e(e1);
            for (size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
            out.add_term(e, c1 * c2);
        }
    return out;
}

LaurentPolynomial LaurentPolynomial::scaled(const Rational& c) const {
    LaurentPolynomial out(arity_);
    if (c == Rational(0)) return out;
    for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
    return out;
}

Rational LaurentPolynomial::evaluate_at_one() const {
    Rational total(0);
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

bool LaurentPolynomial::is_integral() const {
    for (const auto& [e, c] : terms_)
        if (c.denominator() != 1) return false;
    return true;
}

std::optional<LaurentPolynomial> LaurentPolynomial::divided_by(const LaurentPolynomial& den) const {
    if (arity_ != den.arity_) throw std::invalid_argument("laurent: arity mismatch");
    if (den.is_zero()) return std::nullopt;
    LaurentPolynomial quotient(arity_);
    LaurentPolynomial rem = *this;
    // Leading-term elimination in lex order; terminates on exact quotients.
    size_t guard = 4 * (terms_.size() + den.terms_.size() + 16) * (den.terms_.size() + 16);
    const auto lead_den = *den.terms_.rbegin();
    while (!rem.is_zero()) {
        if (guard-- == 0) return std::nullopt;
        const auto lead_rem = *rem.terms_.rbegin();
        std::vector<int> diff = lead_rem.first;
        for (size_t k = 0; k < diff.size(); ++k) diff[k] -= lead_den.first[k];
        Rational c = lead_rem.second / lead_den.second;
        LaurentPolynomial piece = monomial(diff, c);
        quotient += piece;
        rem -= piece * den;
    }
    return quotient;
}

std::string LaurentPolynomial::to_string(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != arity_)
        throw std::invalid_argument("laurent: wrong number of variable names");
    if (terms_.empty()) return "0";

    auto group_of = [](const std::vector<int>& e) {
        for (size_t k = 0; k < e.size(); ++k)
            if (e[k] != 0) return static_cast<int>(k);
        return 0;
    };
    std::vector<std::pair<std::vector<int>, Rational>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [&](const auto& a, const auto& b) {
        int ga = group_of(a.first), gb = group_of(b.first);
        if (ga != gb) return ga < gb;
        return a.first > b.first;
    });

    std::string out;
    bool first = true;
    for (const auto& [e, c] : ordered) {
        Rational abs_c = c < Rational(0) ? -c : c;
        if (first) {
            if (c < Rational(0)) out += "-";
            first = false;
        } else {
            out += c < Rational(0) ? " - " : " + ";
        }
        std::string mono;
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[k];
            if (e[k] != 1) mono += "^" + std::to_string(e[k]);
        }
        std::string coeff;
        if (abs_c.denominator() == 1)
            coeff = std::to_string(abs_c.numerator());
        else
            coeff = std::to_string(abs_c.numerator()) + "/" + std::to_string(abs_c.denominator());
        if (mono.empty())
            out += coeff;
        else if (coeff == "1")
            out += mono;
        else
            out += coeff + "*" + mono;
    }
    return out;
}

std::vector<std::string> gl_variable_names(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

std::vector<std::string> so_variable_names(int m) {
    std::vector<std::string> names;
    for (int i = 1; i <= m; ++i) names.push_back("y" + std::to_string(2 * i - 1));
    return names;
}

}  // namespace aicrystal
