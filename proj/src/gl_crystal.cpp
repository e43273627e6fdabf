#include "aicrystal/gl_crystal.hpp"

#include <stdexcept>

namespace aicrystal {

namespace {

struct Signature {
    std::vector<int> minus_positions;  // surviving letters equal to i, ascending
    std::vector<int> plus_positions;   // surviving letters equal to i+1, ascending
};

Signature signature(const Word& w, int i) {
    if (i < 1 || i >= w.n()) throw std::invalid_argument("operator index out of range");
    Signature s;
    for (int k = 1; k <= w.length(); ++k) {
        int l = w.letter(k);
        if (l == i + 1) {
            s.plus_positions.push_back(k);
        } else if (l == i) {
            if (!s.plus_positions.empty())
                s.plus_positions.pop_back();  // cancel "+-"
            else
                s.minus_positions.push_back(k);
        }
    }
    return s;
}

Word with_letter(const Word& w, int pos, int letter) {
    auto letters = w.letters();
    letters[static_cast<size_t>(pos) - 1] = letter;
    return Word(w.n(), std::move(letters));
}

}  // namespace

std::optional<Word> etil(const Word& w, int i) {
    Signature s = signature(w, i);
    if (s.plus_positions.empty()) return std::nullopt;
    return with_letter(w, s.plus_positions.front(), i);
}

std::optional<Word> ftil(const Word& w, int i) {
    Signature s = signature(w, i);
    if (s.minus_positions.empty()) return std::nullopt;
    return with_letter(w, s.minus_positions.back(), i + 1);
}

int eps(const Word& w, int i) { return static_cast<int>(signature(w, i).plus_positions.size()); }

int phi(const Word& w, int i) { return static_cast<int>(signature(w, i).minus_positions.size()); }

std::optional<Tableau> etil(const Tableau& t, int i) {
    auto w = etil(column_reading(t), i);
    if (!w) return std::nullopt;
    return p_symbol(*w);
}

std::optional<Tableau> ftil(const Tableau& t, int i) {
    auto w = ftil(column_reading(t), i);
    if (!w) return std::nullopt;
    return p_symbol(*w);
}

int eps(const Tableau& t, int i) { return eps(column_reading(t), i); }

int phi(const Tableau& t, int i) { return phi(column_reading(t), i); }

std::vector<std::function<std::optional<Word>(const Word&)>> gl_generators_word(int n) {
    std::vector<std::function<std::optional<Word>(const Word&)>> gens;
    for (int i = 1; i < n; ++i) {
        gens.push_back([i](const Word& w) { return etil(w, i); });
        gens.push_back([i](const Word& w) { return ftil(w, i); });
    }
    return gens;
}

std::vector<std::function<std::optional<Tableau>(const Tableau&)>> gl_generators_tableau(int n) {
    std::vector<std::function<std::optional<Tableau>(const Tableau&)>> gens;
    for (int i = 1; i < n; ++i) {
        gens.push_back([i](const Tableau& t) { return etil(t, i); });
        gens.push_back([i](const Tableau& t) { return ftil(t, i); });
    }
    return gens;
}

namespace {

template <class Range>
LaurentPolynomial ch_gl_impl(const Range& elements, int n) {
    LaurentPolynomial total(n);
    for (const auto& b : elements) total.add_term(weight(b), Rational(1));
    return total;
}

}  // namespace

LaurentPolynomial ch_gl(const std::vector<Tableau>& elements, int n) {
    return ch_gl_impl(elements, n);
}

LaurentPolynomial ch_gl(const std::vector<Word>& elements, int n) {
    return ch_gl_impl(elements, n);
}

}  // namespace aicrystal
