#include "aicrystal/kmatrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "aicrystal/ai_crystal.hpp"
#include "aicrystal/enumerate.hpp"
#include "aicrystal/insertion.hpp"

namespace aicrystal {

std::vector<int> k_complement(const std::vector<int>& column, int n) {
    std::vector<bool> present(static_cast<size_t>(n) + 1, false);
    int prev = 0;
    for (int x : column) {
        if (x < 1 || x > n || x <= prev)
            throw std::invalid_argument("k_complement: not a strictly increasing column in [1,n]");
        present[static_cast<size_t>(x)] = true;
        prev = x;
    }
    std::vector<int> complement;
    for (int x = 1; x <= n; ++x)
        if (!present[static_cast<size_t>(x)]) complement.push_back(x);
    return complement;
}

Tableau k1(const Tableau& t) {
    if (!t.is_semistandard()) throw std::invalid_argument("k1: tableau not semistandard");
    int n = t.n();
    so_rank(n);  // enforces n >= 3
    std::vector<int> letters;
    auto append_reversed = [&letters](const std::vector<int>& col) {
        letters.insert(letters.end(), col.rbegin(), col.rend());
    };
    append_reversed(k_complement(t.column(1), n));
    for (int j = 2; j <= t.column_count(); ++j) append_reversed(t.column(j));
    return p_symbol(Word(n, std::move(letters)));
}

bool is_ai_tableau(const Tableau& t) {
    if (!t.is_semistandard()) throw std::invalid_argument("is_ai_tableau: not semistandard");
    int m = so_rank(t.n());
    if (t.column_length(1) > m) return false;
    auto complement = k_complement(t.column(1), t.n());
    int d2 = t.column_length(2);
    for (int i = 1; i <= d2; ++i)
        if (complement[static_cast<size_t>(i) - 1] > t.at(i, 2)) return false;
    return true;
}

Tableau standardize(const Tableau& t) {
    Tableau cur = t;
    int cap = t.size() + t.n();
    for (int iter = 0; iter <= cap; ++iter) {
        if (is_ai_tableau(cur)) return cur;
        cur = k1(cur);
    }
    throw std::logic_error("standardize: iteration cap exceeded");
}

std::vector<Tableau> enumerate_ai_ssyt(int n, const Partition& shape) {
    std::vector<Tableau> out;
    if (shape.length() > so_rank(n)) return out;
    for (const Tableau& t : enumerate_ssyt(n, shape))
        if (is_ai_tableau(t)) out.push_back(t);
    return out;
}

}  // namespace aicrystal
