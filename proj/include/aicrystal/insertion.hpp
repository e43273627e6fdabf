#pragma once

#include <utility>
#include <vector>

#include "aicrystal/tableau.hpp"

namespace aicrystal {

// Schensted row insertion (T <- l). Requires T semistandard and l in [1, n].
Tableau row_insert(const Tableau& t, int letter);

// Inverse of row insertion starting from the given removable outer corner
// (1-based row, col). Returns (T', l) with row_insert(T', l) == t.
std::pair<Tableau, int> reverse_insert(const Tableau& t, int row, int col);

struct RsPair {
    Tableau p;  // semistandard, alphabet [1, n]
    Tableau q;  // standard, alphabet [1, |w|]
    auto operator<=>(const RsPair&) const = default;
};

// The Robinson-Schensted correspondence w -> (P(w), Q(w)).
RsPair rs(const Word& w);

// P-symbol of a word.
Tableau p_symbol(const Word& w);

// P-symbol of a tensor product of tableaux: P(CR(T) * CR(S)).
Tableau p_symbol_tensor(const Tableau& t, const Tableau& s);

}  // namespace aicrystal
