#pragma once

#include <vector>

#include "aicrystal/tableau.hpp"

namespace aicrystal {

// All semistandard Young tableaux of the given shape over [1, n], in
// ascending lexicographic order of the row word. Empty when l(shape) > n.
std::vector<Tableau> enumerate_ssyt(int n, const Partition& shape);

// Standard tableaux of the given shape in alphabet [1, |shape|].
std::vector<Tableau> enumerate_standard(const Partition& shape);

// All words of the given length over [1, n], in lexicographic order.
std::vector<Word> enumerate_words(int n, int length);

}  // namespace aicrystal
