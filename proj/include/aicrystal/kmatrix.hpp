#pragma once

#include <vector>

#include "aicrystal/tableau.hpp"

namespace aicrystal {

// Complement of a strictly increasing column in [1, n], sorted increasing.
// K^{(n-k)} o K^{(k)} = id.
std::vector<int> k_complement(const std::vector<int>& column, int n);

// K_1(T) = P(K(C_1) (x) C_2 (x) ... (x) C_{lm_1}): complement the first
// column, then restraighten through the P-symbol.
Tableau k1(const Tableau& t);

// The AI-condition: at most m rows, and the sorted complement of the first
// column is dominated entrywise by the second column.
bool is_ai_tableau(const Tableau& t);

// Minimal K_1-iterate that is an AI-tableau. Identity on AI-tableaux.
Tableau standardize(const Tableau& t);

// All AI-tableaux of the given shape over [1, n], in canonical order.
std::vector<Tableau> enumerate_ai_ssyt(int n, const Partition& shape);

}  // namespace aicrystal
