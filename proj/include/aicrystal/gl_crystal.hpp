#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "aicrystal/insertion.hpp"
#include "aicrystal/laurent.hpp"
#include "aicrystal/tableau.hpp"

namespace aicrystal {

// Kashiwara operators on words, by the signature rule for the tensor product
// convention F_i(b1 (x) b2) = F_i b1 (x) b2 iff eps_i(b1) >= phi_i(b2).
// Equivalently: mark letters i+1 as '+', letters i as '-', cancel "+-" pairs;
// E_i lowers the leftmost surviving '+', F_i raises the rightmost surviving
// '-'. An absent result models annihilation.
std::optional<Word> etil(const Word& w, int i);
std::optional<Word> ftil(const Word& w, int i);
int eps(const Word& w, int i);
int phi(const Word& w, int i);

// Operators on semistandard tableaux through the column reading:
// E_i T = P(E_i CR(T)); the result stays in SST_n(sh(T)).
std::optional<Tableau> etil(const Tableau& t, int i);
std::optional<Tableau> ftil(const Tableau& t, int i);
int eps(const Tableau& t, int i);
int phi(const Tableau& t, int i);

// Orbit of seed under partial generator maps, as a canonical sorted set.
template <class T>
std::set<T> connected_component(
    const T& seed, const std::vector<std::function<std::optional<T>(const T&)>>& generators) {
    std::set<T> seen{seed};
    std::vector<T> frontier{seed};
    while (!frontier.empty()) {
        std::vector<T> next;
        for (const T& b : frontier) {
            for (const auto& gen : generators) {
                if (auto img = gen(b); img && !seen.count(*img)) {
                    seen.insert(*img);
                    next.push_back(*img);
                }
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

// Generator sets for the full crystal on words/tableaux: all E_i and F_i,
// i in [1, n-1].
std::vector<std::function<std::optional<Word>(const Word&)>> gl_generators_word(int n);
std::vector<std::function<std::optional<Tableau>(const Tableau&)>> gl_generators_tableau(int n);

// Character: sum of x^{wt(b)} over the given elements, in n variables.
LaurentPolynomial ch_gl(const std::vector<Tableau>& elements, int n);
LaurentPolynomial ch_gl(const std::vector<Word>& elements, int n);

}  // namespace aicrystal
