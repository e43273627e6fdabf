#pragma once

#include <optional>
#include <set>
#include <vector>

#include "aicrystal/gl_crystal.hpp"
#include "aicrystal/laurent.hpp"
#include "aicrystal/tableau.hpp"

namespace aicrystal {

// Rank of so_n: n/2 for n even, (n-1)/2 for n odd. Requires n >= 3.
int so_rank(int n);

// Integer so_n weight in the coordinates (nu_1, nu_3, ..., nu_{2m-1}).
struct SoWeight {
    std::vector<int> coords;
    bool operator==(const SoWeight&) const = default;
};

bool is_dominant_integral(const SoWeight& nu, int n);
SoWeight nu_of(const Partition& rho, int m);              // (rho_1, ..., rho_l, 0, ..., 0)
SoWeight nu_plus(const Partition& rho, int m);            // l(rho) = m only
SoWeight nu_minus(const Partition& rho, int m);

// AI-structure induced on a gl-crystal:
// deg_i(b) = eps_i(b) (+1 if phi_i(b) odd), B_i = E_i for phi_i even, else F_i.
// B_i b is absent exactly when deg_i(b) = 0.
int deg(const Word& w, int i);
int deg(const Tableau& t, int i);
std::optional<Word> btil(const Word& w, int i);
std::optional<Tableau> btil(const Tableau& t, int i);

std::vector<std::function<std::optional<Word>(const Word&)>> ai_generators_word(int n);
std::vector<std::function<std::optional<Tableau>(const Tableau&)>> ai_generators_tableau(int n);

// Element of (AI-crystal) (x) (gl-crystal) with both factors tableaux; the
// left factor carries its induced AI-structure.
struct AiTensorElement {
    Tableau left;
    Tableau right;
    auto operator<=>(const AiTensorElement&) const = default;
};

// The three-case tensor rule, keyed on the sign/parity of
// phi_i(right) - deg_i(left):
//   > deg case:    B_i (x) 1,      deg = deg_i(left) - phi_i(right) + eps_i(right)
//   even >= 0:     1 (x) E_i,      deg = eps_i(right)
//   odd  >= 0:     1 (x) F_i,      deg = eps_i(right) + 1
int deg(const AiTensorElement& b, int i);
std::optional<AiTensorElement> btil(const AiTensorElement& b, int i);

std::vector<std::function<std::optional<AiTensorElement>(const AiTensorElement&)>>
ai_generators_tensor(int n);

// AI-connected component (orbit under all B_i).
std::set<Word> ai_component(const Word& seed);
std::set<Tableau> ai_component(const Tableau& seed);
std::set<AiTensorElement> ai_component(const AiTensorElement& seed);

// Character of an AI-crystal: (1/2^m) sum over elements and sign choices of
// y_1^{±deg_1} y_3^{±deg_3} ... y_{2m-1}^{±deg_{2m-1}}, computed exactly as
// the product of (y^d + y^-d)/2 factors. Variables are indexed 0..m-1 and
// named y1, y3, ..., y_{2m-1} for display.
LaurentPolynomial ch_ai(const std::vector<Tableau>& elements, int n);
LaurentPolynomial ch_ai(const std::vector<Word>& elements, int n);

// Same value computed by the literal sign-sum; used as a consistency check.
LaurentPolynomial ch_ai_sign_sum(const std::vector<Tableau>& elements, int n);

// Singular element of degree rho: deg_{2i-1}(b) = rho_i for i in [1, m],
// deg_{2i}(b) = 0 for 2i < n, and deg_{2i+1} vanishes after applying the
// alternating string B_{2i-1}, B_{2i}, ... (odd index first) rho_{i+1} times.
// Annihilation anywhere in the string makes the element non-singular.
bool is_singular(const Tableau& b, const Partition& rho);

// The canonical singular AI-tableau of shape rho: first-column entries
// a_{2i-1} in {2i-1, 2i} fixed by the parity rule
// rho_i - [a_{2i-1} = 2i-1] - [a_{2i+1} = 2i+1] even (a_{2l+1} := 2l+2),
// all other columns constant 2i in row i. Requires l(rho) <= m.
Tableau t_rho(int n, const Partition& rho);

}  // namespace aicrystal
