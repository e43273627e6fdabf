#include "aicrystal/ai_crystal.hpp"

#include <cstdlib>
#include <stdexcept>

namespace aicrystal {

int so_rank(int n) {
    if (n < 3) throw std::invalid_argument("so_rank: n must be at least 3");
    return n % 2 == 0 ? n / 2 : (n - 1) / 2;
}

bool is_dominant_integral(const SoWeight& nu, int n) {
    int m = so_rank(n);
    if (static_cast<int>(nu.coords.size()) != m) return false;
    for (int k = 0; k + 1 < m; ++k) {
        int next = (n % 2 == 0 && k + 2 == m) ? std::abs(nu.coords.back()) : nu.coords[k + 1];
        if (nu.coords[k] < next) return false;
    }
    if (n % 2 == 1 && m >= 1 && nu.coords.back() < 0) return false;
    return true;
}

SoWeight nu_of(const Partition& rho, int m) {
    std::vector<int> coords;
    for (int i = 1; i <= m; ++i) coords.push_back(rho.part(i));
    return {coords};
}

SoWeight nu_plus(const Partition& rho, int m) { return nu_of(rho, m); }

SoWeight nu_minus(const Partition& rho, int m) {
    SoWeight nu = nu_of(rho, m);
    nu.coords.back() = -nu.coords.back();
    return nu;
}

namespace {

template <class T>
int deg_impl(const T& b, int i) {
    int e = eps(b, i), f = phi(b, i);
    return f % 2 == 0 ? e : e + 1;
}

template <class T>
auto btil_impl(const T& b, int i) {
    return phi(b, i) % 2 == 0 ? etil(b, i) : ftil(b, i);
}

}  // namespace

int deg(const Word& w, int i) { return deg_impl(w, i); }
int deg(const Tableau& t, int i) { return deg_impl(t, i); }
std::optional<Word> btil(const Word& w, int i) { return btil_impl(w, i); }
std::optional<Tableau> btil(const Tableau& t, int i) { return btil_impl(t, i); }

std::vector<std::function<std::optional<Word>(const Word&)>> ai_generators_word(int n) {
    std::vector<std::function<std::optional<Word>(const Word&)>> gens;
    for (int i = 1; i < n; ++i) gens.push_back([i](const Word& w) { return btil(w, i); });
    return gens;
}

std::vector<std::function<std::optional<Tableau>(const Tableau&)>> ai_generators_tableau(int n) {
    std::vector<std::function<std::optional<Tableau>(const Tableau&)>> gens;
    for (int i = 1; i < n; ++i) gens.push_back([i](const Tableau& t) { return btil(t, i); });
    return gens;
}

int deg(const AiTensorElement& b, int i) {
    int d1 = deg(b.left, i);
    int e2 = eps(b.right, i), f2 = phi(b.right, i);
    if (d1 > f2) return d1 - f2 + e2;
    return (f2 - d1) % 2 == 0 ? e2 : e2 + 1;
}

std::optional<AiTensorElement> btil(const AiTensorElement& b, int i) {
    int d1 = deg(b.left, i);
    int f2 = phi(b.right, i);
    if (d1 > f2) {
        auto left = btil(b.left, i);
        if (!left) return std::nullopt;
        return AiTensorElement{*left, b.right};
    }
    auto right = (f2 - d1) % 2 == 0 ? etil(b.right, i) : ftil(b.right, i);
    if (!right) return std::nullopt;
    return AiTensorElement{b.left, *right};
}

std::vector<std::function<std::optional<AiTensorElement>(const AiTensorElement&)>>
ai_generators_tensor(int n) {
    std::vector<std::function<std::optional<AiTensorElement>(const AiTensorElement&)>> gens;
    for (int i = 1; i < n; ++i)
        gens.push_back([i](const AiTensorElement& b) { return btil(b, i); });
    return gens;
}

std::set<Word> ai_component(const Word& seed) {
    return connected_component(seed, ai_generators_word(seed.n()));
}

std::set<Tableau> ai_component(const Tableau& seed) {
    return connected_component(seed, ai_generators_tableau(seed.n()));
}

std::set<AiTensorElement> ai_component(const AiTensorElement& seed) {
    return connected_component(seed, ai_generators_tensor(seed.left.n()));
}

namespace {

template <class T>
LaurentPolynomial ch_ai_impl(const std::vector<T>& elements, int n) {
    int m = so_rank(n);
    LaurentPolynomial total(m);
    const Rational half(1, 2);
    for (const T& b : elements) {
        LaurentPolynomial factor_product = LaurentPolynomial::constant(m, Rational(1));
        for (int k = 1; k <= m; ++k) {
            int d = deg(b, 2 * k - 1);
            std::vector<int> e(static_cast<size_t>(m), 0);
            LaurentPolynomial factor(m);
            e[static_cast<size_t>(k) - 1] = d;
            factor.add_term(e, half);
            e[static_cast<size_t>(k) - 1] = -d;
            factor.add_term(e, half);  // d = 0 collapses to the constant 1
            factor_product = factor_product * factor;
        }
        total += factor_product;
    }
    return total;
}

}  // namespace

LaurentPolynomial ch_ai(const std::vector<Tableau>& elements, int n) {
    return ch_ai_impl(elements, n);
}

LaurentPolynomial ch_ai(const std::vector<Word>& elements, int n) {
    return ch_ai_impl(elements, n);
}

LaurentPolynomial ch_ai_sign_sum(const std::vector<Tableau>& elements, int n) {
    int m = so_rank(n);
    LaurentPolynomial total(m);
    Rational scale(1, 1LL << m);
    for (const Tableau& b : elements) {
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            std::vector<int> e;
            for (int k = 1; k <= m; ++k) {
                int d = deg(b, 2 * k - 1);
                e.push_back((mask >> (k - 1)) & 1 ? -d : d);
            }
            total.add_term(e, scale);
        }
    }
    return total;
}

bool is_singular(const Tableau& b, const Partition& rho) {
    int n = b.n();
    int m = so_rank(n);
    if (rho.length() > m) throw std::invalid_argument("is_singular: degree has too many parts");
    for (int i = 1; i <= m; ++i)
        if (deg(b, 2 * i - 1) != rho.part(i)) return false;
    for (int i = 1; i <= m && 2 * i < n; ++i)
        if (deg(b, 2 * i) != 0) return false;
    for (int i = 1; i <= m && 2 * i + 1 < n; ++i) {
        Tableau cur = b;
        for (int rep = 0; rep < rho.part(i + 1); ++rep) {
            // The alternating string applies the odd-index operator first.
            auto first = btil(cur, 2 * i - 1);
            if (!first) return false;
            auto second = btil(*first, 2 * i);
            if (!second) return false;
            cur = *second;
        }
        if (deg(cur, 2 * i + 1) != 0) return false;
    }
    return true;
}

Tableau t_rho(int n, const Partition& rho) {
    int m = so_rank(n);
    if (rho.length() > m) throw std::invalid_argument("t_rho: shape has more than m rows");
    int l = rho.length();
    // Resolve the first-column parities bottom-up; the sentinel below the
    // last row never contributes.
    std::vector<int> first_col(static_cast<size_t>(l), 0);
    bool next_is_odd_choice = false;  // whether a_{2i+1} = 2i+1
    for (int i = l; i >= 1; --i) {
        bool pick_odd = ((rho.part(i) - (next_is_odd_choice ? 1 : 0)) % 2 + 2) % 2 == 1;
        first_col[static_cast<size_t>(i) - 1] = pick_odd ? 2 * i - 1 : 2 * i;
        next_is_odd_choice = pick_odd;
    }
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= l; ++i) {
        std::vector<int> row(static_cast<size_t>(rho.part(i)), 2 * i);
        row[0] = first_col[static_cast<size_t>(i) - 1];
        rows.push_back(std::move(row));
    }
    return Tableau(n, std::move(rows));
}

}  // namespace aicrystal
