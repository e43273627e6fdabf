#include "aicrystal/insertion.hpp"

#include <algorithm>
#include <stdexcept>

namespace aicrystal {

Tableau row_insert(const Tableau& t, int letter) {
    if (!t.is_semistandard()) throw std::invalid_argument("row_insert: tableau not semistandard");
    if (letter < 1 || letter > t.n()) throw std::invalid_argument("row_insert: letter out of range");
    auto rows = t.rows();
    int x = letter;
    for (size_t r = 0;; ++r) {
        if (r == rows.size()) {
            rows.push_back({x});
            break;
        }
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            break;
        }
        std::swap(x, *it);
    }
    return Tableau(t.n(), std::move(rows));
}

std::pair<Tableau, int> reverse_insert(const Tableau& t, int row, int col) {
    if (!t.is_semistandard())
        throw std::invalid_argument("reverse_insert: tableau not semistandard");
    if (row < 1 || row > t.row_count() || col != t.row_length(row) ||
        (row < t.row_count() && t.row_length(row + 1) == t.row_length(row)))
        throw std::invalid_argument("reverse_insert: cell is not a removable corner");
    auto rows = t.rows();
    int x = rows[static_cast<size_t>(row) - 1].back();
    rows[static_cast<size_t>(row) - 1].pop_back();
    if (rows[static_cast<size_t>(row) - 1].empty()) rows.pop_back();
    for (int r = row - 1; r >= 1; --r) {
        auto& above = rows[static_cast<size_t>(r) - 1];
        // rightmost entry strictly below x gets bumped out
        auto it = std::lower_bound(above.begin(), above.end(), x);
        std::swap(x, *(it - 1));
    }
    return {Tableau(t.n(), std::move(rows)), x};
}

RsPair rs(const Word& w) {
    Tableau p(w.n(), {});
    Tableau q(w.length(), {});
    for (int k = 1; k <= w.length(); ++k) {
        Partition before = p.shape();
        p = row_insert(p, w.letter(k));
        auto cells = before.added_cells(p.shape());
        auto qrows = q.rows();
        auto [i, j] = cells.front();
        if (i > static_cast<int>(qrows.size())) qrows.emplace_back();
        qrows[static_cast<size_t>(i) - 1].push_back(k);
        q = Tableau(w.length(), std::move(qrows));
    }
    return {p, q};
}

Tableau p_symbol(const Word& w) {
    Tableau p(w.n(), {});
    for (int k = 1; k <= w.length(); ++k) p = row_insert(p, w.letter(k));
    return p;
}

Tableau p_symbol_tensor(const Tableau& t, const Tableau& s) {
    if (!t.is_semistandard() || !s.is_semistandard())
        throw std::invalid_argument("p_symbol_tensor: factors must be semistandard");
    return p_symbol(column_reading(t).concat(column_reading(s)));
}

}  // namespace aicrystal
