#include "aicrystal/enumerate.hpp"

#include <algorithm>

namespace aicrystal {

namespace {

void fill_cells(int n, const std::vector<int>& parts, std::vector<std::vector<int>>& rows,
                size_t r, size_t c, std::vector<Tableau>& out) {
    if (r == parts.size()) {
        out.emplace_back(n, rows);
        return;
    }
    size_t next_r = r, next_c = c + 1;
    if (static_cast<int>(c + 1) == parts[r]) {
        next_r = r + 1;
        next_c = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
        rows[r][c] = v;
        fill_cells(n, parts, rows, next_r, next_c, out);
    }
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(int n, const Partition& shape) {
    std::vector<Tableau> out;
    if (shape.length() > n) return out;
    if (shape.empty()) {
        out.emplace_back(n, std::vector<std::vector<int>>{});
        return out;
    }
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= shape.length(); ++i)
        rows.emplace_back(static_cast<size_t>(shape.part(i)), 0);
    fill_cells(n, shape.parts(), rows, 0, 0, out);
    return out;
}

std::vector<Tableau> enumerate_standard(const Partition& shape) {
    std::vector<Tableau> out;
    for (const Tableau& t : enumerate_ssyt(shape.size(), shape))
        if (t.is_standard()) out.push_back(t);
    return out;
}

std::vector<Word> enumerate_words(int n, int length) {
    std::vector<Word> out;
    std::vector<int> letters(static_cast<size_t>(length), 1);
    if (length == 0) {
        out.emplace_back(n, std::vector<int>{});
        return out;
    }
    while (true) {
        out.emplace_back(n, letters);
        int k = length - 1;
        while (k >= 0 && letters[static_cast<size_t>(k)] == n) {
            letters[static_cast<size_t>(k)] = 1;
            --k;
        }
        if (k < 0) break;
        ++letters[static_cast<size_t>(k)];
    }
    return out;
}

}  // namespace aicrystal
