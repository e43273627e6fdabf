#include "aicrystal/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace aicrystal {

Word::Word(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
    if (n_ < 0) throw std::invalid_argument("word: alphabet bound must be nonnegative");
    for (int l : letters_)
        if (l < 1 || l > n_) throw std::invalid_argument("word: letter out of range");
}

Word Word::concat(const Word& other) const {
    std::vector<int> joined = letters_;
    joined.insert(joined.end(), other.letters_.begin(), other.letters_.end());
    return Word(std::max(n_, other.n_), std::move(joined));
}

std::string Word::to_string() const {
    std::string out = "(";
    for (size_t k = 0; k < letters_.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(letters_[k]);
    }
    out += ')';
    return out;
}

Tableau::Tableau(int n, std::vector<std::vector<int>> rows) : n_(n), rows_(std::move(rows)) {
    if (n_ < 0) throw std::invalid_argument("tableau: alphabet bound must be nonnegative");
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].empty()) throw std::invalid_argument("tableau: empty row");
        if (i > 0 && rows_[i].size() > rows_[i - 1].size())
            throw std::invalid_argument("tableau: row lengths must weakly decrease");
        for (int x : rows_[i])
            if (x < 1 || x > n_) throw std::invalid_argument("tableau: entry out of range");
    }
}

Partition Tableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
}

int Tableau::size() const {
    int total = 0;
    for (const auto& r : rows_) total += static_cast<int>(r.size());
    return total;
}

int Tableau::at(int i, int j) const {
    if (i < 1 || i > row_count() || j < 1 || j > row_length(i))
        throw std::invalid_argument("tableau: cell out of range");
    return rows_[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1];
}

int Tableau::row_length(int i) const {
    if (i < 1 || i > row_count()) return 0;
    return static_cast<int>(rows_[static_cast<size_t>(i) - 1].size());
}

int Tableau::column_count() const { return rows_.empty() ? 0 : static_cast<int>(rows_[0].size()); }

int Tableau::column_length(int j) const {
    int count = 0;
    for (const auto& r : rows_) {
        if (static_cast<int>(r.size()) >= j)
            ++count;
        else
            break;
    }
    return count;
}

std::vector<int> Tableau::column(int j) const {
    std::vector<int> col;
    for (const auto& r : rows_) {
        if (static_cast<int>(r.size()) >= j)
            col.push_back(r[static_cast<size_t>(j) - 1]);
        else
            break;
    }
    return col;
}

bool Tableau::is_semistandard() const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        for (size_t j = 0; j + 1 < rows_[i].size(); ++j)
            if (rows_[i][j] > rows_[i][j + 1]) return false;
        if (i > 0)
            for (size_t j = 0; j < rows_[i].size(); ++j)
                if (rows_[i - 1][j] >= rows_[i][j]) return false;
    }
    return true;
}

bool Tableau::is_standard() const {
    if (!is_semistandard()) return false;
    std::vector<int> entries = row_word();
    std::sort(entries.begin(), entries.end());
    return std::adjacent_find(entries.begin(), entries.end()) == entries.end();
}

Tableau Tableau::restrict_to(int lo, int hi) const {
    std::vector<std::vector<int>> rows;
    for (const auto& r : rows_) {
        std::vector<int> kept;
        for (int x : r)
            if (x >= lo && x <= hi) kept.push_back(x);
        if (!kept.empty()) rows.push_back(std::move(kept));
    }
    return Tableau(n_, std::move(rows));
}

std::vector<int> Tableau::row_word() const {
    std::vector<int> out;
    for (const auto& r : rows_) out.insert(out.end(), r.begin(), r.end());
    return out;
}

std::string Tableau::to_string() const {
    if (rows_.empty()) return "[]";
    std::string out = "[";
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i) out += '/';
        for (size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(rows_[i][j]);
        }
    }
    out += ']';
    return out;
}

Tableau tableau_from_columns(int n, const std::vector<std::vector<int>>& columns) {
    std::vector<std::vector<int>> rows;
    for (size_t j = 0; j < columns.size(); ++j) {
        const auto& col = columns[j];
        if (j > 0 && col.size() > columns[j - 1].size())
            throw std::invalid_argument("columns must have weakly decreasing heights");
        for (size_t i = 0; i < col.size(); ++i) {
            if (rows.size() <= i) rows.emplace_back();
            rows[i].push_back(col[i]);
        }
    }
    return Tableau(n, std::move(rows));
}

Word column_reading(const Tableau& t) {
    std::vector<int> letters;
    for (int j = 1; j <= t.column_count(); ++j) {
        auto col = t.column(j);
        letters.insert(letters.end(), col.rbegin(), col.rend());
    }
    return Word(t.n(), std::move(letters));
}

GlWeight weight(const Word& w) {
    GlWeight wt(static_cast<size_t>(w.n()), 0);
    for (int l : w.letters()) ++wt[static_cast<size_t>(l) - 1];
    return wt;
}

GlWeight weight(const Tableau& t) { return weight(column_reading(t)); }

}  // namespace aicrystal
