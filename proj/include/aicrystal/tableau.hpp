#pragma once

#include <compare>
#include <string>
#include <vector>

#include "aicrystal/partition.hpp"

namespace aicrystal {

// A word: finite sequence of letters in [1, n].
class Word {
public:
    Word() = default;
    Word(int n, std::vector<int> letters);

    int n() const { return n_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    int letter(int k) const { return letters_[static_cast<size_t>(k) - 1]; }  // 1-based
    const std::vector<int>& letters() const { return letters_; }

    Word concat(const Word& other) const;

    std::string to_string() const;

    auto operator<=>(const Word&) const = default;

private:
    int n_ = 1;
    std::vector<int> letters_;
};

// A Young tableau over the alphabet [1, n], stored as ragged row-major rows
// whose lengths form a partition. Cells are addressed 1-based.
class Tableau {
public:
    Tableau() = default;
    Tableau(int n, std::vector<std::vector<int>> rows);

    int n() const { return n_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition shape() const;
    int size() const;
    bool empty() const { return rows_.empty(); }

    int at(int i, int j) const;  // 1-based (row, col)

    int row_count() const { return static_cast<int>(rows_.size()); }
    int row_length(int i) const;      // 1-based
    int column_count() const;         // first part of the shape
    int column_length(int j) const;   // 1-based
    std::vector<int> column(int j) const;  // entries top to bottom, 1-based j

    bool is_semistandard() const;
    // Semistandard with pairwise distinct entries (alphabet [1, n]).
    bool is_standard() const;

    // Restriction T|_A to the entries lying in [lo, hi].
    Tableau restrict_to(int lo, int hi) const;

    // Concatenation of the rows, top to bottom. Used as the canonical sort key
    // and for graph node labels.
    std::vector<int> row_word() const;

    std::string to_string() const;

    auto operator<=>(const Tableau&) const = default;

private:
    int n_ = 1;
    std::vector<std::vector<int>> rows_;
};

// Builds the tableau C1 C2 ... Cl from columns (each strictly increasing,
// weakly decreasing heights).
Tableau tableau_from_columns(int n, const std::vector<std::vector<int>>& columns);

// Column reading: columns left to right, each read bottom to top.
Word column_reading(const Tableau& t);

// Content vector: entry i counts the letters equal to i+1. Length n.
using GlWeight = std::vector<int>;
GlWeight weight(const Word& w);
GlWeight weight(const Tableau& t);

}  // namespace aicrystal
