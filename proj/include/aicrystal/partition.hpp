#pragma once

#include <compare>
#include <string>
#include <vector>

namespace aicrystal {

// A partition: weakly decreasing sequence of positive integers. The empty
// partition is a first-class value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }

    // 1-based part access; parts beyond the length read as 0.
    int part(int i) const;

    const std::vector<int>& parts() const { return parts_; }

    // Column lengths of the Young diagram, i.e. the conjugate partition.
    Partition conjugate() const;

    // Length of column j (1-based); 0 when j exceeds the first part.
    int column_length(int j) const;

    // Diagram containment D(*this) <= D(other).
    bool contained_in(const Partition& other) const;

    // Cells of the diagram difference D(big) \ D(*this), as 1-based (row, col).
    std::vector<std::pair<int, int>> added_cells(const Partition& big) const;

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// The cover relation: D(lm) subset of D(mu) and |mu| - |lm| = 1.
bool covers(const Partition& lm, const Partition& mu);

// All partitions of the given size with at most max_length parts.
std::vector<Partition> partitions_of(int size, int max_length);

// All partitions with size in [0, max_size] and at most max_length parts,
// in ascending lexicographic order within each size.
std::vector<Partition> partitions_up_to(int max_size, int max_length);

}  // namespace aicrystal
