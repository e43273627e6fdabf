#include "aicrystal/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace aicrystal {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 1) throw std::invalid_argument("partition parts must be positive");
        if (k > 0 && parts_[k] > parts_[k - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    if (i < 1) throw std::invalid_argument("part index is 1-based");
    return i <= length() ? parts_[static_cast<size_t>(i) - 1] : 0;
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    int width = parts_.empty() ? 0 : parts_[0];
    for (int j = 1; j <= width; ++j) cols.push_back(column_length(j));
    return Partition(std::move(cols));
}

int Partition::column_length(int j) const {
    int count = 0;
    for (int p : parts_) {
        if (p >= j)
            ++count;
        else
            break;
    }
    return count;
}

bool Partition::contained_in(const Partition& other) const {
    for (int i = 1; i <= length(); ++i)
        if (part(i) > other.part(i)) return false;
    return true;
}

std::vector<std::pair<int, int>> Partition::added_cells(const Partition& big) const {
    if (!contained_in(big)) throw std::invalid_argument("added_cells: shapes not nested");
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= big.length(); ++i)
        for (int j = part(i) + 1; j <= big.part(i); ++j) cells.emplace_back(i, j);
    return cells;
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(parts_[k]);
    }
    out += ')';
    return out;
}

bool covers(const Partition& lm, const Partition& mu) {
    return lm.contained_in(mu) && mu.size() - lm.size() == 1;
}

namespace {

void partitions_rec(int remaining, int max_part, int max_length, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (max_length == 0) return;
    for (int p = 1; p <= std::min(remaining, max_part); ++p) {
        acc.push_back(p);
        partitions_rec(remaining - p, p, max_length - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int size, int max_length) {
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_rec(size, size, max_length, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_up_to(int max_size, int max_length) {
    std::vector<Partition> out;
    for (int s = 0; s <= max_size; ++s) {
        auto batch = partitions_of(s, max_length);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

}  // namespace aicrystal
