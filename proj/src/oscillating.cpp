#include "aicrystal/oscillating.hpp"

#include <algorithm>
#include <stdexcept>

#include "aicrystal/ai_crystal.hpp"
#include "aicrystal/insertion.hpp"

namespace aicrystal {

std::string sign_to_string(Sign s) {
    switch (s) {
        case Sign::plus: return "+";
        case Sign::minus: return "-";
        default: return "0";
    }
}

bool is_valid_ot(const OscillatingTableau& ot) {
    if (ot.n < 3) return false;
    int m = so_rank(ot.n);
    if (ot.steps.empty()) return false;
    if (!ot.steps[0].shape.empty() || ot.steps[0].sign != Sign::none) return false;
    for (size_t k = 0; k < ot.steps.size(); ++k)
        if (ot.steps[k].shape.length() > m) return false;
    for (size_t k = 1; k < ot.steps.size(); ++k) {
        const Partition& prev = ot.steps[k - 1].shape;
        const Partition& cur = ot.steps[k].shape;
        Sign s = ot.steps[k].sign;
        bool stay = cur == prev;
        bool grow = covers(prev, cur);
        bool shrink = covers(cur, prev);
        if (!stay && !grow && !shrink) return false;
        if (stay && !(ot.n % 2 == 1 && cur.length() == m)) return false;
        bool sign_slot =
            ot.n % 2 == 0 && shrink && prev.length() == m && cur.length() == m - 1;
        if (sign_slot != (s != Sign::none)) return false;
    }
    return true;
}

AiQSymbol ot_to_q(const OscillatingTableau& ot) {
    if (!is_valid_ot(ot)) throw std::invalid_argument("ot_to_q: invalid oscillating tableau");
    int d = ot.length();
    Tableau q1(d, {});
    std::vector<QMark> q2;
    for (int k = 1; k <= d; ++k) {
        const Partition& prev = ot.steps[static_cast<size_t>(k) - 1].shape;
        const Partition& cur = ot.steps[static_cast<size_t>(k)].shape;
        if (cur == prev) {
            q2.push_back(QMark{std::nullopt, k, Sign::none});
        } else if (covers(prev, cur)) {
            auto [i, j] = prev.added_cells(cur).front();
            auto rows = q1.rows();
            if (i > static_cast<int>(rows.size())) rows.emplace_back();
            rows[static_cast<size_t>(i) - 1].push_back(k);
            q1 = Tableau(d, std::move(rows));
        } else {
            auto [i, j] = cur.added_cells(prev).front();
            auto [smaller, l] = reverse_insert(q1, i, j);
            q1 = smaller;
            q2.push_back(QMark{l, k, ot.steps[static_cast<size_t>(k)].sign});
        }
    }
    return {q1, q2};
}

OscillatingTableau q_to_ot(const AiQSymbol& q, int n) {
    int d = 0;
    for (int x : q.q1.row_word()) d = std::max(d, x);
    for (const QMark& mark : q.q2) d = std::max(d, mark.k);
    Tableau cur = q.q1;
    std::vector<OtStep> steps_rev;
    for (int k = d; k >= 1; --k) {
        auto mark = std::find_if(q.q2.begin(), q.q2.end(),
                                 [k](const QMark& mk) { return mk.k == k; });
        if (mark != q.q2.end() && !mark->l) {
            steps_rev.push_back({cur.shape(), Sign::none});
        } else if (mark != q.q2.end()) {
            steps_rev.push_back({cur.shape(), mark->sign});
            cur = row_insert(cur, *mark->l);
        } else {
            steps_rev.push_back({cur.shape(), Sign::none});
            auto word = cur.row_word();
            if (std::find(word.begin(), word.end(), k) == word.end())
                throw std::invalid_argument("q_to_ot: step index missing from both components");
            // k is the maximal entry, so it sits at a removable corner
            auto rows = cur.rows();
            for (size_t i = 0; i < rows.size(); ++i) {
                if (!rows[i].empty() && rows[i].back() == k) {
                    rows[i].pop_back();
                    if (rows[i].empty()) rows.erase(rows.begin() + static_cast<long>(i));
                    break;
                }
            }
            cur = Tableau(cur.n(), std::move(rows));
        }
    }
    steps_rev.push_back({cur.shape(), Sign::none});
    if (!cur.empty()) throw std::invalid_argument("q_to_ot: leftover entries");
    std::reverse(steps_rev.begin(), steps_rev.end());
    OscillatingTableau ot{n, std::move(steps_rev)};
    if (!is_valid_ot(ot)) throw std::invalid_argument("q_to_ot: decoded walk is invalid");
    return ot;
}

namespace {

void extend_walks(int n, int m, int length, std::vector<OtStep>& walk,
                  std::vector<OscillatingTableau>& out) {
    if (static_cast<int>(walk.size()) == length + 1) {
        out.push_back({n, walk});
        return;
    }
    const Partition cur = walk.back().shape;
    if (n % 2 == 1 && cur.length() == m) {
        walk.push_back({cur, Sign::none});
        extend_walks(n, m, length, walk, out);
        walk.pop_back();
    }
    int max_new_row = std::min(cur.length() + 1, m);
    for (int r = 1; r <= max_new_row; ++r) {
        if (r > 1 && cur.part(r) == cur.part(r - 1)) continue;  // not addable
        auto parts = cur.parts();
        if (r <= cur.length())
            ++parts[static_cast<size_t>(r) - 1];
        else
            parts.push_back(1);
        walk.push_back({Partition(parts), Sign::none});
        extend_walks(n, m, length, walk, out);
        walk.pop_back();
    }
    for (int r = 1; r <= cur.length(); ++r) {
        if (r < cur.length() && cur.part(r) == cur.part(r + 1)) continue;  // not removable
        auto parts = cur.parts();
        --parts[static_cast<size_t>(r) - 1];
        if (parts.back() == 0) parts.pop_back();
        Partition next(parts);
        bool sign_slot = n % 2 == 0 && cur.length() == m && next.length() == m - 1;
        if (sign_slot) {
            for (Sign s : {Sign::plus, Sign::minus}) {
                walk.push_back({next, s});
                extend_walks(n, m, length, walk, out);
                walk.pop_back();
            }
        } else {
            walk.push_back({next, Sign::none});
            extend_walks(n, m, length, walk, out);
            walk.pop_back();
        }
    }
}

}  // namespace

std::vector<OscillatingTableau> enumerate_ot(int n, int length) {
    int m = so_rank(n);
    std::vector<OscillatingTableau> out;
    std::vector<OtStep> walk{{Partition{}, Sign::none}};
    extend_walks(n, m, length, walk, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<OscillatingTableau> enumerate_ot(int n, int length, const Partition& shape) {
    std::vector<OscillatingTableau> out;
    for (auto& ot : enumerate_ot(n, length))
        if (ot.final_shape() == shape) out.push_back(std::move(ot));
    return out;
}

}  // namespace aicrystal
