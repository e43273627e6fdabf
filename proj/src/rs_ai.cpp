#include "aicrystal/rs_ai.hpp"

#include <algorithm>
#include <stdexcept>

#include "aicrystal/ai_crystal.hpp"
#include "aicrystal/insertion.hpp"
#include "aicrystal/kmatrix.hpp"

namespace aicrystal {

Tableau p_ai(const Word& w) { return standardize(p_symbol(w)); }

QaiResult q_ai(const Word& w) {
    int n = w.n();
    int m = so_rank(n);
    int d = w.length();
    Tableau p_gl(n, {});
    Tableau p_prev(n, {});
    Tableau q1(d, {});
    std::vector<QMark> q2;
    std::vector<OtStep> steps{{Partition{}, Sign::none}};
    std::vector<Tableau> p_steps{p_prev};
    for (int k = 1; k <= d; ++k) {
        p_gl = row_insert(p_gl, w.letter(k));
        Tableau p_cur = standardize(p_gl);
        const Partition prev = p_prev.shape();
        const Partition cur = p_cur.shape();
        Sign sign = Sign::none;
        if (cur == prev) {
            q2.push_back(QMark{std::nullopt, k, Sign::none});
        } else if (covers(prev, cur)) {
            auto [i, j] = prev.added_cells(cur).front();
            auto rows = q1.rows();
            if (i > static_cast<int>(rows.size())) rows.emplace_back();
            rows[static_cast<size_t>(i) - 1].push_back(k);
            q1 = Tableau(d, std::move(rows));
        } else if (covers(cur, prev)) {
            auto [i, j] = cur.added_cells(prev).front();
            auto [smaller, l] = reverse_insert(q1, i, j);
            q1 = smaller;
            if (n % 2 == 0 && prev.length() == n / 2 && cur.length() < prev.length()) {
                int inserted_len = row_insert(p_prev, w.letter(k)).shape().length();
                sign = inserted_len > m ? Sign::plus : Sign::minus;
            }
            q2.push_back(QMark{l, k, sign});
        } else {
            throw std::logic_error("q_ai: consecutive AI shapes differ by more than one cell");
        }
        steps.push_back({cur, sign});
        p_prev = p_cur;
        p_steps.push_back(p_cur);
    }
    return {AiQSymbol{q1, q2}, OscillatingTableau{n, std::move(steps)}, std::move(p_steps)};
}

RsAiPair rs_ai(const Word& w) {
    QaiResult res = q_ai(w);
    return {res.p_steps.back(), res.ot};
}

Word rs_ai_inverse(const Tableau& p, const OscillatingTableau& ot) {
    int n = ot.n;
    int m = so_rank(n);
    if (!is_valid_ot(ot)) throw std::invalid_argument("rs_ai_inverse: invalid oscillating tableau");
    if (p.n() != n || p.shape() != ot.final_shape())
        throw std::invalid_argument("rs_ai_inverse: shape mismatch");
    if (!is_ai_tableau(p)) throw std::invalid_argument("rs_ai_inverse: P-symbol is not an AI-tableau");
    int d = ot.length();
    Tableau current = p;
    std::vector<int> letters_rev;
    for (int k = d; k >= 1; --k) {
        const Partition& prev_shape = ot.steps[static_cast<size_t>(k) - 1].shape;
        Sign want = ot.steps[static_cast<size_t>(k)].sign;
        std::vector<std::pair<Tableau, int>> matches;
        for (const Tableau& t_prev : enumerate_ai_ssyt(n, prev_shape)) {
            for (int l = 1; l <= n; ++l) {
                Tableau inserted = row_insert(t_prev, l);
                if (standardize(inserted) != current) continue;
                if (want == Sign::plus && inserted.shape().length() <= m) continue;
                if (want == Sign::minus && inserted.shape().length() != m) continue;
                matches.emplace_back(t_prev, l);
            }
        }
        if (matches.empty()) throw std::invalid_argument("rs_ai_inverse: pair has no preimage");
        if (matches.size() > 1)
            throw std::logic_error("rs_ai_inverse: step preimage is not unique");
        current = matches.front().first;
        letters_rev.push_back(matches.front().second);
    }
    if (!current.empty()) throw std::invalid_argument("rs_ai_inverse: pair has no preimage");
    std::reverse(letters_rev.begin(), letters_rev.end());
    return Word(n, std::move(letters_rev));
}

}  // namespace aicrystal
