// Acceptance suite: runs every criterion at its stated scale and prints one
// pass/fail line each. Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "aicrystal/ai_crystal.hpp"
#include "aicrystal/branching.hpp"
#include "aicrystal/enumerate.hpp"
#include "aicrystal/gl_crystal.hpp"
#include "aicrystal/insertion.hpp"
#include "aicrystal/kmatrix.hpp"
#include "aicrystal/oscillating.hpp"
#include "aicrystal/rs_ai.hpp"
#include "oracles.hpp"

using namespace aicrystal;

namespace {

struct Criterion {
    std::string name;
    double time_limit_seconds;
    std::function<bool(std::string&)> run;
};

bool expect(bool condition, std::string& log, const std::string& message) {
    if (!condition && log.empty()) log = message;
    return condition;
}

// 1. The three cardinality formulas, exact.
bool criterion_counts(std::string& log) {
    bool ok = true;
    for (int l = 0; l <= 10; ++l) {
        Partition shape = l == 0 ? Partition{} : Partition({l});
        ok &= expect(enumerate_ai_ssyt(3, shape).size() == static_cast<size_t>(2 * l + 1), log,
                     "one-row count at n=3, l=" + std::to_string(l));
    }
    for (int l = 0; l <= 8; ++l) {
        Partition shape = l == 0 ? Partition{} : Partition({l});
        ok &= expect(enumerate_ai_ssyt(4, shape).size() == static_cast<size_t>((l + 1) * (l + 1)),
                     log, "one-row count at n=4, l=" + std::to_string(l));
    }
    for (int l1 = 1; l1 <= 6; ++l1)
        for (int l2 = 1; l2 <= l1; ++l2)
            ok &= expect(enumerate_ai_ssyt(4, Partition({l1, l2})).size() ==
                             static_cast<size_t>(2 * (l1 - l2 + 1) * (l1 + l2 + 1)),
                         log, "two-row count at l1=" + std::to_string(l1));
    return ok;
}

// 2. Worked examples, byte-exact.
bool criterion_worked_examples(std::string& log) {
    bool ok = true;
    Tableau t(4, {{1, 2, 3, 3}, {2, 3}, {4}});
    ok &= expect(column_reading(t) == Word(4, {4, 2, 1, 3, 2, 3, 3}), log, "column reading");
    ok &= expect(row_insert(t, 1) == Tableau(4, {{1, 1, 3, 3}, {2, 2}, {3}, {4}}), log,
                 "insertion of 1");
    ok &= expect(row_insert(t, 2) == Tableau(4, {{1, 2, 2, 3}, {2, 3, 3}, {4}}), log,
                 "insertion of 2");
    ok &= expect(row_insert(t, 3) == Tableau(4, {{1, 2, 3, 3, 3}, {2, 3}, {4}}), log,
                 "insertion of 3");

    RsPair pq = rs(Word(4, {4, 2, 3, 1, 3, 2}));
    ok &= expect(pq.p == Tableau(4, {{1, 2, 3}, {2, 3}, {4}}), log, "P-symbol of the word");
    ok &= expect(pq.q == Tableau(6, {{1, 3, 5}, {2, 6}, {4}}), log, "Q-symbol of the word");

    ok &= expect(p_symbol_tensor(Tableau(4, {{1, 3}, {3}}), Tableau(4, {{1, 2}, {2, 3}, {4}})) ==
                     Tableau(4, {{1, 1, 2}, {2, 3, 3}, {3, 4}}),
                 log, "tensor P-symbol");

    Tableau start(4, {{2, 2}, {3, 3}});
    ok &= expect(k1(start) == Tableau(4, {{1, 2}, {3}, {4}}), log, "first complement");
    ok &= expect(k1(Tableau(4, {{1, 2}, {3}, {4}})) == Tableau(4, {{2, 2}}), log,
                 "second complement");
    ok &= expect(standardize(start) == Tableau(4, {{2, 2}}), log, "standardization");

    auto row_words = [](const std::vector<Tableau>& ts) {
        std::vector<std::vector<int>> words;
        for (const Tableau& tab : ts) words.push_back(tab.row_word());
        return words;
    };
    ok &= expect(row_words(enumerate_ai_ssyt(3, Partition({2}))) ==
                     std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}},
                 log, "listing at n=3");
    ok &= expect(row_words(enumerate_ai_ssyt(4, Partition({2, 1}))) ==
                     std::vector<std::vector<int>>{{1, 2, 3}, {1, 2, 4}, {1, 3, 2}, {1, 3, 3},
                                                   {1, 3, 4}, {1, 4, 2}, {1, 4, 3}, {1, 4, 4},
                                                   {2, 2, 3}, {2, 2, 4}, {2, 3, 3}, {2, 3, 4},
                                                   {2, 4, 3}, {2, 4, 4}, {3, 3, 4}, {3, 4, 4}},
                 log, "listing at n=4");

    ok &= expect(ch_ai(enumerate_ssyt(3, Partition({1})), 3).to_string(so_variable_names(1)) ==
                     "y1 + 1 + y1^-1",
                 log, "character of the box crystal at n=3");
    ok &= expect(ch_ai(enumerate_ssyt(4, Partition({1})), 4).to_string(so_variable_names(2)) ==
                     "y1 + y1^-1 + y3 + y3^-1",
                 log, "character of the box crystal at n=4");

    {
        QaiResult res = q_ai(Word(4, {1, 1, 4, 2, 1, 1, 1}));
        std::vector<Tableau> p_expected = {
            Tableau(4, {}),         Tableau(4, {{1}}), Tableau(4, {}),
            Tableau(4, {{4}}),      Tableau(4, {{2}, {4}}), Tableau(4, {{3}}),
            Tableau(4, {{1}, {3}}), Tableau(4, {{3}})};
        ok &= expect(res.p_steps == p_expected, log, "first example: P-symbols");
        ok &= expect(res.q.q1 == Tableau(7, {{6}}), log, "first example: Q1");
        ok &= expect(res.q.q2 == std::vector<QMark>{{1, 2, Sign::none},
                                                    {3, 5, Sign::plus},
                                                    {4, 7, Sign::minus}},
                     log, "first example: Q2");
        std::vector<OtStep> walk{{Partition{}, Sign::none},      {Partition({1}), Sign::none},
                                 {Partition{}, Sign::none},      {Partition({1}), Sign::none},
                                 {Partition({1, 1}), Sign::none}, {Partition({1}), Sign::plus},
                                 {Partition({1, 1}), Sign::none}, {Partition({1}), Sign::minus}};
        ok &= expect(res.ot == OscillatingTableau{4, walk}, log, "first example: walk");
    }
    {
        QaiResult res = q_ai(Word(5, {1, 1, 4, 2, 1}));
        std::vector<Tableau> p_expected = {Tableau(5, {}),         Tableau(5, {{1}}),
                                           Tableau(5, {}),         Tableau(5, {{4}}),
                                           Tableau(5, {{2}, {4}}), Tableau(5, {{3}, {5}})};
        ok &= expect(res.p_steps == p_expected, log, "second example: P-symbols");
        ok &= expect(res.q.q1 == Tableau(5, {{3}, {4}}), log, "second example: Q1");
        ok &= expect(res.q.q2 == std::vector<QMark>{{1, 2, Sign::none},
                                                    {std::nullopt, 5, Sign::none}},
                     log, "second example: Q2");
    }

    BranchResult table = branch(3, Partition({2, 1}));
    ok &= expect(table.multiplicity_of(Partition({2})) == 1, log, "branch [lm:(2)]");
    ok &= expect(table.multiplicity_of(Partition({1})) == 1, log, "branch [lm:(1)]");
    ok &= expect(table.multiplicity_of(Partition({3})) == 0, log, "branch [lm:(3)]");
    ok &= expect(table.multiplicity_of(Partition{}) == 0, log, "branch [lm:empty]");
    return ok;
}

// 3. Structure axioms on every enumerated crystal, n <= 5, |lm| <= 5.
bool criterion_axioms(std::string& log) {
    bool ok = true;
    for (int n = 3; n <= 5; ++n)
        for (const Partition& shape : partitions_up_to(5, n))
            for (const Tableau& t : enumerate_ssyt(n, shape))
                for (int i = 1; i < n; ++i) {
                    auto b = btil(t, i);
                    ok &= expect(b.has_value() == (deg(t, i) != 0), log,
                                 "degree-zero law at n=" + std::to_string(n));
                    if (!b) continue;
                    ok &= expect(deg(*b, i) == deg(t, i) && btil(*b, i) == t, log,
                                 "involution at n=" + std::to_string(n));
                    for (int j = 1; j < n; ++j) {
                        int diff = deg(*b, j) - deg(t, j);
                        if (std::abs(i - j) == 1)
                            ok &= expect(diff == 1 || diff == -1, log,
                                         "adjacent shift at n=" + std::to_string(n));
                        if (std::abs(i - j) > 1) {
                            ok &= expect(diff == 0, log,
                                         "distant invariance at n=" + std::to_string(n));
                            auto bj = btil(t, j);
                            std::optional<Tableau> via_j;
                            if (bj) via_j = btil(*bj, i);
                            ok &= expect(btil(*b, j) == via_j, log,
                                         "distant commutation at n=" + std::to_string(n));
                        }
                    }
                    if (!ok) return ok;
                }
    return ok;
}

// 4. Connectedness of the AI-tableau families, n in {3,4,5,6}, |rho| <= 5.
bool criterion_connected(std::string& log) {
    bool ok = true;
    for (int n : {3, 4, 5, 6})
        for (const Partition& rho : partitions_up_to(5, so_rank(n))) {
            auto family = enumerate_ai_ssyt(n, rho);
            auto component = ai_component(family.front());
            ok &= expect(component == std::set<Tableau>(family.begin(), family.end()), log,
                         "family not connected at n=" + std::to_string(n) + " rho=" +
                             rho.to_string());
        }
    return ok;
}

// 5. Characters match the Weyl-character-formula oracle, n in {3,4,5},
//    |rho| <= 4, including the mirror-pair sum at full rank for n even.
bool criterion_characters(std::string& log) {
    bool ok = true;
    for (int n : {3, 4, 5})
        for (const Partition& rho : partitions_up_to(4, so_rank(n))) {
            auto computed = ch_ai(enumerate_ai_ssyt(n, rho), n);
            auto expected = oracles::so_module_character(n, rho);
            ok &= expect(computed == expected, log,
                         "character mismatch at n=" + std::to_string(n) + " rho=" +
                             rho.to_string());
        }
    return ok;
}

// 6. Complementation structure.
bool criterion_kmatrix(std::string& log) {
    bool ok = true;
    for (int n = 3; n <= 6; ++n)
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> col;
            for (int x = 1; x <= n; ++x)
                if ((mask >> (x - 1)) & 1) col.push_back(x);
            ok &= expect(k_complement(k_complement(col, n), n) == col, log,
                         "complement involution at n=" + std::to_string(n));
        }
    for (int n = 3; n <= 4; ++n)
        for (const Partition& shape : partitions_up_to(5, n))
            for (const Tableau& t : enumerate_ssyt(n, shape)) {
                Tableau kt = k1(t);
                ok &= expect(kt.size() - t.size() == n - 2 * shape.length(), log,
                             "size identity at n=" + std::to_string(n));
                Tableau st = standardize(t);
                for (int i = 1; i < n; ++i) {
                    auto bt = btil(t, i);
                    std::optional<Tableau> k1_bt, std_bt;
                    if (bt) {
                        k1_bt = k1(*bt);
                        std_bt = standardize(*bt);
                    }
                    ok &= expect(btil(kt, i) == k1_bt && deg(kt, i) == deg(t, i), log,
                                 "complement morphism at n=" + std::to_string(n));
                    ok &= expect(btil(st, i) == std_bt && deg(st, i) == deg(t, i), log,
                                 "standardization morphism at n=" + std::to_string(n));
                }
                if (!ok) return ok;
            }
    for (int n = 3; n <= 6; ++n)
        for (const Partition& shape : partitions_up_to(4, so_rank(n)))
            for (const Tableau& t : enumerate_ai_ssyt(n, shape))
                ok &= expect(k1(k1(t)) == t, log,
                             "complement squared at n=" + std::to_string(n));
    return ok;
}

// 7. Closed-form action tables at low rank, l <= 6.
bool criterion_low_rank_tables(std::string& log) {
    bool ok = true;
    for (int l = 0; l <= 6; ++l) {
        auto table = oracles::sst3_one_row_table(l);
        for (size_t k = 0; k < table.elements.size(); ++k)
            for (int i = 1; i <= 2; ++i)
                ok &= expect(
                    btil(table.elements[k], i) == table.expected[k][static_cast<size_t>(i) - 1],
                    log, "one-row table at n=3, l=" + std::to_string(l));
    }
    for (int l = 0; l <= 6; ++l) {
        auto table = oracles::sst4_one_row_table(l);
        for (size_t k = 0; k < table.elements.size(); ++k)
            for (int i = 1; i <= 3; ++i)
                ok &= expect(
                    btil(table.elements[k], i) == table.expected[k][static_cast<size_t>(i) - 1],
                    log, "one-row table at n=4, l=" + std::to_string(l));
    }
    for (int l1 = 1; l1 <= 6; ++l1)
        for (int l2 = 1; l2 <= l1; ++l2) {
            auto table = oracles::sst4_two_row_table(l1, l2);
            for (size_t k = 0; k < table.elements.size(); ++k)
                for (int i = 1; i <= 3; ++i)
                    ok &= expect(btil(table.elements[k], i) ==
                                     table.expected[k][static_cast<size_t>(i) - 1],
                                 log, "two-row table at l1=" + std::to_string(l1));
        }
    return ok;
}

// 8. Bijectivity, equivariance, and invertibility of the correspondence.
bool criterion_rsai(std::string& log) {
    bool ok = true;
    for (int n : {3, 4}) {
        int dmax = n == 3 ? 5 : 4;
        for (int d = 0; d <= dmax && ok; ++d) {
            std::set<RsAiPair> image;
            for (const Word& w : enumerate_words(n, d)) {
                RsAiPair pair = rs_ai(w);
                ok &= expect(is_valid_ot(pair.ot), log, "invalid walk at n=" + std::to_string(n));
                ok &= expect(image.insert(pair).second, log,
                             "correspondence not injective at n=" + std::to_string(n));
                ok &= expect(rs_ai_inverse(pair.p, pair.ot) == w, log,
                             "round trip fails at n=" + std::to_string(n));
            }
            long long expected = 0;
            for (const OscillatingTableau& walk : enumerate_ot(n, d))
                expected +=
                    static_cast<long long>(enumerate_ai_ssyt(n, walk.final_shape()).size());
            ok &= expect(static_cast<long long>(image.size()) == expected, log,
                         "image count at n=" + std::to_string(n) + " d=" + std::to_string(d));
        }
    }
    for (int d = 0; d <= 4 && ok; ++d)
        for (const Word& w : enumerate_words(4, d)) {
            RsAiPair pair = rs_ai(w);
            for (int i = 1; i < 4; ++i) {
                auto bw = btil(w, i);
                auto bp = btil(pair.p, i);
                ok &= expect(bw.has_value() == bp.has_value(), log, "equivariance domain");
                if (bw) {
                    RsAiPair moved = rs_ai(*bw);
                    ok &= expect(moved.p == *bp && moved.ot == pair.ot, log, "equivariance");
                }
            }
            if (!ok) break;
        }
    return ok;
}

// 9. Tensor-step decomposition against the four-case table.
bool criterion_tensor(std::string& log) {
    bool ok = true;
    for (int n : {3, 4, 5})
        for (const Partition& rho : partitions_up_to(4, so_rank(n))) {
            TensorStepReport report = tensor_step_decompose(n, rho);
            ok &= expect(report.matches_case_table, log,
                         "decomposition at n=" + std::to_string(n) + " rho=" + rho.to_string() +
                             ": " + report.detail);
        }
    for (const Partition& rho : partitions_up_to(3, so_rank(6))) {
        TensorStepReport report = tensor_step_decompose(6, rho);
        ok &= expect(report.matches_case_table, log,
                     "decomposition at n=6 rho=" + rho.to_string() + ": " + report.detail);
    }
    // the sign-split components are separated by the inserted shape
    TensorStepReport doubled = tensor_step_decompose(4, Partition({2, 1}));
    int plus_count = 0, minus_count = 0;
    for (const TensorComponent& comp : doubled.components) {
        if (comp.sign == Sign::plus) ++plus_count;
        if (comp.sign == Sign::minus) ++minus_count;
    }
    ok &= expect(plus_count == 1 && minus_count == 1, log, "sign split at rho=(2,1)");
    return ok;
}

// 10. Branching consistency and the singular-element classification.
bool criterion_branching(std::string& log) {
    bool ok = true;
    for (int n : {3, 4})
        for (const Partition& lambda : partitions_up_to(5, n)) {
            BranchResult result = branch(n, lambda);
            LaurentPolynomial total(so_rank(n));
            for (const BranchFiber& fiber : result.fibers) {
                auto expected = enumerate_ai_ssyt(n, fiber.ot.final_shape());
                std::set<Tableau> images;
                for (const Tableau& t : fiber.members) images.insert(p_ai(column_reading(t)));
                ok &= expect(images.size() == fiber.members.size() &&
                                 std::vector<Tableau>(images.begin(), images.end()) == expected,
                             log, "fiber at n=" + std::to_string(n) + " lm=" + lambda.to_string());
            }
            for (const auto& [rho, mult] : result.multiplicity)
                total += ch_ai(enumerate_ai_ssyt(n, rho), n).scaled(Rational(mult));
            ok &= expect(total == ch_ai(enumerate_ssyt(n, lambda), n), log,
                         "character sum at n=" + std::to_string(n) + " lm=" + lambda.to_string());
            if (!ok) return ok;
        }
    for (int n = 3; n <= 6; ++n)
        for (const Partition& rho : partitions_up_to(5, so_rank(n))) {
            Tableau canonical = t_rho(n, rho);
            for (const Partition& sigma : partitions_up_to(5, so_rank(n))) {
                std::set<Tableau> found;
                for (const Tableau& t : enumerate_ai_ssyt(n, rho))
                    if (is_singular(t, sigma)) found.insert(t);
                std::set<Tableau> expected;
                if (sigma == rho) {
                    expected.insert(canonical);
                    if (2 * rho.length() == n) expected.insert(k1(canonical));
                }
                ok &= expect(found == expected, log,
                             "singular classification at n=" + std::to_string(n) + " rho=" +
                                 rho.to_string() + " sigma=" + sigma.to_string());
            }
            if (!ok) return ok;
        }
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"cardinality formulas", 5.0, criterion_counts},
        {"worked examples", 1.0, criterion_worked_examples},
        {"structure axioms", 30.0, criterion_axioms},
        {"connectedness", 60.0, criterion_connected},
        {"characters vs Weyl oracle", 60.0, criterion_characters},
        {"complementation structure", 30.0, criterion_kmatrix},
        {"closed-form action tables", 10.0, criterion_low_rank_tables},
        {"correspondence bijectivity", 120.0, criterion_rsai},
        {"tensor-step decomposition", 60.0, criterion_tensor},
        {"branching consistency", 120.0, criterion_branching},
    };
    int failures = 0;
    for (size_t k = 0; k < criteria.size(); ++k) {
        std::string log;
        auto start = std::chrono::steady_clock::now();
        bool passed = false;
        try {
            passed = criteria[k].run(log);
        } catch (const std::exception& e) {
            log = std::string("exception: ") + e.what();
        }
        auto stop = std::chrono::steady_clock::now();
        double seconds = std::chrono::duration<double>(stop - start).count();
        if (passed && seconds > criteria[k].time_limit_seconds) {
            passed = false;
            log = "exceeded the " + std::to_string(criteria[k].time_limit_seconds) +
                  "s time limit";
        }
        std::printf("[%s] criterion %zu: %s (%.2fs)%s%s\n", passed ? "PASS" : "FAIL", k + 1,
                    criteria[k].name.c_str(), seconds, log.empty() ? "" : " -- ",
                    log.c_str());
        if (!passed) ++failures;
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
