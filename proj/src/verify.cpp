#include "aicrystal/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "aicrystal/ai_crystal.hpp"
#include "aicrystal/branching.hpp"
#include "aicrystal/enumerate.hpp"
#include "aicrystal/gl_crystal.hpp"
#include "aicrystal/insertion.hpp"
#include "aicrystal/kmatrix.hpp"
#include "aicrystal/oscillating.hpp"
#include "aicrystal/rs_ai.hpp"

namespace aicrystal {

namespace {

struct Recorder {
    std::vector<CheckResult>& out;
    void add(const std::string& name, bool passed, const std::string& detail = "") {
        out.push_back({name, passed, passed ? "" : detail});
    }
};

std::string tag(int n, const Partition& shape) {
    return "n=" + std::to_string(n) + " shape=" + shape.to_string();
}

// Reference evaluation of the word operators straight from the two-factor
// tensor rule, recursing on the length.
std::optional<Word> ref_op(const Word& w, int i, bool raising);

int ref_eps(const Word& w, int i) {
    int count = 0;
    auto cur = std::optional<Word>(w);
    while ((cur = ref_op(*cur, i, true))) ++count;
    return count;
}

int ref_phi(const Word& w, int i) {
    int count = 0;
    auto cur = std::optional<Word>(w);
    while ((cur = ref_op(*cur, i, false))) ++count;
    return count;
}

std::optional<Word> ref_op(const Word& w, int i, bool raising) {
    if (w.length() == 0) return std::nullopt;
    if (w.length() == 1) {
        int l = w.letter(1);
        if (raising) return l == i + 1 ? std::optional(Word(w.n(), {i})) : std::nullopt;
        return l == i ? std::optional(Word(w.n(), {i + 1})) : std::nullopt;
    }
    auto prefix_letters = w.letters();
    int last = prefix_letters.back();
    prefix_letters.pop_back();
    Word b1(w.n(), std::move(prefix_letters));
    Word b2(w.n(), {last});
    int e1 = ref_eps(b1, i), f2 = ref_phi(b2, i);
    bool act_left = raising ? e1 > f2 : e1 >= f2;
    if (act_left) {
        auto res = ref_op(b1, i, raising);
        if (!res) return std::nullopt;
        return res->concat(b2);
    }
    auto res = ref_op(b2, i, raising);
    if (!res) return std::nullopt;
    return b1.concat(*res);
}

void check_axioms(Recorder& rec, const VerifyOptions& opts) {
    for (int n = 3; n <= opts.max_n; ++n) {
        bool ok = true;
        std::string detail;
        for (const Partition& shape : partitions_up_to(opts.max_size, n)) {
            for (const Tableau& t : enumerate_ssyt(n, shape)) {
                for (int i = 1; i < n && ok; ++i) {
                    auto bt = btil(t, i);
                    if (bt.has_value() != (deg(t, i) != 0)) {
                        ok = false;
                        detail = "degree-zero law fails at " + tag(n, shape);
                    }
                    if (!bt) continue;
                    if (deg(*bt, i) != deg(t, i) || btil(*bt, i) != t) {
                        ok = false;
                        detail = "involution axiom fails at " + tag(n, shape);
                    }
                    for (int j = 1; j < n && ok; ++j) {
                        int diff = deg(*bt, j) - deg(t, j);
                        if (std::abs(i - j) == 1 && diff != 1 && diff != -1) {
                            ok = false;
                            detail = "adjacent degree shift fails at " + tag(n, shape);
                        }
                        if (std::abs(i - j) > 1 && diff != 0) {
                            ok = false;
                            detail = "distant degree invariance fails at " + tag(n, shape);
                        }
                        if (std::abs(i - j) > 1) {
                            auto lhs = btil(*bt, j);
                            std::optional<Tableau> rhs;
                            if (auto bj = btil(t, j)) rhs = btil(*bj, i);
                            if (lhs != rhs) {
                                ok = false;
                                detail = "distant commutation fails at " + tag(n, shape);
                            }
                        }
                    }
                }
                if (!ok) break;
            }
            if (!ok) break;
        }
        rec.add("axioms/ai-structure n=" + std::to_string(n), ok, detail);
    }
}

void check_gl(Recorder& rec, const VerifyOptions& opts) {
    for (int n = 2; n <= opts.max_n; ++n) {
        bool sig_ok = true;
        for (int d = 0; d <= opts.max_len && sig_ok; ++d) {
            for (const Word& w : enumerate_words(n, d)) {
                for (int i = 1; i < n; ++i) {
                    if (etil(w, i) != ref_op(w, i, true) || ftil(w, i) != ref_op(w, i, false) ||
                        eps(w, i) != ref_eps(w, i) || phi(w, i) != ref_phi(w, i)) {
                        sig_ok = false;
                        break;
                    }
                }
                if (!sig_ok) break;
            }
        }
        rec.add("gl/signature-vs-tensor-rule n=" + std::to_string(n), sig_ok,
                "signature rule disagrees with the recursive tensor rule");
    }
    for (int n = 2; n <= opts.max_n; ++n) {
        bool ok = true;
        std::string detail;
        for (const Partition& shape : partitions_up_to(opts.max_size, n)) {
            for (const Tableau& t : enumerate_ssyt(n, shape)) {
                for (int i = 1; i < n; ++i) {
                    if (auto f = ftil(t, i); f && etil(*f, i) != t) {
                        ok = false;
                        detail = "F/E inversion fails at " + tag(n, shape);
                    }
                    if (auto e = etil(t, i); e && ftil(*e, i) != t) {
                        ok = false;
                        detail = "E/F inversion fails at " + tag(n, shape);
                    }
                    // local axioms for |i-j| > 1 and the adjacent dichotomy
                    for (int j = 1; j < n; ++j) {
                        auto e = etil(t, i);
                        if (!e) continue;
                        if (std::abs(i - j) > 1) {
                            if (eps(*e, j) != eps(t, j) || phi(*e, j) != phi(t, j)) {
                                ok = false;
                                detail = "distant string invariance fails at " + tag(n, shape);
                            }
                            auto lhs = etil(*e, j);
                            std::optional<Tableau> rhs;
                            if (auto ej = etil(t, j)) rhs = etil(*ej, i);
                            if (lhs != rhs) {
                                ok = false;
                                detail = "distant E-commutation fails at " + tag(n, shape);
                            }
                        } else if (std::abs(i - j) == 1) {
                            bool first = eps(*e, j) == eps(t, j) && phi(*e, j) == phi(t, j) - 1;
                            bool second = eps(*e, j) == eps(t, j) + 1 && phi(*e, j) == phi(t, j);
                            if (!first && !second) {
                                ok = false;
                                detail = "adjacent string dichotomy fails at " + tag(n, shape);
                            }
                        }
                    }
                }
            }
        }
        rec.add("gl/stembridge-local n=" + std::to_string(n), ok, detail);
    }
    // RS intertwines the operators with the action on the P-symbol alone.
    for (int n = 2; n <= std::min(opts.max_n, 3); ++n) {
        bool ok = true;
        for (int d = 0; d <= std::min(opts.max_len, 4); ++d) {
            for (const Word& w : enumerate_words(n, d)) {
                RsPair pq = rs(w);
                for (int i = 1; i < n; ++i) {
                    auto fw = ftil(w, i);
                    auto fp = ftil(pq.p, i);
                    if (fw.has_value() != fp.has_value()) ok = false;
                    if (fw && (rs(*fw).p != *fp || rs(*fw).q != pq.q)) ok = false;
                }
            }
        }
        rec.add("gl/rs-equivariance n=" + std::to_string(n), ok,
                "operators do not commute with the correspondence");
    }
}

void check_counts(Recorder& rec, const VerifyOptions& opts) {
    bool ok3 = true;
    for (int l = 0; l <= opts.max_size; ++l) {
        Partition shape = l == 0 ? Partition{} : Partition{{l}};
        if (static_cast<long long>(enumerate_ai_ssyt(3, shape).size()) != 2LL * l + 1) ok3 = false;
    }
    rec.add("counts/one-row n=3 (2l+1)", ok3, "cardinality formula fails");
    bool ok4 = true;
    for (int l = 0; l <= opts.max_size; ++l) {
        Partition shape = l == 0 ? Partition{} : Partition{{l}};
        long long expect = static_cast<long long>(l + 1) * (l + 1);
        if (static_cast<long long>(enumerate_ai_ssyt(4, shape).size()) != expect) ok4 = false;
    }
    rec.add("counts/one-row n=4 (l+1)^2", ok4, "cardinality formula fails");
    bool ok42 = true;
    for (int l1 = 1; l1 <= opts.max_size; ++l1)
        for (int l2 = 1; l2 <= l1; ++l2) {
            long long expect = 2LL * (l1 - l2 + 1) * (l1 + l2 + 1);
            if (static_cast<long long>(enumerate_ai_ssyt(4, Partition{{l1, l2}}).size()) != expect)
                ok42 = false;
        }
    rec.add("counts/two-row n=4 2(l1-l2+1)(l1+l2+1)", ok42, "cardinality formula fails");
}

void check_kmatrix(Recorder& rec, const VerifyOptions& opts) {
    for (int n = 3; n <= std::max(opts.max_n, 3); ++n) {
        bool ok = true;
        std::string detail;
        // columns = one-column shapes, all k in [0, n]
        for (int k = 0; k <= n && ok; ++k) {
            Partition shape = k == 0 ? Partition{} : Partition(std::vector<int>(k, 1));
            for (const Tableau& u : enumerate_ssyt(n, shape)) {
                auto col = u.column(1);
                if (k_complement(k_complement(col, n), n) != col) {
                    ok = false;
                    detail = "complement is not an involution";
                }
                // AI-isomorphism: K commutes with the operators and keeps deg
                for (int i = 1; i < n; ++i) {
                    Tableau ku = tableau_from_columns(
                        n, k_complement(col, n).empty()
                               ? std::vector<std::vector<int>>{}
                               : std::vector<std::vector<int>>{k_complement(col, n)});
                    if (deg(ku, i) != deg(u, i)) {
                        ok = false;
                        detail = "complement changes a degree";
                    }
                    auto bu = btil(u, i);
                    auto bku = btil(ku, i);
                    if (bu.has_value() != bku.has_value()) {
                        ok = false;
                        detail = "complement changes the domain of an operator";
                    } else if (bu) {
                        Tableau expect = tableau_from_columns(
                            n, bu->empty() ? std::vector<std::vector<int>>{}
                                           : std::vector<std::vector<int>>{
                                                 k_complement(bu->column(1), n)});
                        if (*bku != expect) {
                            ok = false;
                            detail = "complement does not commute with an operator";
                        }
                    }
                    // closed form for columns: deg is 1 exactly when one of
                    // {i, i+1} lies in the column
                    int members = 0;
                    for (int x : col)
                        if (x == i || x == i + 1) ++members;
                    if (deg(u, i) != (members == 1 ? 1 : 0)) {
                        ok = false;
                        detail = "column degree closed form fails";
                    }
                }
            }
        }
        rec.add("kmatrix/column-complement n=" + std::to_string(n), ok, detail);
    }
    for (int n = 3; n <= opts.max_n; ++n) {
        bool ok = true;
        std::string detail;
        for (const Partition& shape : partitions_up_to(opts.max_size, n)) {
            for (const Tableau& t : enumerate_ssyt(n, shape)) {
                Tableau kt = k1(t);
                if (kt.size() - t.size() != n - 2 * shape.length()) {
                    ok = false;
                    detail = "size identity fails at " + tag(n, shape);
                }
                for (int i = 1; i < n; ++i) {
                    if (deg(kt, i) != deg(t, i)) {
                        ok = false;
                        detail = "K1 changes a degree at " + tag(n, shape);
                    }
                    auto bt = btil(t, i);
                    auto bkt = btil(kt, i);
                    std::optional<Tableau> mapped;
                    if (bt) mapped = k1(*bt);
                    if (bkt != mapped) {
                        ok = false;
                        detail = "K1 does not commute with an operator at " + tag(n, shape);
                    }
                    if (auto st = standardize(t); true) {
                        std::optional<Tableau> std_bt;
                        if (bt) std_bt = standardize(*bt);
                        if (btil(st, i) != std_bt) {
                            ok = false;
                            detail = "standardization morphism fails at " + tag(n, shape);
                        }
                    }
                }
            }
        }
        rec.add("kmatrix/k1-morphism n=" + std::to_string(n), ok, detail);
    }
    for (int n = 3; n <= opts.max_n; ++n) {
        bool ok = true;
        std::string detail;
        int m = so_rank(n);
        for (const Partition& shape : partitions_up_to(opts.max_size, m)) {
            for (const Tableau& t : enumerate_ai_ssyt(n, shape)) {
                if (k1(k1(t)) != t) {
                    ok = false;
                    detail = "K1 is not an involution on AI-tableaux at " + tag(n, shape);
                }
                bool k1_ai = is_ai_tableau(k1(t));
                if (k1_ai != (2 * shape.length() == n)) {
                    ok = false;
                    detail = "K1 AI-membership law fails at " + tag(n, shape);
                }
                for (int i = 1; i < n; ++i)
                    if (auto bt = btil(t, i); bt && !is_ai_tableau(*bt)) {
                        ok = false;
                        detail = "AI-tableaux not closed under operators at " + tag(n, shape);
                    }
            }
        }
        rec.add("kmatrix/ai-closure n=" + std::to_string(n), ok, detail);
    }
}

void check_rsai(Recorder& rec, const VerifyOptions& opts) {
    for (int n = 3; n <= opts.max_n; ++n) {
        bool inj_ok = true, count_ok = true, valid_ok = true, round_ok = true, step_ok = true;
        for (int d = 0; d <= opts.max_len; ++d) {
            std::set<RsAiPair> image;
            for (const Word& w : enumerate_words(n, d)) {
                QaiResult res = q_ai(w);
                RsAiPair pair{res.p_steps.back(), res.ot};
                if (!is_valid_ot(res.ot)) valid_ok = false;
                if (!image.insert(pair).second) inj_ok = false;
                if (rs_ai_inverse(pair.p, pair.ot) != w) round_ok = false;
                for (int k = 1; k <= d; ++k) {
                    Tableau stepped =
                        standardize(row_insert(res.p_steps[static_cast<size_t>(k) - 1],
                                               w.letter(k)));
                    if (stepped != res.p_steps[static_cast<size_t>(k)]) step_ok = false;
                }
            }
            long long expected = 0;
            std::set<Partition> shapes;
            for (const auto& pair : image) shapes.insert(pair.ot.final_shape());
            for (const Partition& rho : shapes)
                expected += static_cast<long long>(enumerate_ai_ssyt(n, rho).size()) *
                            static_cast<long long>(enumerate_ot(n, d, rho).size());
            if (expected != static_cast<long long>(image.size())) count_ok = false;
            // every element of the product set is hit
            long long full = 0;
            for (const OscillatingTableau& ot : enumerate_ot(n, d))
                full += static_cast<long long>(enumerate_ai_ssyt(n, ot.final_shape()).size());
            long long words = 1;
            for (int k = 0; k < d; ++k) words *= n;
            if (full != words) count_ok = false;
        }
        std::string nstr = std::to_string(n);
        rec.add("rsai/injective n=" + nstr, inj_ok, "correspondence is not injective");
        rec.add("rsai/ot-validity n=" + nstr, valid_ok, "recorded walk violates an invariant");
        rec.add("rsai/image-count n=" + nstr, count_ok, "image does not fill the product set");
        rec.add("rsai/round-trip n=" + nstr, round_ok, "inverse does not recover the word");
        rec.add("rsai/step-identity n=" + nstr, step_ok,
                "standardized insertion disagrees with the prefix P-symbol");
    }
}

void check_tensor(Recorder& rec, const VerifyOptions& opts) {
    for (int n = 3; n <= opts.max_n; ++n) {
        bool ok = true;
        std::string detail;
        for (const Partition& rho : partitions_up_to(opts.max_size, so_rank(n))) {
            TensorStepReport report = tensor_step_decompose(n, rho);
            if (!report.matches_case_table) {
                ok = false;
                detail = tag(n, rho) + ": " + report.detail;
                break;
            }
        }
        rec.add("tensor/step-decomposition n=" + std::to_string(n), ok, detail);
    }
}

void check_branch(Recorder& rec, const VerifyOptions& opts) {
    for (int n = 3; n <= opts.max_n; ++n) {
        bool fiber_ok = true, char_ok = true, qsym_ok = true, sing_ok = true;
        for (const Partition& lambda : partitions_up_to(opts.max_size, n)) {
            BranchResult result = branch(n, lambda);
            LaurentPolynomial total(so_rank(n));
            for (const BranchFiber& fiber : result.fibers) {
                Partition rho = fiber.ot.final_shape();
                auto expected = enumerate_ai_ssyt(n, rho);
                std::set<Tableau> images;
                for (const Tableau& t : fiber.members)
                    images.insert(p_ai(column_reading(t)));
                if (images.size() != fiber.members.size() ||
                    std::vector<Tableau>(images.begin(), images.end()) != expected)
                    fiber_ok = false;
                if (rs(rs_ai_inverse(expected.front(), fiber.ot)).q !=
                    column_superstandard(lambda))
                    qsym_ok = false;
            }
            for (const auto& [rho, mult] : result.multiplicity)
                total += ch_ai(enumerate_ai_ssyt(n, rho), n).scaled(Rational(mult));
            if (total != ch_ai(enumerate_ssyt(n, lambda), n)) char_ok = false;
            // singular elements count the multiplicities
            for (const Partition& rho : partitions_up_to(opts.max_size, so_rank(n))) {
                long long count = 0;
                for (const Tableau& t : enumerate_ssyt(n, lambda))
                    if (is_singular(t, rho)) ++count;
                long long mult = result.multiplicity_of(rho);
                long long expect = 2 * rho.length() == n ? 2 * mult : mult;
                if (count != expect) sing_ok = false;
            }
        }
        std::string nstr = std::to_string(n);
        rec.add("branch/fibers-exhaust n=" + nstr, fiber_ok,
                "a fiber does not enumerate the AI-tableaux of its shape");
        rec.add("branch/character-sum n=" + nstr, char_ok,
                "character does not match the multiplicity sum");
        rec.add("branch/common-q-symbol n=" + nstr, qsym_ok,
                "recorded walks do not share the column-superstandard Q-symbol");
        rec.add("branch/singular-count n=" + nstr, sing_ok,
                "singular elements do not count the multiplicities");
    }
}

void check_singular(Recorder& rec, const VerifyOptions& opts) {
    for (int n = 3; n <= opts.max_n; ++n) {
        bool ok = true;
        std::string detail;
        int m = so_rank(n);
        for (const Partition& rho : partitions_up_to(opts.max_size, m)) {
            Tableau canonical = t_rho(n, rho);
            if (!is_ai_tableau(canonical)) {
                ok = false;
                detail = "canonical element is not an AI-tableau at " + tag(n, rho);
            }
            for (const Partition& sigma : partitions_up_to(opts.max_size, m)) {
                std::set<Tableau> found;
                for (const Tableau& t : enumerate_ai_ssyt(n, rho))
                    if (is_singular(t, sigma)) found.insert(t);
                std::set<Tableau> expect;
                if (sigma == rho) {
                    expect.insert(canonical);
                    if (2 * rho.length() == n) expect.insert(k1(canonical));
                }
                if (found != expect) {
                    ok = false;
                    detail = "classification fails at " + tag(n, rho) + " degree " +
                             sigma.to_string();
                }
            }
        }
        rec.add("singular/classification n=" + std::to_string(n), ok, detail);
    }
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    return {"axioms", "gl", "counts", "kmatrix", "rsai", "tensor", "branch", "singular", "all"};
}

std::vector<CheckResult> run_verify_suite(const std::string& suite, const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    Recorder rec{out};
    bool all = suite == "all";
    bool known = all;
    auto dispatch = [&](const std::string& name, auto&& check) {
        if (all || suite == name) {
            known = true;
            check(rec, opts);
        }
    };
    dispatch("axioms", check_axioms);
    dispatch("gl", check_gl);
    dispatch("counts", check_counts);
    dispatch("kmatrix", check_kmatrix);
    dispatch("rsai", check_rsai);
    dispatch("tensor", check_tensor);
    dispatch("branch", check_branch);
    dispatch("singular", check_singular);
    if (!known) throw std::invalid_argument("unknown verify suite: " + suite);
    return out;
}

}  // namespace aicrystal
