#pragma once

#include <vector>

#include "aicrystal/oscillating.hpp"
#include "aicrystal/tableau.hpp"

namespace aicrystal {

// P-symbol of the AI-correspondence: standardize(P(w)).
Tableau p_ai(const Word& w);

struct QaiResult {
    AiQSymbol q;
    OscillatingTableau ot;
    // P^{AI,k} for k = 0..d (prefix AI P-symbols); p_steps[k] has shape
    // ot.steps[k].shape.
    std::vector<Tableau> p_steps;
};

// Recording data of the AI-correspondence: the Q-symbol together with the
// shape walk. On a stay the step index joins the marked sets; on a growth it
// joins Q1; on a removal the leaving entry is recovered by reverse insertion
// and the pair (with a sign at rank-dropping removals for n even) joins the
// marked sets.
QaiResult q_ai(const Word& w);

struct RsAiPair {
    Tableau p;
    OscillatingTableau ot;
    auto operator<=>(const RsAiPair&) const = default;
};

RsAiPair rs_ai(const Word& w);

// The unique word w with rs_ai(w) == (p, ot). Each backward step searches the
// fiber of T' (x) letter over the known AI P-symbol, matching the recorded
// sign; the step maps are bijective on these fibers. Throws when the pair is
// not in the image.
Word rs_ai_inverse(const Tableau& p, const OscillatingTableau& ot);

}  // namespace aicrystal
