#pragma once

#include <json.hpp>

#include "aicrystal/oscillating.hpp"
#include "aicrystal/tableau.hpp"

namespace aicrystal {

// Shared wire formats:
//   tableau: {"n":4,"shape":[4,2,1],"rows":[[1,2,3,3],[2,3],[4]]}
//   word:    {"n":4,"letters":[4,2,3,1,3,2]}
//   ot:      {"n":4,"steps":[{"shape":[],"sign":0},{"shape":[1],"sign":"+"},...]}
//   qsymbol: {"q1":<tableau>,"q2":[[1,2],[3,5,"+"],[4,7,"-"],[5]]}
nlohmann::json to_json(const Tableau& t);
nlohmann::json to_json(const Word& w);
nlohmann::json to_json(const OscillatingTableau& ot);
nlohmann::json to_json(const AiQSymbol& q);

Tableau tableau_from_json(const nlohmann::json& j);
Word word_from_json(const nlohmann::json& j);
OscillatingTableau ot_from_json(const nlohmann::json& j);
AiQSymbol qsymbol_from_json(const nlohmann::json& j);

}  // namespace aicrystal
