#include "aicrystal/json_io.hpp"

#include <stdexcept>

namespace aicrystal {

using nlohmann::json;

json to_json(const Tableau& t) {
    json j;
    j["n"] = t.n();
    j["shape"] = t.shape().parts();
    j["rows"] = t.rows();
    return j;
}

json to_json(const Word& w) {
    json j;
    j["n"] = w.n();
    j["letters"] = w.letters();
    return j;
}

namespace {

json sign_to_json(Sign s) {
    if (s == Sign::none) return json(0);
    return json(sign_to_string(s));
}

Sign sign_from_json(const json& j) {
    if (j.is_number() && j.get<int>() == 0) return Sign::none;
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "+") return Sign::plus;
        if (s == "-") return Sign::minus;
    }
    throw std::invalid_argument("json: bad sign value");
}

}  // namespace

json to_json(const OscillatingTableau& ot) {
    json steps = json::array();
    for (const OtStep& step : ot.steps) {
        json s;
        s["shape"] = step.shape.parts();
        s["sign"] = sign_to_json(step.sign);
        steps.push_back(std::move(s));
    }
    json j;
    j["n"] = ot.n;
    j["steps"] = std::move(steps);
    return j;
}

json to_json(const AiQSymbol& q) {
    json marks = json::array();
    for (const QMark& mark : q.q2) {
        json entry = json::array();
        if (mark.l) entry.push_back(*mark.l);
        entry.push_back(mark.k);
        if (mark.sign != Sign::none) entry.push_back(sign_to_string(mark.sign));
        marks.push_back(std::move(entry));
    }
    json j;
    j["q1"] = to_json(q.q1);
    j["q2"] = std::move(marks);
    return j;
}

Tableau tableau_from_json(const json& j) {
    Tableau t(j.at("n").get<int>(), j.at("rows").get<std::vector<std::vector<int>>>());
    if (j.contains("shape") &&
        j.at("shape").get<std::vector<int>>() != t.shape().parts())
        throw std::invalid_argument("json: tableau shape disagrees with rows");
    return t;
}

Word word_from_json(const json& j) {
    return Word(j.at("n").get<int>(), j.at("letters").get<std::vector<int>>());
}

OscillatingTableau ot_from_json(const json& j) {
    OscillatingTableau ot;
    ot.n = j.at("n").get<int>();
    for (const json& s : j.at("steps"))
        ot.steps.push_back(
            {Partition(s.at("shape").get<std::vector<int>>()), sign_from_json(s.at("sign"))});
    return ot;
}

AiQSymbol qsymbol_from_json(const json& j) {
    AiQSymbol q;
    q.q1 = tableau_from_json(j.at("q1"));
    for (const json& entry : j.at("q2")) {
        QMark mark;
        std::vector<int> ints;
        for (const json& item : entry) {
            if (item.is_string())
                mark.sign = sign_from_json(item);
            else
                ints.push_back(item.get<int>());
        }
        if (ints.size() == 1) {
            mark.k = ints[0];
        } else if (ints.size() == 2) {
            mark.l = ints[0];
            mark.k = ints[1];
        } else {
            throw std::invalid_argument("json: bad q2 entry");
        }
        q.q2.push_back(mark);
    }
    return q;
}

}  // namespace aicrystal
