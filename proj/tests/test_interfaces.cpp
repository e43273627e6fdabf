#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aicrystal/enumerate.hpp"
#include "aicrystal/graph_export.hpp"
#include "aicrystal/json_io.hpp"
#include "aicrystal/rs_ai.hpp"
#include "aicrystal/verify.hpp"

using namespace aicrystal;
using nlohmann::json;

TEST_CASE("tableau wire format") {
    Tableau t(4, {{1, 2, 3, 3}, {2, 3}, {4}});
    json j = to_json(t);
    CHECK(j.dump() == R"({"n":4,"rows":[[1,2,3,3],[2,3],[4]],"shape":[4,2,1]})");
    CHECK(tableau_from_json(j) == t);
    CHECK(tableau_from_json(json::parse(R"({"n":3,"shape":[],"rows":[]})")) == Tableau(3, {}));
    CHECK_THROWS_AS(tableau_from_json(json::parse(R"({"n":3,"shape":[2],"rows":[[1],[2]]})")),
                    std::invalid_argument);
}

TEST_CASE("word wire format") {
    Word w(4, {4, 2, 3, 1, 3, 2});
    json j = to_json(w);
    CHECK(j.dump() == R"({"letters":[4,2,3,1,3,2],"n":4})");
    CHECK(word_from_json(j) == w);
}

TEST_CASE("round trips through the wire formats") {
    for (const Partition& shape : partitions_up_to(3, 3))
        for (const Tableau& t : enumerate_ssyt(3, shape))
            CHECK(tableau_from_json(to_json(t)) == t);
    for (const Word& w : enumerate_words(3, 3)) CHECK(word_from_json(to_json(w)) == w);
}

TEST_CASE("walk and symbol wire formats") {
    QaiResult res = q_ai(Word(4, {1, 1, 4, 2, 1, 1, 1}));
    json jot = to_json(res.ot);
    CHECK(jot["steps"][0] == json::parse(R"({"shape":[],"sign":0})"));
    CHECK(jot["steps"][5] == json::parse(R"({"shape":[1],"sign":"+"})"));
    CHECK(ot_from_json(jot) == res.ot);

    json jq = to_json(res.q);
    CHECK(jq["q2"].dump() == R"([[1,2],[3,5,"+"],[4,7,"-"]])");
    CHECK(qsymbol_from_json(jq) == res.q);

    // a stay step encodes as a singleton
    json jq5 = to_json(q_ai(Word(5, {1, 1, 4, 2, 1})).q);
    CHECK(jq5["q2"].dump() == R"([[1,2],[5]])");
}

TEST_CASE("graph exports") {
    CrystalGraph gl = gl_crystal_graph(3, Partition({2, 1}));
    CHECK(gl.directed);
    CHECK(gl.labels.size() == 8);
    CHECK(gl.edges.size() == 8);

    CrystalGraph ai = ai_crystal_graph(3, Partition({2, 1}));
    CHECK_FALSE(ai.directed);
    CHECK(ai.labels.size() == 8);
    CHECK(ai.edges.size() == 6);

    CrystalGraph single = gl_crystal_graph(3, Partition{});
    CHECK(single.labels.size() == 1);
    CHECK(single.edges.empty());

    std::string dot = to_dot(gl);
    CHECK(dot.find("digraph") == 0);
    CHECK(dot.find("n0 [label=\"1,1,2\"]") != std::string::npos);
    CHECK(to_dot(ai).find("graph") == 0);
    CHECK(to_dot(ai).find("--") != std::string::npos);
    CHECK(to_dot(gl) == to_dot(gl_crystal_graph(3, Partition({2, 1}))));

    json jg = graph_to_json(ai);
    CHECK(jg["nodes"].size() == 8);
    CHECK(jg["edges"].size() == 6);

    // restricted to the AI-tableaux of a one-row shape: a 5-vertex path
    CrystalGraph restricted = ai_crystal_graph(3, Partition({2}), true);
    CHECK(restricted.labels.size() == 5);
    CHECK(restricted.edges.size() == 4);
}

TEST_CASE("verify suites run clean at desk scale") {
    VerifyOptions opts;
    opts.max_n = 3;
    opts.max_size = 3;
    opts.max_len = 3;
    for (const std::string& suite : {"axioms", "counts", "gl"})
        for (const CheckResult& r : run_verify_suite(suite, opts)) {
            INFO(r.name, ": ", r.detail);
            CHECK(r.passed);
        }
    CHECK_THROWS_AS(run_verify_suite("nope", opts), std::invalid_argument);
}
