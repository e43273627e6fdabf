#include <CLI11.hpp>
#include <iostream>
#include <sstream>
#include <string>

#include "aicrystal/ai_crystal.hpp"
#include "aicrystal/branching.hpp"
#include "aicrystal/enumerate.hpp"
#include "aicrystal/gl_crystal.hpp"
#include "aicrystal/graph_export.hpp"
#include "aicrystal/insertion.hpp"
#include "aicrystal/json_io.hpp"
#include "aicrystal/kmatrix.hpp"
#include "aicrystal/rs_ai.hpp"
#include "aicrystal/verify.hpp"

namespace {

using namespace aicrystal;
using nlohmann::json;

Partition parse_shape(const std::string& text) {
    if (text.empty() || text == "0") return Partition{};
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(std::stoi(item));
    return Partition(std::move(parts));
}

std::vector<int> parse_letters(const std::string& text) {
    std::vector<int> letters;
    if (text.empty()) return letters;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) letters.push_back(std::stoi(item));
    return letters;
}

std::string render_shape(const Partition& shape) { return shape.to_string(); }

int cmd_enumerate(int n, const std::string& shape_text, bool ai, bool count_only,
                  const std::string& format) {
    Partition shape = parse_shape(shape_text);
    if (ai && n < 3) throw std::invalid_argument("--ai requires n >= 3");
    auto tableaux = ai ? enumerate_ai_ssyt(n, shape) : enumerate_ssyt(n, shape);
    if (count_only) {
        std::cout << tableaux.size() << "\n";
        return 0;
    }
    if (format == "text") {
        for (const Tableau& t : tableaux) std::cout << t.to_string() << "\n";
        return 0;
    }
    json out = json::array();
    for (const Tableau& t : tableaux) out.push_back(to_json(t));
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_graph(int n, const std::string& shape_text, bool ai, const std::string& format) {
    Partition shape = parse_shape(shape_text);
    if (ai && n < 3) throw std::invalid_argument("--ai requires n >= 3");
    CrystalGraph g = ai ? ai_crystal_graph(n, shape) : gl_crystal_graph(n, shape);
    if (format == "json")
        std::cout << graph_to_json(g).dump() << "\n";
    else
        std::cout << to_dot(g);
    return 0;
}

int cmd_char(int n, const std::string& shape_text, bool ai, const std::string& format) {
    Partition shape = parse_shape(shape_text);
    LaurentPolynomial poly(0);
    std::vector<std::string> names;
    if (ai) {
        if (n < 3) throw std::invalid_argument("--ai requires n >= 3");
        poly = ch_ai(enumerate_ai_ssyt(n, shape), n);
        if (!poly.is_integral())
            throw std::logic_error("character has non-integer coefficients");
        names = so_variable_names(so_rank(n));
    } else {
        poly = ch_gl(enumerate_ssyt(n, shape), n);
        names = gl_variable_names(n);
    }
    if (format == "json") {
        json terms = json::array();
        for (const auto& [e, c] : poly.terms())
            terms.push_back({{"exponents", e}, {"coefficient", c.numerator()}});
        std::cout << json{{"variables", names}, {"terms", std::move(terms)}}.dump() << "\n";
    } else {
        std::cout << poly.to_string(names) << "\n";
    }
    return 0;
}

int cmd_rs(const std::string& word_text, int n, const std::string& format) {
    std::vector<int> letters = parse_letters(word_text);
    int bound = n;
    if (bound == 0)
        for (int l : letters) bound = std::max(bound, l);
    if (bound == 0) bound = 1;
    Word w(bound, letters);
    if (format == "json") {
        RsPair pq = rs(w);
        std::cout << json{{"word", to_json(w)}, {"p", to_json(pq.p)}, {"q", to_json(pq.q)}}.dump()
                  << "\n";
        return 0;
    }
    Tableau p(bound, {});
    Tableau q(w.length(), {});
    for (int k = 1; k <= w.length(); ++k) {
        Word prefix(bound, std::vector<int>(letters.begin(), letters.begin() + k));
        RsPair pq = rs(prefix);
        std::cout << "k=" << k << " insert " << w.letter(k) << ": P=" << pq.p.to_string()
                  << " Q=" << pq.q.to_string() << "\n";
        p = pq.p;
        q = pq.q;
    }
    std::cout << "P=" << p.to_string() << "\n";
    std::cout << "Q=" << q.to_string() << "\n";
    return 0;
}

std::string render_q2(const std::vector<QMark>& q2) {
    std::string out = "{";
    for (size_t k = 0; k < q2.size(); ++k) {
        if (k) out += ',';
        out += '{';
        if (q2[k].l) out += std::to_string(*q2[k].l) + ",";
        out += std::to_string(q2[k].k);
        if (q2[k].sign != Sign::none) out += "," + sign_to_string(q2[k].sign);
        out += '}';
    }
    out += '}';
    return out;
}

int cmd_rsai(int n, const std::string& word_text, const std::string& format) {
    Word w(n, parse_letters(word_text));
    QaiResult res = q_ai(w);
    if (format == "json") {
        std::cout << json{{"word", to_json(w)},
                          {"p", to_json(res.p_steps.back())},
                          {"q", to_json(res.q)},
                          {"ot", to_json(res.ot)}}
                         .dump()
                  << "\n";
        return 0;
    }
    for (int k = 1; k <= w.length(); ++k) {
        const OtStep& step = res.ot.steps[static_cast<size_t>(k)];
        std::cout << "k=" << k << " insert " << w.letter(k) << ": P=";
        std::cout << res.p_steps[static_cast<size_t>(k)].to_string()
                  << " shape=" << render_shape(step.shape);
        if (step.sign != Sign::none) std::cout << " sign=" << sign_to_string(step.sign);
        std::cout << "\n";
    }
    std::cout << "P=" << res.p_steps.back().to_string() << "\n";
    std::cout << "Q1=" << res.q.q1.to_string() << "\n";
    std::cout << "Q2=" << render_q2(res.q.q2) << "\n";
    return 0;
}

int cmd_branch(int n, const std::string& shape_text, const std::string& format) {
    Partition lambda = parse_shape(shape_text);
    BranchResult result = branch(n, lambda);
    int m = so_rank(n);
    std::vector<std::pair<Partition, long long>> rows(result.multiplicity.begin(),
                                                      result.multiplicity.end());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a > b; });
    if (format == "json") {
        json table = json::array();
        for (const auto& [rho, mult] : rows) {
            json entry{{"rho", rho.parts()}, {"multiplicity", mult}};
            if (2 * rho.length() == n) {
                entry["nu_plus"] = nu_plus(rho, m).coords;
                entry["nu_minus"] = nu_minus(rho, m).coords;
            } else {
                entry["nu"] = nu_of(rho, m).coords;
            }
            table.push_back(std::move(entry));
        }
        std::cout << json{{"n", n}, {"lambda", lambda.parts()}, {"table", std::move(table)}}.dump()
                  << "\n";
        return 0;
    }
    std::string out = "{";
    for (size_t k = 0; k < rows.size(); ++k) {
        if (k) out += ',';
        out += render_shape(rows[k].first) + ":" + std::to_string(rows[k].second);
    }
    out += '}';
    std::cout << out << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opts, const std::string& format) {
    auto results = run_verify_suite(suite, opts);
    bool all_passed = true;
    if (format == "json") {
        json out = json::array();
        for (const CheckResult& r : results) {
            out.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
            all_passed = all_passed && r.passed;
        }
        std::cout << out.dump() << "\n";
    } else {
        for (const CheckResult& r : results) {
            std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
            if (!r.passed && !r.detail.empty()) std::cout << " -- " << r.detail;
            std::cout << "\n";
            all_passed = all_passed && r.passed;
        }
        std::cout << (all_passed ? "verify: all checks passed" : "verify: FAILURES") << "\n";
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tableau model for the polynomial representations of SO_n"};
    app.require_subcommand(1);

    int n = 3;
    std::string shape_text;
    std::string word_text;
    bool ai = false;
    bool count_only = false;
    std::string enumerate_format = "json", graph_format = "dot", char_format = "text";
    std::string rs_format = "text", rsai_format = "text", branch_format = "text";
    std::string verify_format = "text";

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List tableaux of a shape");
    enumerate_cmd->add_option("--n", n, "alphabet bound")->required();
    enumerate_cmd->add_option("--shape", shape_text, "comma-separated parts; 0 or empty = empty");
    enumerate_cmd->add_flag("--ai", ai, "restrict to AI-tableaux");
    enumerate_cmd->add_flag("--count", count_only, "print the cardinality only");
    enumerate_cmd->add_option("--format", enumerate_format, "json|text");

    auto* graph_cmd = app.add_subcommand("graph", "Export a crystal graph");
    graph_cmd->add_option("--n", n, "alphabet bound")->required();
    graph_cmd->add_option("--shape", shape_text, "shape");
    graph_cmd->add_flag("--ai", ai, "AI-crystal graph (undirected)");
    graph_cmd->add_option("--format", graph_format, "dot|json");

    auto* char_cmd = app.add_subcommand("char", "Print a character");
    char_cmd->add_option("--n", n, "alphabet bound")->required();
    char_cmd->add_option("--shape", shape_text, "shape");
    char_cmd->add_flag("--ai", ai, "AI-character of the AI-tableaux of the shape");
    char_cmd->add_option("--format", char_format, "text|json");

    auto* rs_cmd = app.add_subcommand("rs", "Robinson-Schensted transcript");
    int rs_n = 0;
    rs_cmd->add_option("--word", word_text, "comma-separated letters")->required();
    rs_cmd->add_option("--n", rs_n, "alphabet bound (default: largest letter)");
    rs_cmd->add_option("--format", rs_format, "text|json");

    auto* rsai_cmd = app.add_subcommand("rsai", "AI-correspondence transcript");
    rsai_cmd->add_option("--n", n, "alphabet bound")->required();
    rsai_cmd->add_option("--word", word_text, "comma-separated letters");
    rsai_cmd->add_option("--format", rsai_format, "text|json");

    auto* branch_cmd = app.add_subcommand("branch", "Branching multiplicities");
    branch_cmd->add_option("--n", n, "alphabet bound")->required();
    branch_cmd->add_option("--shape", shape_text, "shape");
    branch_cmd->add_option("--format", branch_format, "text|json");

    auto* verify_cmd = app.add_subcommand("verify", "Run invariant suites");
    std::string suite = "all";
    VerifyOptions opts;
    verify_cmd->add_option("--suite", suite, "axioms|gl|counts|kmatrix|rsai|tensor|branch|singular|all");
    verify_cmd->add_option("--max-n", opts.max_n, "largest alphabet bound");
    verify_cmd->add_option("--max-size", opts.max_size, "largest shape size");
    verify_cmd->add_option("--max-len", opts.max_len, "largest word length");
    verify_cmd->add_option("--format", verify_format, "text|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(enumerate_cmd))
            return cmd_enumerate(n, shape_text, ai, count_only, enumerate_format);
        if (app.got_subcommand(graph_cmd)) return cmd_graph(n, shape_text, ai, graph_format);
        if (app.got_subcommand(char_cmd)) return cmd_char(n, shape_text, ai, char_format);
        if (app.got_subcommand(rs_cmd)) return cmd_rs(word_text, rs_n, rs_format);
        if (app.got_subcommand(rsai_cmd)) return cmd_rsai(n, word_text, rsai_format);
        if (app.got_subcommand(branch_cmd)) return cmd_branch(n, shape_text, branch_format);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(suite, opts, verify_format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
