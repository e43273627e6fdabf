#include "aicrystal/graph_export.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "aicrystal/ai_crystal.hpp"
#include "aicrystal/enumerate.hpp"
#include "aicrystal/gl_crystal.hpp"
#include "aicrystal/kmatrix.hpp"

namespace aicrystal {

namespace {

std::string node_label(const Tableau& t) {
    auto word = t.row_word();
    if (word.empty()) return "∅";
    std::string out;
    for (size_t k = 0; k < word.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(word[k]);
    }
    return out;
}

CrystalGraph build_graph(int n, const std::vector<Tableau>& nodes, bool directed) {
    CrystalGraph g;
    g.directed = directed;
    std::map<Tableau, int> index;
    for (const Tableau& t : nodes) {
        index.emplace(t, static_cast<int>(g.labels.size()));
        g.labels.push_back(node_label(t));
    }
    for (const Tableau& t : nodes) {
        int from = index.at(t);
        for (int i = 1; i < n; ++i) {
            auto img = directed ? ftil(t, i) : btil(t, i);
            if (!img) continue;
            auto it = index.find(*img);
            if (it == index.end()) continue;  // target outside the node set
            int to = it->second;
            if (!directed && to < from) continue;  // one record per undirected edge
            g.edges.push_back({from, to, i});
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

}  // namespace

CrystalGraph gl_crystal_graph(int n, const Partition& shape) {
    return build_graph(n, enumerate_ssyt(n, shape), true);
}

CrystalGraph ai_crystal_graph(int n, const Partition& shape, bool ai_tableaux_only) {
    auto nodes = ai_tableaux_only ? enumerate_ai_ssyt(n, shape) : enumerate_ssyt(n, shape);
    return build_graph(n, nodes, false);
}

std::string to_dot(const CrystalGraph& g) {
    std::ostringstream out;
    out << (g.directed ? "digraph crystal {\n" : "graph crystal {\n");
    for (size_t k = 0; k < g.labels.size(); ++k)
        out << "  n" << k << " [label=\"" << g.labels[k] << "\"];\n";
    for (const CrystalEdge& e : g.edges)
        out << "  n" << e.from << (g.directed ? " -> n" : " -- n") << e.to << " [label=\""
            << e.color << "\"];\n";
    out << "}\n";
    return out.str();
}

nlohmann::json graph_to_json(const CrystalGraph& g) {
    nlohmann::json nodes = nlohmann::json::array();
    for (size_t k = 0; k < g.labels.size(); ++k)
        nodes.push_back({{"id", k}, {"label", g.labels[k]}});
    nlohmann::json edges = nlohmann::json::array();
    for (const CrystalEdge& e : g.edges)
        edges.push_back({{"from", e.from}, {"to", e.to}, {"i", e.color}});
    return {{"directed", g.directed}, {"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

}  // namespace aicrystal
