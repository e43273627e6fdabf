#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "aicrystal/partition.hpp"

namespace aicrystal {

struct CrystalEdge {
    int from = 0;
    int to = 0;
    int color = 0;  // the operator index i
    auto operator<=>(const CrystalEdge&) const = default;
};

struct CrystalGraph {
    bool directed = true;              // arrows for F_i; undirected for B_i
    std::vector<std::string> labels;   // node labels in canonical order
    std::vector<CrystalEdge> edges;    // sorted (from, to, color)
};

// Crystal graph of SST_n(shape): nodes in canonical order, i-colored arrows
// b -> F_i b.
CrystalGraph gl_crystal_graph(int n, const Partition& shape);

// AI-crystal graph of SST_n(shape) (undirected, edges b -- B_i b), or of
// SST_n^{AI}(shape) when ai_tableaux_only is set.
CrystalGraph ai_crystal_graph(int n, const Partition& shape, bool ai_tableaux_only = false);

std::string to_dot(const CrystalGraph& g);
nlohmann::json graph_to_json(const CrystalGraph& g);

}  // namespace aicrystal
