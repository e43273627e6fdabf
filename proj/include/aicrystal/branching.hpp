#pragma once

#include <map>
#include <string>
#include <vector>

#include "aicrystal/ai_crystal.hpp"
#include "aicrystal/oscillating.hpp"
#include "aicrystal/rs_ai.hpp"
#include "aicrystal/tableau.hpp"

namespace aicrystal {

// The column-superstandard tableau: columns filled left to right with
// 1, 2, 3, ... downward; entry (i, j) = d_1 + ... + d_{j-1} + i. It is the
// common Q-symbol of the column readings of all tableaux of that shape.
Tableau column_superstandard(const Partition& shape);

// The gl Q-symbol shared by every word in the AI-component of the words
// recorded by ot; computed by inverting the correspondence at the canonical
// minimal AI P-symbol.
Tableau q_symbol_of_ot(const OscillatingTableau& ot);

struct BranchFiber {
    OscillatingTableau ot;
    std::vector<Tableau> members;  // sorted subsets of SST_n(lambda)
};

struct BranchResult {
    int n = 3;
    Partition lambda;
    // Multiplicity of each final shape rho; only nonzero entries are stored.
    std::map<Partition, long long> multiplicity;
    std::vector<BranchFiber> fibers;

    long long multiplicity_of(const Partition& rho) const;
};

// Groups SST_n(lambda) by the oscillating tableau of the column reading.
// Each fiber is one copy of SST_n^{AI}(rho) with rho the final shape.
BranchResult branch(int n, const Partition& lambda);

struct TensorComponent {
    Partition sigma;            // shape of standardize(T <- l), constant on it
    Partition inserted_shape;   // shape of (T <- l), constant on it
    Sign sign = Sign::none;     // set on the doubled components only
    std::vector<AiTensorElement> members;
};

struct TensorStepReport {
    int n = 3;
    Partition rho;
    std::vector<TensorComponent> components;
    bool matches_case_table = false;
    std::string detail;
};

// Decomposes SST_n^{AI}(rho) (x) SST_n(1) into AI-connected components and
// checks the component multiset against the four-case description: shapes
// sigma covering or covered by rho (plus sigma = rho when n is odd at full
// rank; with the rank-dropping shape doubled and sign-split when n is even
// and rho_m = 1), each component of size |SST_n^{AI}(sigma)|.
TensorStepReport tensor_step_decompose(int n, const Partition& rho);

}  // namespace aicrystal
