#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "aicrystal/partition.hpp"
#include "aicrystal/tableau.hpp"

namespace aicrystal {

enum class Sign { none, plus, minus };

std::string sign_to_string(Sign s);

struct OtStep {
    Partition shape;
    Sign sign = Sign::none;
    auto operator<=>(const OtStep&) const = default;
};

// An so_n-oscillating tableau: a walk on partitions starting at the empty
// shape, each step staying, adding, or removing one cell. Stays are allowed
// only for n odd at full rank; signs appear exactly on the rank-dropping
// removals when n is even.
struct OscillatingTableau {
    int n = 3;
    std::vector<OtStep> steps;  // steps[0] = (empty, none)

    int length() const { return static_cast<int>(steps.size()) - 1; }
    const Partition& final_shape() const { return steps.back().shape; }

    auto operator<=>(const OscillatingTableau&) const = default;
};

bool is_valid_ot(const OscillatingTableau& ot);

// One entry of the marked-set component of a Q-symbol: {k}, {l,k} or {l,k,s}.
struct QMark {
    std::optional<int> l;
    int k = 0;
    Sign sign = Sign::none;
    auto operator<=>(const QMark&) const = default;
};

// Encoding of an oscillating tableau as (standard tableau, marked sets).
struct AiQSymbol {
    Tableau q1;
    std::vector<QMark> q2;  // ordered by k
    auto operator<=>(const AiQSymbol&) const = default;
};

// The injective encoding ot -> (Q1, Q2) and its inverse.
AiQSymbol ot_to_q(const OscillatingTableau& ot);
OscillatingTableau q_to_ot(const AiQSymbol& q, int n);

// All valid oscillating tableaux of the given length; optionally only those
// with the given final shape.
std::vector<OscillatingTableau> enumerate_ot(int n, int length);
std::vector<OscillatingTableau> enumerate_ot(int n, int length, const Partition& shape);

}  // namespace aicrystal
