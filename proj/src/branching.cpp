#include "aicrystal/branching.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "aicrystal/enumerate.hpp"
#include "aicrystal/insertion.hpp"
#include "aicrystal/kmatrix.hpp"

namespace aicrystal {

Tableau column_superstandard(const Partition& shape) {
    std::vector<std::vector<int>> rows(static_cast<size_t>(shape.length()));
    int filled = 0;
    for (int j = 1; j <= shape.part(1); ++j) {
        int height = shape.column_length(j);
        for (int i = 1; i <= height; ++i) rows[static_cast<size_t>(i) - 1].push_back(filled + i);
        filled += height;
    }
    return Tableau(shape.size(), std::move(rows));
}

Tableau q_symbol_of_ot(const OscillatingTableau& ot) {
    auto base = enumerate_ai_ssyt(ot.n, ot.final_shape());
    if (base.empty()) throw std::invalid_argument("q_symbol_of_ot: no AI-tableaux of this shape");
    return rs(rs_ai_inverse(base.front(), ot)).q;
}

long long BranchResult::multiplicity_of(const Partition& rho) const {
    auto it = multiplicity.find(rho);
    return it == multiplicity.end() ? 0 : it->second;
}

BranchResult branch(int n, const Partition& lambda) {
    if (lambda.length() > n) throw std::invalid_argument("branch: shape has more than n rows");
    BranchResult result;
    result.n = n;
    result.lambda = lambda;
    std::map<OscillatingTableau, std::vector<Tableau>> fibers;
    for (const Tableau& t : enumerate_ssyt(n, lambda))
        fibers[q_ai(column_reading(t)).ot].push_back(t);
    for (auto& [ot, members] : fibers) {
        std::sort(members.begin(), members.end());
        ++result.multiplicity[ot.final_shape()];
        result.fibers.push_back({ot, members});
    }
    return result;
}

namespace {

// Expected component shapes per the four-case decomposition, as a sorted
// multiset of (sigma, sign).
std::vector<std::pair<Partition, Sign>> expected_components(int n, const Partition& rho) {
    int m = so_rank(n);
    std::vector<std::pair<Partition, Sign>> expected;
    auto add_covers = [&](bool keep_full_rank_only) {
        // shapes covering rho
        for (int r = 1; r <= std::min(rho.length() + 1, m); ++r) {
            if (r > 1 && rho.part(r) == rho.part(r - 1)) continue;
            auto parts = rho.parts();
            if (r <= rho.length())
                ++parts[static_cast<size_t>(r) - 1];
            else
                parts.push_back(1);
            Partition sigma(parts);
            if (keep_full_rank_only && sigma.length() != m) continue;
            expected.emplace_back(sigma, Sign::none);
        }
        // shapes covered by rho
        for (int r = 1; r <= rho.length(); ++r) {
            if (r < rho.length() && rho.part(r) == rho.part(r + 1)) continue;
            auto parts = rho.parts();
            --parts[static_cast<size_t>(r) - 1];
            if (parts.back() == 0) parts.pop_back();
            Partition sigma(parts);
            if (keep_full_rank_only && sigma.length() != m) continue;
            expected.emplace_back(sigma, Sign::none);
        }
    };
    if (n % 2 == 0 && rho.part(m) == 1) {
        add_covers(true);
        auto parts = rho.parts();
        parts.pop_back();
        Partition reduced(parts);
        expected.emplace_back(reduced, Sign::plus);
        expected.emplace_back(reduced, Sign::minus);
    } else if (n % 2 == 1 && rho.part(m) != 0) {
        add_covers(false);
        expected.emplace_back(rho, Sign::none);
    } else {
        add_covers(false);
    }
    std::sort(expected.begin(), expected.end());
    return expected;
}

}  // namespace

TensorStepReport tensor_step_decompose(int n, const Partition& rho) {
    int m = so_rank(n);
    if (rho.length() > m)
        throw std::invalid_argument("tensor_step_decompose: shape has more than m rows");
    TensorStepReport report;
    report.n = n;
    report.rho = rho;

    std::vector<AiTensorElement> carrier;
    for (const Tableau& t : enumerate_ai_ssyt(n, rho))
        for (int l = 1; l <= n; ++l)
            carrier.push_back({t, Tableau(n, {{l}})});

    std::ostringstream issues;
    std::set<AiTensorElement> seen;
    for (const AiTensorElement& start : carrier) {
        if (seen.count(start)) continue;
        auto component = ai_component(start);
        seen.insert(component.begin(), component.end());

        TensorComponent info;
        info.members.assign(component.begin(), component.end());
        bool constant = true;
        for (const AiTensorElement& el : component) {
            Tableau inserted = row_insert(el.left, el.right.at(1, 1));
            Partition sigma = standardize(inserted).shape();
            Partition inserted_shape = inserted.shape();
            if (el == *component.begin()) {
                info.sigma = sigma;
                info.inserted_shape = inserted_shape;
            } else if (sigma != info.sigma || inserted_shape != info.inserted_shape) {
                constant = false;
            }
        }
        if (!constant)
            issues << "component of " << start.left.to_string()
                   << " has non-constant target shapes; ";
        if (n % 2 == 0 && rho.part(m) == 1 && info.sigma.length() == m - 1)
            info.sign = info.inserted_shape.length() > m ? Sign::plus : Sign::minus;
        report.components.push_back(std::move(info));
    }
    std::sort(report.components.begin(), report.components.end(),
              [](const TensorComponent& a, const TensorComponent& b) {
                  return std::tie(a.sigma, a.sign, a.members) <
                         std::tie(b.sigma, b.sign, b.members);
              });

    std::vector<std::pair<Partition, Sign>> observed;
    for (const TensorComponent& comp : report.components) {
        observed.emplace_back(comp.sigma, comp.sign);
        size_t expected_size = enumerate_ai_ssyt(n, comp.sigma).size();
        if (comp.members.size() != expected_size)
            issues << "component for " << comp.sigma.to_string() << " has " << comp.members.size()
                   << " elements, expected " << expected_size << "; ";
    }
    std::sort(observed.begin(), observed.end());
    auto expected = expected_components(n, rho);
    if (observed != expected) {
        issues << "component shape multiset differs from the case table; ";
    }
    report.detail = issues.str();
    report.matches_case_table = report.detail.empty();
    return report;
}

}  // namespace aicrystal
