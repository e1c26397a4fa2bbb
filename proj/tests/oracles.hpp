#pragma once
// Test-only oracles kept independent of the library paths they check: the
// grid search over symmetric monotone decision rules and argmax-set
// enumeration over committees.

#include <algorithm>
#include <cmath>
#include <vector>

#include "celect/model.hpp"
#include "celect/owa.hpp"

namespace oracles {

inline std::vector<double> approval_counts(const celect::DeterministicInstance& inst,
                                           const celect::Committee& committee) {
    std::vector<double> w(committee.size() + 1, 0.0);
    for (int i = 0; i < inst.approvals.n_voters(); ++i) {
        int l = 0;
        for (int c : committee.members())
            if (inst.approvals.score(i, c) > 0.5) ++l;
        w[l] += 1.0;
    }
    return w;
}

// Best objective sum(w[l] * probs[l]) over all symmetric monotone rules whose
// free upper-half entries lie on the grid {1/2, 1/2 + step, ..., 1}.
inline double grid_best_objective(const std::vector<double>& weights, int k, double step) {
    const int center = k / 2 + 1;
    const int free_count = k - center + 1;
    std::vector<double> upper(free_count);
    double best = -1e300;

    auto evaluate = [&] {
        std::vector<double> probs(k + 1, 0.5);
        for (int a = center; a <= k; ++a) probs[a] = upper[a - center];
        for (int a = 0; a < center; ++a)
            probs[a] = (k - a) < center ? 0.5 : 1.0 - probs[k - a];
        double value = 0.0;
        for (int l = 0; l <= k; ++l) value += weights[l] * probs[l];
        best = std::max(best, value);
    };

    auto recurse = [&](auto&& self, int index, double lower) -> void {
        if (index == free_count) {
            evaluate();
            return;
        }
        for (double v = lower; v <= 1.0 + 1e-12; v += step) {
            upper[index] = std::min(v, 1.0);
            self(self, index + 1, upper[index]);
        }
    };
    if (free_count == 0) {
        evaluate();
    } else {
        recurse(recurse, 0, 0.5);
    }
    return best;
}

// Member lists of all K-committees whose objective is within `tol` of the
// maximum, in lexicographic order.
template <typename Objective>
std::vector<std::vector<int>> argmax_committees(int n_candidates, int k, double tol,
                                                Objective&& objective) {
    std::vector<std::pair<std::vector<int>, double>> values;
    double best = -1e300;
    celect::for_each_committee(n_candidates, k, [&](std::span<const int> members) {
        const double value = objective(members);
        best = std::max(best, value);
        values.emplace_back(std::vector<int>(members.begin(), members.end()), value);
    });
    std::vector<std::vector<int>> out;
    for (auto& [members, value] : values)
        if (value >= best - tol) out.push_back(std::move(members));
    return out;
}

}  // namespace oracles
