#pragma once
// Ordered-weighted-average committee scoring: named weight vectors, exact
// winner by subset enumeration, and the greedy sequential winner.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "celect/model.hpp"

namespace celect {

// Weight vector applied to a voter's committee-member scores sorted descending.
struct OwaVector {
    std::vector<double> weights;

    int k() const { return static_cast<int>(weights.size()); }
};

OwaVector owa_top_k(int k);                      // (1, 1, ..., 1)
OwaVector owa_chamberlin_courant(int k);         // (1, 0, ..., 0)
OwaVector owa_pav(int k);                        // (1, 1/2, ..., 1/k)
OwaVector owa_k_median(int position, int k);     // unit vector at `position` (1-based)

// Accepts "topk", "cc", "pav" and "kmedian(j)".
OwaVector named_rule(const std::string& name, int k);

double owa_satisfaction(const OwaVector& alpha, const ScoreProfile& profile, int voter,
                        const Committee& committee);
double owa_total(const OwaVector& alpha, const ScoreProfile& profile, const Committee& committee);

inline constexpr std::uint64_t kDefaultEnumerationGuard = 10'000'000;

// Number of K-subsets of m candidates, saturating at 2^64-1.
std::uint64_t committee_count(int n_candidates, int k);

// Calls fn(std::span<const int>) for every K-subset in lexicographic order.
template <typename Fn>
void for_each_committee(int n_candidates, int k, Fn&& fn) {
    if (k < 1 || k > n_candidates) return;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(std::span<const int>(idx.data(), idx.size()));
        int i = k - 1;
        while (i >= 0 && idx[i] == n_candidates - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Lexicographically-first committee maximizing total alpha-satisfaction.
// Throws std::length_error when C(m,K) exceeds the guard.
Committee owa_winner_exact(const OwaVector& alpha, const ScoreProfile& profile, int k,
                           std::uint64_t guard = kDefaultEnumerationGuard);

// Greedy variant: K rounds, each adding the candidate that raises total
// satisfaction most, scoring partial committees with the first t weights.
Committee owa_winner_sequential(const OwaVector& alpha, const ScoreProfile& profile, int k);

// The K candidates with the largest score-column sums (ties to lower index);
// equals the exact winner for the all-ones weight vector.
Committee top_k_by_column_sum(const ScoreProfile& profile, int k);

}  // namespace celect
