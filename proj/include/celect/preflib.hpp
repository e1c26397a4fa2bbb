#pragma once
// PrefLib-style strict-order preference files: parsing, dataset filtering,
// Kendall-tau distances, per-issue distance matrices and Borda scores.

#include <span>
#include <string>
#include <vector>

#include "celect/model.hpp"

namespace celect {

// Complete strict rankings (most-preferred first, 0-based candidate ids) with
// a voter count per ranking line.
struct RankProfile {
    int n_voters = 0;
    int n_candidates = 0;
    std::vector<std::vector<int>> rankings;
    std::vector<int> multiplicities;

    // One ranking per voter, multiplicities expanded in file order.
    std::vector<std::vector<int>> expanded() const;
};

// Strict complete orders only: '#' metadata lines, then "count: id, id, ..."
// with 1-based dense candidate ids. Ties, repeats and incomplete rankings are
// rejected with the offending line number.
RankProfile parse_preflib(const std::string& text);
RankProfile read_preflib_file(const std::string& path);
std::string serialize_preflib(const RankProfile& profile);

// Dataset admission test used by the simulations.
bool filter_dataset(const RankProfile& profile);

// Number of discordant pairs between two rankings of the same m candidates,
// counted in O(m log m) by merge sort.
long long kendall_tau(std::span<const int> rank_a, std::span<const int> rank_b);

// One issue per voter v. voter[v][v'] is the Kendall-tau distance from v' to
// v's issue, candidate[v][c] the 0-based position of c in v's ranking; each
// row is rescaled to mean 1/2 (all-zero rows stay zero).
struct IssueDistances {
    std::vector<std::vector<double>> voter;
    std::vector<std::vector<double>> candidate;
};

IssueDistances issue_distances(const RankProfile& profile);

// Positional scores (m-1-rank)/(m-1), one row per voter.
ScoreProfile borda_scores(const RankProfile& profile);

}  // namespace celect
