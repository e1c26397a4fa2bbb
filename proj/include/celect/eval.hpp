#pragma once
// Satisfaction of voters with a committee's decisions: exact evaluation in the
// deterministic and probabilistic models, brute-force optimal committees, and
// committee comparison.

#include <cstdint>
#include <utility>
#include <vector>

#include "celect/model.hpp"
#include "celect/owa.hpp"

namespace celect {

struct EvalReport {
    std::vector<double> per_voter;
    double total = 0.0;
};

// Deterministic model: an approved member votes exactly as the voter prefers.
EvalReport eval_deterministic(const DeterministicInstance& inst, const Committee& committee,
                              const DecisionRule& rule);

// Probabilistic model, scores read as the probabilities that each member votes
// consistently with the voter. Dynamic program over members counting
// consistent votes.
double eval_probabilistic_dp(const ScoreProfile& profile, int voter, const Committee& committee,
                             const DecisionRule& rule);

// Same value by enumerating all 2^K member vote patterns; the independent
// check for the dynamic program. K is capped at 20.
double eval_probabilistic_bruteforce(const ScoreProfile& profile, int voter,
                                     const Committee& committee, const DecisionRule& rule);

EvalReport eval_probabilistic(const ScoreProfile& profile, const Committee& committee,
                              const DecisionRule& rule);

// Lexicographically-first committee maximizing total satisfaction, evaluated
// in the matching model. Throws std::length_error past the enumeration guard.
std::pair<Committee, EvalReport> optimal_committee(const DeterministicInstance& inst, int k,
                                                   const DecisionRule& rule,
                                                   std::uint64_t guard = kDefaultEnumerationGuard);
std::pair<Committee, EvalReport> optimal_committee(const ScoreProfile& profile, int k,
                                                   const DecisionRule& rule,
                                                   std::uint64_t guard = kDefaultEnumerationGuard);

struct RankedCommittee {
    Committee committee;
    EvalReport report;
};

// Evaluates every committee in the probabilistic model and sorts descending by
// total, ties broken lexicographically.
std::vector<RankedCommittee> compare_committees(const ScoreProfile& profile,
                                                const DecisionRule& rule,
                                                const std::vector<Committee>& committees);

}  // namespace celect
