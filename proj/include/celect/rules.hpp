#pragma once
// Constructors of optimal rules: weight-vector synthesis from a decision rule,
// the Comb full rule, the per-committee optimal decision rule, the globally
// optimal full multiwinner rule, and dominance comparison of full rules.

#include <cstdint>
#include <functional>
#include <vector>

#include "celect/eval.hpp"
#include "celect/model.hpp"
#include "celect/owa.hpp"

namespace celect {

// Expected probability that the committee decides consistently with a voter
// approving exactly l of its K members, for l = 0..K. Approved members vote
// consistently with probability p, disapproved ones with probability q.
std::vector<double> satisfaction_by_approval_count(const DecisionRule& rule, double p, double q);

// Weight vector whose ordered-weighted-average rule elects an optimal
// committee for `rule` on every approval profile with parameters p > q.
// Entry j is the satisfaction gain of the j-th approved member, so totals omit
// the constant per-voter offset of a zero-approval committee.
OwaVector alpha_from_decision_rule(const DecisionRule& rule, int k, double p, double q);

// Committee plus the decision rule it will use.
struct FullRuleOutcome {
    Committee committee;
    DecisionRule decision;
    double total = 0.0;
};

// Picks the better of (top-K committee, random dictatorship) and (central
// median committee, majority) by total satisfaction; ties go to majority.
FullRuleOutcome comb(const DeterministicInstance& inst, int k);

// Best symmetric monotone decision rule for a fixed committee, by enumerating
// the vertices of the symmetric-monotone polytope (quota rules, optionally
// with the 1/2 plateau). Ties prefer the smallest threshold, then no plateau.
DecisionRule optimal_decision_rule_for_committee(const DeterministicInstance& inst,
                                                 const Committee& committee);

// Optimal full multiwinner rule in the deterministic model: every committee
// paired with its best decision rule, global argmax, lexicographic ties.
FullRuleOutcome optimal_full_multiwinner(const DeterministicInstance& inst, int k,
                                         std::uint64_t guard = kDefaultEnumerationGuard);

using FullRule = std::function<FullRuleOutcome(const DeterministicInstance&, int)>;

FullRule full_rule_comb();
FullRule full_rule_optimal();
FullRule median_then_majority();
FullRule topk_then_random_dictatorship();

enum class Dominance { none, weak, strong };

// weak: a's total >= b's on every instance (within 1e-9); strong: weak and
// strictly greater somewhere.
Dominance dominance_check(const FullRule& a, const FullRule& b,
                          const std::vector<DeterministicInstance>& instances, int k);

}  // namespace celect
