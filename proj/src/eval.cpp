#include "celect/eval.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace celect {

namespace {

int approved_members(const ScoreProfile& approvals, int voter, std::span<const int> members) {
    int count = 0;
    for (int c : members)
        if (approvals.score(voter, c) > 0.5) ++count;
    return count;
}

EvalReport report_from(std::vector<double> per_voter) {
    EvalReport report;
    report.per_voter = std::move(per_voter);
    report.total = 0.0;
    for (double v : report.per_voter) report.total += v;
    return report;
}

double deterministic_total(const DeterministicInstance& inst, std::span<const int> members,
                           const std::vector<double>& accept_table,
                           const std::vector<double>& reject_table) {
    double total = 0.0;
    for (int i = 0; i < inst.approvals.n_voters(); ++i) {
        const int l = approved_members(inst.approvals, i, members);
        total += (inst.preferred[i] == Alternative::accept ? accept_table : reject_table)[l];
    }
    return total;
}

}  // namespace

EvalReport eval_deterministic(const DeterministicInstance& inst, const Committee& committee,
                              const DecisionRule& rule) {
    if (rule.k() != committee.size())
        throw std::invalid_argument("decision rule size must equal committee size");
    const auto accept_table = consistency_table(rule, Alternative::accept);
    const auto reject_table = consistency_table(rule, Alternative::reject);
    std::vector<double> per_voter(inst.approvals.n_voters());
    for (int i = 0; i < inst.approvals.n_voters(); ++i) {
        const int l = approved_members(inst.approvals, i, committee.members());
        per_voter[i] = (inst.preferred[i] == Alternative::accept ? accept_table : reject_table)[l];
    }
    return report_from(std::move(per_voter));
}

double eval_probabilistic_dp(const ScoreProfile& profile, int voter, const Committee& committee,
                             const DecisionRule& rule) {
    const int k = committee.size();
    if (rule.k() != k) throw std::invalid_argument("decision rule size must equal committee size");
    if (voter < 0 || voter >= profile.n_voters()) throw std::out_of_range("voter index");

    // A[l] = probability that exactly l of the members seen so far vote
    // consistently with the voter.
    std::vector<double> table(k + 1, 0.0);
    table[0] = 1.0;
    int seen = 0;
    for (int c : committee.members()) {
        const double p = profile.score(voter, c);
        for (int l = seen + 1; l >= 1; --l) table[l] = p * table[l - 1] + (1.0 - p) * table[l];
        table[0] *= (1.0 - p);
        ++seen;
    }
    double result = 0.0;
    for (int l = 0; l <= k; ++l) result += rule.prob(l) * table[l];
    return result;
}

double eval_probabilistic_bruteforce(const ScoreProfile& profile, int voter,
                                     const Committee& committee, const DecisionRule& rule) {
    const int k = committee.size();
    if (rule.k() != k) throw std::invalid_argument("decision rule size must equal committee size");
    if (voter < 0 || voter >= profile.n_voters()) throw std::out_of_range("voter index");
    if (k > 20) throw std::length_error("vote-pattern enumeration is capped at K = 20");

    double result = 0.0;
    for (std::uint32_t pattern = 0; pattern < (1u << k); ++pattern) {
        double prob = 1.0;
        for (int j = 0; j < k; ++j) {
            const double p = profile.score(voter, committee.members()[j]);
            prob *= (pattern >> j) & 1u ? p : 1.0 - p;
        }
        result += prob * rule.prob(std::popcount(pattern));
    }
    return result;
}

EvalReport eval_probabilistic(const ScoreProfile& profile, const Committee& committee,
                              const DecisionRule& rule) {
    std::vector<double> per_voter(profile.n_voters());
    for (int i = 0; i < profile.n_voters(); ++i)
        per_voter[i] = eval_probabilistic_dp(profile, i, committee, rule);
    return report_from(std::move(per_voter));
}

std::pair<Committee, EvalReport> optimal_committee(const DeterministicInstance& inst, int k,
                                                   const DecisionRule& rule,
                                                   std::uint64_t guard) {
    const int m = inst.approvals.n_candidates();
    if (k < 1 || k > m) throw std::invalid_argument("committee size must lie in 1..m");
    if (rule.k() != k) throw std::invalid_argument("decision rule size must equal committee size");
    if (committee_count(m, k) > guard)
        throw std::length_error("committee enumeration exceeds the instance-size guard");

    const auto accept_table = consistency_table(rule, Alternative::accept);
    const auto reject_table = consistency_table(rule, Alternative::reject);
    std::vector<int> best;
    double best_total = -std::numeric_limits<double>::infinity();
    for_each_committee(m, k, [&](std::span<const int> members) {
        const double total = deterministic_total(inst, members, accept_table, reject_table);
        if (total > best_total) {
            best_total = total;
            best.assign(members.begin(), members.end());
        }
    });
    Committee winner(std::move(best), m);
    EvalReport report = eval_deterministic(inst, winner, rule);
    return {std::move(winner), std::move(report)};
}

std::pair<Committee, EvalReport> optimal_committee(const ScoreProfile& profile, int k,
                                                   const DecisionRule& rule,
                                                   std::uint64_t guard) {
    const int m = profile.n_candidates();
    if (k < 1 || k > m) throw std::invalid_argument("committee size must lie in 1..m");
    if (rule.k() != k) throw std::invalid_argument("decision rule size must equal committee size");
    if (committee_count(m, k) > guard)
        throw std::length_error("committee enumeration exceeds the instance-size guard");

    std::vector<int> best;
    double best_total = -std::numeric_limits<double>::infinity();
    std::vector<double> table(k + 1);
    for_each_committee(m, k, [&](std::span<const int> members) {
        double total = 0.0;
        for (int i = 0; i < profile.n_voters(); ++i) {
            std::fill(table.begin(), table.end(), 0.0);
            table[0] = 1.0;
            int seen = 0;
            for (int c : members) {
                const double p = profile.score(i, c);
                for (int l = seen + 1; l >= 1; --l)
                    table[l] = p * table[l - 1] + (1.0 - p) * table[l];
                table[0] *= (1.0 - p);
                ++seen;
            }
            for (int l = 0; l <= k; ++l) total += rule.prob(l) * table[l];
        }
        if (total > best_total) {
            best_total = total;
            best.assign(members.begin(), members.end());
        }
    });
    Committee winner(std::move(best), m);
    EvalReport report = eval_probabilistic(profile, winner, rule);
    return {std::move(winner), std::move(report)};
}

std::vector<RankedCommittee> compare_committees(const ScoreProfile& profile,
                                                const DecisionRule& rule,
                                                const std::vector<Committee>& committees) {
    std::vector<RankedCommittee> ranked;
    ranked.reserve(committees.size());
    for (const auto& committee : committees)
        ranked.push_back({committee, eval_probabilistic(profile, committee, rule)});
    std::stable_sort(ranked.begin(), ranked.end(), [](const RankedCommittee& a, const RankedCommittee& b) {
        if (a.report.total != b.report.total) return a.report.total > b.report.total;
        return lex_less(a.committee, b.committee);
    });
    return ranked;
}

}  // namespace celect
