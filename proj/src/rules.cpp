#include "celect/rules.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace celect {

namespace {

constexpr double kTol = 1e-9;

std::vector<std::vector<double>> pascal_triangle(int n) {
    std::vector<std::vector<double>> c(n + 1);
    for (int i = 0; i <= n; ++i) {
        c[i].assign(i + 1, 1.0);
        for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return c;
}

// Histogram over l = 0..K of voters approving exactly l committee members.
std::vector<double> approval_histogram(const DeterministicInstance& inst,
                                       std::span<const int> members) {
    std::vector<double> w(members.size() + 1, 0.0);
    for (int i = 0; i < inst.approvals.n_voters(); ++i) {
        int l = 0;
        for (int c : members)
            if (inst.approvals.score(i, c) > 0.5) ++l;
        w[l] += 1.0;
    }
    return w;
}

// Vertices of the symmetric monotone polytope for committee size k, in
// tie-break order (threshold ascending, no-plateau before plateau).
std::vector<DecisionRule> quota_vertices(int k) {
    std::vector<DecisionRule> rules;
    const int center = k / 2 + 1;
    for (int t = center; t <= k + 1; ++t) {
        for (bool plateau : {false, true}) {
            if (!plateau && t > center) continue;
            DecisionRule rule = make_quota(k, t, plateau);
            if (std::find(rules.begin(), rules.end(), rule) == rules.end())
                rules.push_back(std::move(rule));
        }
    }
    return rules;
}

double rule_objective(const DecisionRule& rule, const std::vector<double>& weights) {
    double total = 0.0;
    for (int l = 0; l <= rule.k(); ++l) total += weights[l] * rule.prob(l);
    return total;
}

}  // namespace

std::vector<double> satisfaction_by_approval_count(const DecisionRule& rule, double p, double q) {
    const int k = rule.k();
    const auto binom = pascal_triangle(k);
    std::vector<double> table(k + 1, 0.0);
    for (int l = 0; l <= k; ++l) {
        for (int s = 0; s <= k; ++s) {
            double prob_s = 0.0;
            const int x_lo = std::max(0, s - (k - l));
            const int x_hi = std::min(l, s);
            for (int x = x_lo; x <= x_hi; ++x) {
                prob_s += binom[l][x] * std::pow(p, x) * std::pow(1.0 - p, l - x) *
                          binom[k - l][s - x] * std::pow(q, s - x) *
                          std::pow(1.0 - q, (k - l) - (s - x));
            }
            table[l] += prob_s * rule.prob(s);
        }
    }
    return table;
}

OwaVector alpha_from_decision_rule(const DecisionRule& rule, int k, double p, double q) {
    if (rule.k() != k) throw std::invalid_argument("decision rule size must equal K");
    if (!rule.symmetric())
        throw std::invalid_argument("weight-vector synthesis requires a symmetric decision rule");
    if (!(0.0 <= q && q < p && p <= 1.0))
        throw std::invalid_argument("approval parameters must satisfy 0 <= q < p <= 1");
    const auto table = satisfaction_by_approval_count(rule, p, q);
    std::vector<double> weights(k);
    for (int j = 1; j <= k; ++j) weights[j - 1] = table[j] - table[j - 1];
    return {std::move(weights)};
}

FullRuleOutcome comb(const DeterministicInstance& inst, int k) {
    if (k % 2 == 0) throw std::invalid_argument("comb requires an odd committee size");
    const ScoreProfile& approvals = inst.approvals;

    Committee top = top_k_by_column_sum(approvals, k);
    double approval_total = 0.0;
    for (int c : top.members()) approval_total += approvals.column_sum(c);

    const OwaVector median = owa_k_median((k + 1) / 2, k);
    Committee median_committee = owa_winner_exact(median, approvals, k);
    const double median_total = owa_total(median, approvals, median_committee);

    if (approval_total / k > median_total)
        return {std::move(top), make_random_dictatorship(k), approval_total / k};
    return {std::move(median_committee), make_majority(k), median_total};
}

DecisionRule optimal_decision_rule_for_committee(const DeterministicInstance& inst,
                                                 const Committee& committee) {
    const auto weights = approval_histogram(inst, committee.members());
    const auto vertices = quota_vertices(committee.size());
    const DecisionRule* best = nullptr;
    double best_value = -std::numeric_limits<double>::infinity();
    for (const auto& rule : vertices) {
        const double value = rule_objective(rule, weights);
        if (value > best_value) {
            best_value = value;
            best = &rule;
        }
    }
    return *best;
}

FullRuleOutcome optimal_full_multiwinner(const DeterministicInstance& inst, int k,
                                         std::uint64_t guard) {
    const int m = inst.approvals.n_candidates();
    if (k < 1 || k > m) throw std::invalid_argument("committee size must lie in 1..m");
    if (committee_count(m, k) > guard)
        throw std::length_error("committee enumeration exceeds the instance-size guard");

    const auto vertices = quota_vertices(k);
    std::vector<int> best_members;
    const DecisionRule* best_rule = nullptr;
    double best_total = -std::numeric_limits<double>::infinity();
    for_each_committee(m, k, [&](std::span<const int> members) {
        const auto weights = approval_histogram(inst, members);
        for (const auto& rule : vertices) {
            const double value = rule_objective(rule, weights);
            if (value > best_total) {
                best_total = value;
                best_rule = &rule;
                best_members.assign(members.begin(), members.end());
            }
        }
    });
    return {Committee(std::move(best_members), m), *best_rule, best_total};
}

FullRule full_rule_comb() {
    return [](const DeterministicInstance& inst, int k) { return comb(inst, k); };
}

FullRule full_rule_optimal() {
    return [](const DeterministicInstance& inst, int k) {
        return optimal_full_multiwinner(inst, k);
    };
}

FullRule median_then_majority() {
    return [](const DeterministicInstance& inst, int k) {
        if (k % 2 == 0) throw std::invalid_argument("majority requires an odd committee size");
        Committee committee =
            owa_winner_exact(owa_k_median((k + 1) / 2, k), inst.approvals, k);
        DecisionRule rule = make_majority(k);
        const double total = eval_deterministic(inst, committee, rule).total;
        return FullRuleOutcome{std::move(committee), std::move(rule), total};
    };
}

FullRule topk_then_random_dictatorship() {
    return [](const DeterministicInstance& inst, int k) {
        Committee committee = top_k_by_column_sum(inst.approvals, k);
        DecisionRule rule = make_random_dictatorship(k);
        const double total = eval_deterministic(inst, committee, rule).total;
        return FullRuleOutcome{std::move(committee), std::move(rule), total};
    };
}

Dominance dominance_check(const FullRule& a, const FullRule& b,
                          const std::vector<DeterministicInstance>& instances, int k) {
    bool strict = false;
    for (const auto& inst : instances) {
        const double ta = a(inst, k).total;
        const double tb = b(inst, k).total;
        if (ta < tb - kTol) return Dominance::none;
        if (ta > tb + kTol) strict = true;
    }
    return strict ? Dominance::strong : Dominance::weak;
}

}  // namespace celect
