#pragma once
// Shared test profiles: the two 6-voter / 8-candidate approval tables used
// across the suites, plus small random-instance generators.

#include <random>
#include <vector>

#include "celect/model.hpp"

namespace fixtures {

// Column sums 4,4,4,3,3,3,2,2.
inline celect::ScoreProfile table1a() {
    return celect::ScoreProfile(6, 8,
                                {
                                    1, 1, 0, 0, 1, 0, 0, 1,  //
                                    1, 1, 1, 1, 1, 1, 0, 0,  //
                                    1, 0, 1, 1, 0, 0, 1, 0,  //
                                    0, 1, 1, 0, 0, 0, 1, 0,  //
                                    1, 0, 0, 1, 1, 1, 0, 0,  //
                                    0, 1, 1, 0, 0, 1, 0, 1,  //
                                },
                                celect::ProfileKind::approval);
}

// Column sums 3,2,1,1,1,0,1,3.
inline celect::ScoreProfile table1b() {
    return celect::ScoreProfile(6, 8,
                                {
                                    1, 0, 0, 0, 0, 0, 0, 1,  //
                                    0, 1, 0, 1, 0, 0, 0, 0,  //
                                    1, 0, 0, 0, 0, 0, 0, 0,  //
                                    0, 0, 1, 0, 0, 0, 1, 1,  //
                                    1, 0, 0, 0, 1, 0, 0, 0,  //
                                    0, 1, 0, 0, 0, 0, 0, 1,  //
                                },
                                celect::ProfileKind::approval);
}

inline celect::DeterministicInstance instance_from(const celect::ScoreProfile& approvals,
                                                   celect::Alternative alt =
                                                       celect::Alternative::accept) {
    return celect::DeterministicInstance(
        approvals, std::vector<celect::Alternative>(approvals.n_voters(), alt));
}

inline celect::DeterministicInstance instance_1a() { return instance_from(table1a()); }
inline celect::DeterministicInstance instance_1b() { return instance_from(table1b()); }

inline celect::ScoreProfile random_approval_profile(std::mt19937& rng, int n, int m) {
    std::bernoulli_distribution coin(0.5);
    std::vector<double> scores(static_cast<std::size_t>(n) * m);
    for (double& v : scores) v = coin(rng) ? 1.0 : 0.0;
    return celect::ScoreProfile(n, m, std::move(scores), celect::ProfileKind::approval);
}

inline celect::ScoreProfile random_general_profile(std::mt19937& rng, int n, int m) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> scores(static_cast<std::size_t>(n) * m);
    for (double& v : scores) v = unit(rng);
    return celect::ScoreProfile(n, m, std::move(scores));
}

inline std::vector<celect::Alternative> random_preferences(std::mt19937& rng, int n) {
    std::bernoulli_distribution coin(0.5);
    std::vector<celect::Alternative> out(n);
    for (auto& alt : out)
        alt = coin(rng) ? celect::Alternative::accept : celect::Alternative::reject;
    return out;
}

// Random symmetric rule: random monotone upper half in [1/2, 1], mirrored.
inline celect::DecisionRule random_symmetric_rule(std::mt19937& rng, int k) {
    std::uniform_real_distribution<double> half(0.5, 1.0);
    std::vector<double> upper;
    const int center = k / 2 + 1;
    for (int a = center; a <= k; ++a) upper.push_back(half(rng));
    std::sort(upper.begin(), upper.end());
    std::vector<double> probs(k + 1, 0.5);
    for (int a = center; a <= k; ++a) probs[a] = upper[a - center];
    for (int a = 0; a <= k - center; ++a) probs[a] = 1.0 - probs[k - a];
    return celect::DecisionRule(std::move(probs), true);
}

}  // namespace fixtures
