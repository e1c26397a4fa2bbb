#include "celect/owa.hpp"

#include <algorithm>
#include <limits>

namespace celect {

namespace {

double owa_total_members(const OwaVector& alpha, const ScoreProfile& profile,
                         std::span<const int> members, std::vector<double>& scratch) {
    const int k = static_cast<int>(members.size());
    double total = 0.0;
    for (int i = 0; i < profile.n_voters(); ++i) {
        scratch.clear();
        for (int c : members) scratch.push_back(profile.score(i, c));
        std::sort(scratch.begin(), scratch.end(), std::greater<>());
        double sat = 0.0;
        for (int j = 0; j < k; ++j) sat += alpha.weights[j] * scratch[j];
        total += sat;
    }
    return total;
}

}  // namespace

OwaVector owa_top_k(int k) {
    if (k < 1) throw std::invalid_argument("weight vector needs k >= 1");
    return {std::vector<double>(k, 1.0)};
}

OwaVector owa_chamberlin_courant(int k) {
    if (k < 1) throw std::invalid_argument("weight vector needs k >= 1");
    std::vector<double> w(k, 0.0);
    w[0] = 1.0;
    return {std::move(w)};
}

OwaVector owa_pav(int k) {
    if (k < 1) throw std::invalid_argument("weight vector needs k >= 1");
    std::vector<double> w(k);
    for (int j = 0; j < k; ++j) w[j] = 1.0 / (j + 1);
    return {std::move(w)};
}

OwaVector owa_k_median(int position, int k) {
    if (k < 1) throw std::invalid_argument("weight vector needs k >= 1");
    if (position < 1 || position > k)
        throw std::invalid_argument("median position must lie in 1..K");
    std::vector<double> w(k, 0.0);
    w[position - 1] = 1.0;
    return {std::move(w)};
}

OwaVector named_rule(const std::string& name, int k) {
    if (name == "topk") return owa_top_k(k);
    if (name == "cc") return owa_chamberlin_courant(k);
    if (name == "pav") return owa_pav(k);
    if (name.rfind("kmedian(", 0) == 0 && name.back() == ')') {
        const std::string inner = name.substr(8, name.size() - 9);
        std::size_t used = 0;
        int pos = 0;
        try {
            pos = std::stoi(inner, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad kmedian position '" + inner + "'");
        }
        if (used != inner.size()) throw std::invalid_argument("bad kmedian position '" + inner + "'");
        return owa_k_median(pos, k);
    }
    throw std::invalid_argument("unknown rule '" + name + "'");
}

double owa_satisfaction(const OwaVector& alpha, const ScoreProfile& profile, int voter,
                        const Committee& committee) {
    if (alpha.k() != committee.size())
        throw std::invalid_argument("weight vector length must equal committee size");
    if (voter < 0 || voter >= profile.n_voters()) throw std::out_of_range("voter index");
    std::vector<double> scores;
    scores.reserve(committee.size());
    for (int c : committee.members()) scores.push_back(profile.score(voter, c));
    std::sort(scores.begin(), scores.end(), std::greater<>());
    double sat = 0.0;
    for (int j = 0; j < committee.size(); ++j) sat += alpha.weights[j] * scores[j];
    return sat;
}

double owa_total(const OwaVector& alpha, const ScoreProfile& profile, const Committee& committee) {
    if (alpha.k() != committee.size())
        throw std::invalid_argument("weight vector length must equal committee size");
    std::vector<double> scratch;
    scratch.reserve(committee.size());
    return owa_total_members(alpha, profile, committee.members(), scratch);
}

std::uint64_t committee_count(int n_candidates, int k) {
    if (k < 0 || k > n_candidates) return 0;
    k = std::min(k, n_candidates - k);
    unsigned __int128 result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<unsigned>(n_candidates - k + i) / static_cast<unsigned>(i);
        if (result > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(result);
}

Committee owa_winner_exact(const OwaVector& alpha, const ScoreProfile& profile, int k,
                           std::uint64_t guard) {
    const int m = profile.n_candidates();
    if (k < 1 || k > m) throw std::invalid_argument("committee size must lie in 1..m");
    if (alpha.k() != k) throw std::invalid_argument("weight vector length must equal K");
    if (committee_count(m, k) > guard)
        throw std::length_error("committee enumeration exceeds the instance-size guard");

    std::vector<int> best;
    double best_total = -std::numeric_limits<double>::infinity();
    std::vector<double> scratch;
    scratch.reserve(k);
    for_each_committee(m, k, [&](std::span<const int> members) {
        const double total = owa_total_members(alpha, profile, members, scratch);
        if (total > best_total) {
            best_total = total;
            best.assign(members.begin(), members.end());
        }
    });
    return Committee(std::move(best), m);
}

Committee owa_winner_sequential(const OwaVector& alpha, const ScoreProfile& profile, int k) {
    const int m = profile.n_candidates();
    const int n = profile.n_voters();
    if (k < 1 || k > m) throw std::invalid_argument("committee size must lie in 1..m");
    if (alpha.k() != k) throw std::invalid_argument("weight vector length must equal K");

    // Per-voter member scores sorted descending, grown one member per round.
    std::vector<std::vector<double>> sorted(n);
    std::vector<bool> chosen(m, false);
    std::vector<int> members;
    members.reserve(k);

    for (int step = 1; step <= k; ++step) {
        int best_c = -1;
        double best_total = -std::numeric_limits<double>::infinity();
        for (int c = 0; c < m; ++c) {
            if (chosen[c]) continue;
            double total = 0.0;
            for (int i = 0; i < n; ++i) {
                const auto& s = sorted[i];
                const double v = profile.score(i, c);
                double sat = 0.0;
                std::size_t ptr = 0;
                bool inserted = false;
                for (int j = 0; j < step; ++j) {
                    double val;
                    if (!inserted && (ptr >= s.size() || v >= s[ptr])) {
                        val = v;
                        inserted = true;
                    } else {
                        val = s[ptr++];
                    }
                    sat += alpha.weights[j] * val;
                }
                total += sat;
            }
            if (total > best_total) {
                best_total = total;
                best_c = c;
            }
        }
        chosen[best_c] = true;
        members.push_back(best_c);
        for (int i = 0; i < n; ++i) {
            auto& s = sorted[i];
            const double v = profile.score(i, best_c);
            s.insert(std::upper_bound(s.begin(), s.end(), v, std::greater<>()), v);
        }
    }
    return Committee(std::move(members), m);
}

Committee top_k_by_column_sum(const ScoreProfile& profile, int k) {
    const int m = profile.n_candidates();
    if (k < 1 || k > m) throw std::invalid_argument("committee size must lie in 1..m");
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> sums(m);
    for (int c = 0; c < m; ++c) sums[c] = profile.column_sum(c);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return sums[a] > sums[b]; });
    order.resize(k);
    return Committee(std::move(order), m);
}

}  // namespace celect
