#include "celect/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "celect/owa.hpp"
#include "json.hpp"

namespace celect {

namespace {

using Matrix = std::vector<std::vector<double>>;

// Per-trial RNG stream keyed on (seed, trial). A plain seed ^ trial would make
// nearby seeds share their trial-stream sets (99^t and 100^t cover the same
// values for t < 8), collapsing trial-averaged results; the splitmix64
// finalizer breaks that up.
std::uint64_t trial_stream_seed(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t z = seed ^ (trial * 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Majority extended to even sizes with a fair coin on exact ties; needed for
// the all-voter committee when the electorate is even.
DecisionRule decision_for_size(DecisionSpec spec, int size) {
    switch (spec) {
        case DecisionSpec::majority:
            return size % 2 == 1 ? make_majority(size) : make_quota(size, size / 2 + 1, true);
        case DecisionSpec::random_dictatorship:
            return make_random_dictatorship(size);
    }
    throw std::invalid_argument("unknown decision spec");
}

struct SimCommittee {
    bool members_are_voters = false;
    std::vector<int> members;
    // consistency[d][s]: probability the decision matches a voter who agrees
    // with exactly s members, for decision spec d.
    std::vector<std::vector<double>> consistency;
};

SimCommittee make_sim_committee(bool members_are_voters, std::vector<int> members,
                                const std::vector<DecisionSpec>& decisions) {
    SimCommittee sc;
    sc.members_are_voters = members_are_voters;
    sc.members = std::move(members);
    for (DecisionSpec d : decisions) {
        const DecisionRule rule = decision_for_size(d, static_cast<int>(sc.members.size()));
        sc.consistency.push_back(consistency_table(rule, Alternative::accept));
    }
    return sc;
}

// One trial: one issue per voter, acceptance draws for every voter and
// candidate, every committee deciding every issue under every decision rule.
// Accumulates each voter's mean satisfaction over their significant issues
// into `out`, laid out as [committee][decision][voter].
void simulate_trial(std::mt19937_64& rng, const Matrix& voter_issue_dist,
                    const Matrix& cand_issue_dist, double p_min, double p_max,
                    const std::optional<std::pair<double, double>>& band,
                    const std::vector<SimCommittee>& committees, std::size_t n_decisions,
                    std::vector<double>& out) {
    const int n = static_cast<int>(voter_issue_dist.size());
    const int m = n > 0 ? static_cast<int>(cand_issue_dist[0].size()) : 0;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> p_draw(p_min, p_max);

    std::vector<std::uint8_t> voter_accept(n), cand_accept(m), significant(n);
    std::vector<int> significant_count(n, 0);
    for (int issue = 0; issue < n; ++issue) {
        const double p = p_draw(rng);
        for (int i = 0; i < n; ++i)
            voter_accept[i] = unit(rng) < acceptance_probability(p, voter_issue_dist[issue][i]);
        for (int c = 0; c < m; ++c)
            cand_accept[c] = unit(rng) < acceptance_probability(p, cand_issue_dist[issue][c]);

        for (int i = 0; i < n; ++i) {
            const double intensity = p * voter_issue_dist[issue][i];
            significant[i] = !(band && intensity >= band->first && intensity <= band->second);
            significant_count[i] += significant[i];
        }

        for (std::size_t ci = 0; ci < committees.size(); ++ci) {
            const SimCommittee& sc = committees[ci];
            const int size = static_cast<int>(sc.members.size());
            int accepts = 0;
            for (int member : sc.members)
                accepts += sc.members_are_voters ? voter_accept[member] : cand_accept[member];
            for (std::size_t d = 0; d < n_decisions; ++d) {
                const auto& table = sc.consistency[d];
                double* slot = out.data() + (ci * n_decisions + d) * n;
                for (int i = 0; i < n; ++i) {
                    if (!significant[i]) continue;
                    const int consistent = voter_accept[i] ? accepts : size - accepts;
                    slot[i] += table[consistent];
                }
            }
        }
    }
    for (std::size_t ci = 0; ci < committees.size(); ++ci)
        for (std::size_t d = 0; d < n_decisions; ++d)
            for (int i = 0; i < n; ++i)
                out[(ci * n_decisions + d) * n + i] /= significant_count[i];
}

void run_trials(int n_trials, int threads, const std::function<void(int)>& run_one) {
    const int workers = std::max(1, std::min(threads, n_trials));
    if (workers == 1) {
        for (int t = 0; t < n_trials; ++t) run_one(t);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int t = w; t < n_trials; t += workers) run_one(t);
        });
    }
    for (auto& th : pool) th.join();
}

std::vector<int> all_indices(int count) {
    std::vector<int> out(count);
    for (int i = 0; i < count; ++i) out[i] = i;
    return out;
}

int nearest_to_center(const std::vector<double>& positions) {
    int best = 0;
    for (int c = 1; c < static_cast<int>(positions.size()); ++c)
        if (std::abs(positions[c] - 0.5) < std::abs(positions[best] - 0.5)) best = c;
    return best;
}

std::vector<int> committee_members_for(CommitteeSpec spec, const ScoreProfile& scores, int k,
                                       const std::vector<double>* candidate_positions) {
    switch (spec) {
        case CommitteeSpec::topk:
            return top_k_by_column_sum(scores, k).members();
        case CommitteeSpec::seq_pav:
            return owa_winner_sequential(owa_pav(k), scores, k).members();
        case CommitteeSpec::seq_cc:
            return owa_winner_sequential(owa_chamberlin_courant(k), scores, k).members();
        case CommitteeSpec::single_centrist:
            if (candidate_positions) return {nearest_to_center(*candidate_positions)};
            return top_k_by_column_sum(scores, 1).members();
        case CommitteeSpec::direct_democracy:
            return all_indices(scores.n_voters());
    }
    throw std::invalid_argument("unknown committee spec");
}

}  // namespace

std::string to_string(CommitteeSpec spec) {
    switch (spec) {
        case CommitteeSpec::topk: return "topk";
        case CommitteeSpec::seq_pav: return "seq-pav";
        case CommitteeSpec::seq_cc: return "seq-cc";
        case CommitteeSpec::single_centrist: return "single-centrist";
        case CommitteeSpec::direct_democracy: return "direct-democracy";
    }
    throw std::invalid_argument("unknown committee spec");
}

std::string to_string(DecisionSpec spec) {
    switch (spec) {
        case DecisionSpec::majority: return "majority";
        case DecisionSpec::random_dictatorship: return "random-dictatorship";
    }
    throw std::invalid_argument("unknown decision spec");
}

std::string to_string(ExperimentMode mode) {
    return mode == ExperimentMode::line ? "line" : "preflib";
}

CommitteeSpec committee_spec_from_string(const std::string& text) {
    if (text == "topk") return CommitteeSpec::topk;
    if (text == "seq-pav") return CommitteeSpec::seq_pav;
    if (text == "seq-cc") return CommitteeSpec::seq_cc;
    if (text == "single-centrist") return CommitteeSpec::single_centrist;
    if (text == "direct-democracy") return CommitteeSpec::direct_democracy;
    throw std::invalid_argument("unknown committee spec '" + text + "'");
}

DecisionSpec decision_spec_from_string(const std::string& text) {
    if (text == "majority") return DecisionSpec::majority;
    if (text == "rd" || text == "random-dictatorship") return DecisionSpec::random_dictatorship;
    throw std::invalid_argument("unknown decision spec '" + text + "'");
}

ExperimentMode experiment_mode_from_string(const std::string& text) {
    if (text == "line") return ExperimentMode::line;
    if (text == "preflib") return ExperimentMode::preflib;
    throw std::invalid_argument("unknown experiment mode '" + text + "'");
}

ExperimentConfig ExperimentConfig::defaults_for(ExperimentMode mode) {
    ExperimentConfig config;
    config.mode = mode;
    if (mode == ExperimentMode::preflib) {
        config.p_min = 0.0;
        config.p_max = 3.0;
        config.n_trials = 10;
    }
    return config;
}

void ExperimentConfig::validate() const {
    if (n_voters < 1 || n_candidates < 1)
        throw std::invalid_argument("voter and candidate counts must be positive");
    if (committee_size < 1) throw std::invalid_argument("committee size must be positive");
    if (n_trials < 1) throw std::invalid_argument("trial count must be positive");
    if (threads < 1) throw std::invalid_argument("thread count must be positive");
    if (!(p_min <= p_max)) throw std::invalid_argument("p range is inverted");
    if (insignificance_band && !(insignificance_band->first <= insignificance_band->second))
        throw std::invalid_argument("insignificance band is inverted");
    if (committees.empty() || decisions.empty())
        throw std::invalid_argument("at least one committee and one decision rule required");
    const bool has_majority =
        std::find(decisions.begin(), decisions.end(), DecisionSpec::majority) != decisions.end();
    if (has_majority && committee_size % 2 == 0)
        throw std::invalid_argument("majority requires an odd committee size");
}

ExperimentConfig load_config(const std::string& json_text) {
    const auto j = nlohmann::json::parse(json_text);
    const auto mode = experiment_mode_from_string(j.value("mode", "line"));
    ExperimentConfig config = ExperimentConfig::defaults_for(mode);
    config.n_voters = j.value("voters", config.n_voters);
    config.n_candidates = j.value("candidates", config.n_candidates);
    config.committee_size = j.value("k", config.committee_size);
    config.n_trials = j.value("trials", config.n_trials);
    config.seed = j.value("seed", config.seed);
    config.threads = j.value("threads", config.threads);
    if (j.contains("p_range")) {
        const auto& range = j.at("p_range");
        config.p_min = range.at(0).get<double>();
        config.p_max = range.at(1).get<double>();
    }
    if (j.contains("insignificance_band") && !j.at("insignificance_band").is_null()) {
        const auto& band = j.at("insignificance_band");
        config.insignificance_band = {band.at(0).get<double>(), band.at(1).get<double>()};
    }
    if (j.contains("rules")) {
        config.committees.clear();
        for (const auto& name : j.at("rules"))
            config.committees.push_back(committee_spec_from_string(name.get<std::string>()));
    }
    if (j.contains("decisions")) {
        config.decisions.clear();
        for (const auto& name : j.at("decisions"))
            config.decisions.push_back(decision_spec_from_string(name.get<std::string>()));
    }
    config.validate();
    return config;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_config(buffer.str());
}

double acceptance_probability(double p, double distance) {
    return std::clamp(1.0 - p * distance, 0.0, 1.0);
}

std::vector<ResultRow> run_line_experiment(const ExperimentConfig& config) {
    config.validate();
    if (config.mode != ExperimentMode::line)
        throw std::invalid_argument("config is not in line mode");
    const int n = config.n_voters;
    const int m = config.n_candidates;
    const int k = config.committee_size;
    if (k > m) throw std::invalid_argument("committee size exceeds candidate count");
    const std::size_t n_rules = config.committees.size();
    const std::size_t n_decisions = config.decisions.size();
    const std::size_t slots = n_rules * n_decisions * n;

    std::vector<std::vector<double>> trial_sums(config.n_trials);
    std::vector<std::vector<double>> trial_positions(config.n_trials);

    run_trials(config.n_trials, config.threads, [&](int trial) {
        std::mt19937_64 rng(trial_stream_seed(config.seed, static_cast<std::uint64_t>(trial)));
        std::uniform_real_distribution<double> unit(0.0, 1.0);

        std::vector<double> voter_pos(n), cand_pos(m);
        for (double& v : voter_pos) v = unit(rng);
        std::sort(voter_pos.begin(), voter_pos.end());
        for (double& v : cand_pos) v = unit(rng);
        std::sort(cand_pos.begin(), cand_pos.end());

        std::vector<double> scores(static_cast<std::size_t>(n) * m);
        for (int i = 0; i < n; ++i)
            for (int c = 0; c < m; ++c)
                scores[static_cast<std::size_t>(i) * m + c] =
                    1.0 - std::abs(voter_pos[i] - cand_pos[c]);
        const ScoreProfile profile(n, m, std::move(scores));

        std::vector<SimCommittee> committees;
        committees.reserve(n_rules);
        for (CommitteeSpec spec : config.committees) {
            const bool voters = spec == CommitteeSpec::direct_democracy;
            committees.push_back(make_sim_committee(
                voters, committee_members_for(spec, profile, k, &cand_pos), config.decisions));
        }

        Matrix voter_dist(n, std::vector<double>(n));
        Matrix cand_dist(n, std::vector<double>(m));
        for (int issue = 0; issue < n; ++issue) {
            for (int i = 0; i < n; ++i) voter_dist[issue][i] = std::abs(voter_pos[issue] - voter_pos[i]);
            for (int c = 0; c < m; ++c) cand_dist[issue][c] = std::abs(voter_pos[issue] - cand_pos[c]);
        }

        trial_sums[trial].assign(slots, 0.0);
        simulate_trial(rng, voter_dist, cand_dist, config.p_min, config.p_max,
                       config.insignificance_band, committees, n_decisions, trial_sums[trial]);
        trial_positions[trial] = std::move(voter_pos);
    });

    std::vector<double> mean(slots, 0.0);
    std::vector<double> mean_position(n, 0.0);
    for (int t = 0; t < config.n_trials; ++t) {
        for (std::size_t s = 0; s < slots; ++s) mean[s] += trial_sums[t][s];
        for (int i = 0; i < n; ++i) mean_position[i] += trial_positions[t][i];
    }
    for (double& v : mean) v /= config.n_trials;
    for (double& v : mean_position) v /= config.n_trials;

    std::vector<ResultRow> rows;
    rows.reserve(slots);
    for (std::size_t r = 0; r < n_rules; ++r)
        for (std::size_t d = 0; d < n_decisions; ++d)
            for (int i = 0; i < n; ++i)
                rows.push_back({mean_position[i], to_string(config.committees[r]),
                                to_string(config.decisions[d]),
                                mean[(r * n_decisions + d) * n + i]});
    return rows;
}

std::vector<ResultRow> run_preflib_experiment(const ExperimentConfig& config,
                                              const RankProfile& profile,
                                              std::uint64_t trial_index_base) {
    config.validate();
    if (config.mode != ExperimentMode::preflib)
        throw std::invalid_argument("config is not in preflib mode");
    if (!filter_dataset(profile))
        throw std::invalid_argument("dataset rejected by the voter/candidate thresholds");
    const int n = profile.n_voters;
    const int k = config.committee_size;
    if (k > profile.n_candidates)
        throw std::invalid_argument("committee size exceeds candidate count");

    const IssueDistances distances = issue_distances(profile);
    const ScoreProfile scores = borda_scores(profile);
    const std::size_t n_rules = config.committees.size();
    const std::size_t n_decisions = config.decisions.size();
    const std::size_t slots = n_rules * n_decisions * n;

    std::vector<SimCommittee> committees;
    committees.reserve(n_rules);
    for (CommitteeSpec spec : config.committees) {
        const bool voters = spec == CommitteeSpec::direct_democracy;
        committees.push_back(make_sim_committee(
            voters, committee_members_for(spec, scores, k, nullptr), config.decisions));
    }

    std::vector<std::vector<double>> trial_sums(config.n_trials);
    run_trials(config.n_trials, config.threads, [&](int trial) {
        std::mt19937_64 rng(trial_stream_seed(config.seed, trial_index_base + static_cast<std::uint64_t>(trial)));
        trial_sums[trial].assign(slots, 0.0);
        simulate_trial(rng, distances.voter, distances.candidate, config.p_min, config.p_max,
                       config.insignificance_band, committees, n_decisions, trial_sums[trial]);
    });

    std::vector<double> mean(slots, 0.0);
    for (int t = 0; t < config.n_trials; ++t)
        for (std::size_t s = 0; s < slots; ++s) mean[s] += trial_sums[t][s];
    for (double& v : mean) v /= config.n_trials;

    std::vector<ResultRow> rows;
    rows.reserve(slots);
    std::vector<double> curve(n);
    for (std::size_t r = 0; r < n_rules; ++r) {
        for (std::size_t d = 0; d < n_decisions; ++d) {
            const double* slot = mean.data() + (r * n_decisions + d) * n;
            std::copy(slot, slot + n, curve.begin());
            std::sort(curve.begin(), curve.end());
            for (int i = 0; i < n; ++i)
                rows.push_back({static_cast<double>(i + 1) / n, to_string(config.committees[r]),
                                to_string(config.decisions[d]), curve[i]});
        }
    }
    return rows;
}

void emit_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
    out << "x,rule,decision,satisfaction\n";
    for (const auto& row : rows)
        out << format_real(row.x) << ',' << row.rule << ',' << row.decision << ','
            << format_real(row.satisfaction) << '\n';
}

void emit_csv_file(const std::vector<ResultRow>& rows, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    emit_csv(rows, out);
}

std::string csv_string(const std::vector<ResultRow>& rows) {
    std::ostringstream out;
    emit_csv(rows, out);
    return out.str();
}

}  // namespace celect
