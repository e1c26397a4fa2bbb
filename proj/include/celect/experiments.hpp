#pragma once
// Monte-Carlo pipelines: committees elected from spatial or Borda scores
// deciding one issue per voter, with deterministic seeding and CSV output.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "celect/model.hpp"
#include "celect/preflib.hpp"

namespace celect {

enum class CommitteeSpec { topk, seq_pav, seq_cc, single_centrist, direct_democracy };
enum class DecisionSpec { majority, random_dictatorship };
enum class ExperimentMode { line, preflib };

std::string to_string(CommitteeSpec spec);
std::string to_string(DecisionSpec spec);
std::string to_string(ExperimentMode mode);
CommitteeSpec committee_spec_from_string(const std::string& text);
DecisionSpec decision_spec_from_string(const std::string& text);
ExperimentMode experiment_mode_from_string(const std::string& text);

struct ExperimentConfig {
    ExperimentMode mode = ExperimentMode::line;
    int n_voters = 100;
    int n_candidates = 100;
    int committee_size = 11;
    int n_trials = 200;
    std::uint64_t seed = 1;
    double p_min = 1.5;
    double p_max = 2.5;
    std::optional<std::pair<double, double>> insignificance_band;
    std::vector<CommitteeSpec> committees = {
        CommitteeSpec::topk, CommitteeSpec::seq_pav, CommitteeSpec::seq_cc,
        CommitteeSpec::single_centrist, CommitteeSpec::direct_democracy};
    std::vector<DecisionSpec> decisions = {DecisionSpec::majority,
                                           DecisionSpec::random_dictatorship};
    int threads = 1;

    static ExperimentConfig defaults_for(ExperimentMode mode);
    void validate() const;
};

// JSON object mirroring ExperimentConfig; absent keys keep the mode defaults.
ExperimentConfig load_config(const std::string& json_text);
ExperimentConfig load_config_file(const std::string& path);

// One output row: x is the voter position (line mode) or the sorted voter
// fraction (preflib mode).
struct ResultRow {
    double x = 0.0;
    std::string rule;
    std::string decision;
    double satisfaction = 0.0;
};

// Acceptance probability 1 - p * distance, clamped to [0,1].
double acceptance_probability(double p, double distance);

// Voters, candidates and issues on [0,1]; committees recomputed per trial from
// scores 1 - distance; per-voter mean satisfaction across trials, voters
// ordered by position rank.
std::vector<ResultRow> run_line_experiment(const ExperimentConfig& config);

// Distances and committees from the rank profile (Borda scores); per-voter
// mean satisfactions sorted ascending per (rule, decision) curve. Trial RNG
// streams are seed ^ (trial_index_base + trial).
std::vector<ResultRow> run_preflib_experiment(const ExperimentConfig& config,
                                              const RankProfile& profile,
                                              std::uint64_t trial_index_base = 0);

void emit_csv(const std::vector<ResultRow>& rows, std::ostream& out);
void emit_csv_file(const std::vector<ResultRow>& rows, const std::string& path);
std::string csv_string(const std::vector<ResultRow>& rows);

}  // namespace celect
