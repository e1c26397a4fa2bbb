// Command-line front end: every library operation as a subcommand with
// CSV/line output, 1-based candidate indices on the surface.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "celect/eval.hpp"
#include "celect/experiments.hpp"
#include "celect/model.hpp"
#include "celect/owa.hpp"
#include "celect/preflib.hpp"
#include "celect/rules.hpp"

namespace {

using namespace celect;

std::vector<int> parse_committee_arg(const std::string& text) {
    std::vector<int> members;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        std::size_t used = 0;
        int id = 0;
        try {
            id = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad candidate index '" + token + "'");
        }
        if (used != token.size() || id < 1)
            throw std::invalid_argument("bad candidate index '" + token + "'");
        members.push_back(id - 1);
    }
    if (members.empty()) throw std::invalid_argument("empty committee");
    return members;
}

DecisionRule parse_decision_arg(const std::string& name, int k) {
    if (name == "majority") return make_majority(k);
    if (name == "rd" || name == "random-dictatorship") return make_random_dictatorship(k);
    if (name == "unanimity") return make_unanimity(k);
    if (name.rfind("quota:", 0) == 0) {
        const std::string t = name.substr(6);
        std::size_t used = 0;
        int threshold = 0;
        try {
            threshold = std::stoi(t, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad quota threshold '" + t + "'");
        }
        if (used != t.size()) throw std::invalid_argument("bad quota threshold '" + t + "'");
        return make_quota(k, threshold, true);
    }
    throw std::invalid_argument("unknown decision rule '" + name + "'");
}

std::string committee_text(const Committee& committee) {
    std::string out;
    for (std::size_t i = 0; i < committee.members().size(); ++i)
        out += (i ? "," : "") + std::to_string(committee.members()[i] + 1);
    return out;
}

std::string probs_text(const DecisionRule& rule) {
    std::string out;
    for (int a = 0; a <= rule.k(); ++a) out += (a ? "," : "") + format_real(rule.prob(a));
    return out;
}

DeterministicInstance instance_from_file(const ProfileFile& file) {
    if (file.profile.kind() != ProfileKind::approval)
        throw std::invalid_argument("the deterministic model needs an approval profile");
    // Files without an A/R row default to acceptance-oriented voters.
    return DeterministicInstance(
        file.profile, file.preferred.value_or(std::vector<Alternative>(
                          file.profile.n_voters(), Alternative::accept)));
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << text;
}

struct SimulateArgs {
    std::string config_path;
    std::string out_path;
    int voters = 0;
    int candidates = 0;
    int k = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    int threads = 0;
    bool insignificant = false;
    std::string dir;
};

void add_common_simulate_flags(CLI::App* cmd, SimulateArgs& args) {
    cmd->add_option("--trials", args.trials, "number of Monte-Carlo trials");
    cmd->add_option("--seed", args.seed, "RNG seed");
    cmd->add_option("--threads", args.threads, "worker threads (output is identical for any count)");
    cmd->add_option("--config", args.config_path, "JSON config file; explicit flags override it");
    cmd->add_option("--out", args.out_path, "output CSV path ('-' for stdout)")->required();
}

ExperimentConfig build_config(const CLI::App* cmd, const SimulateArgs& args,
                              ExperimentMode mode) {
    ExperimentConfig config = args.config_path.empty()
                                  ? ExperimentConfig::defaults_for(mode)
                                  : load_config_file(args.config_path);
    if (config.mode != mode) throw std::invalid_argument("config file is for the other mode");
    if (cmd->count("--voters")) config.n_voters = args.voters;
    if (cmd->count("--candidates")) config.n_candidates = args.candidates;
    if (cmd->count("--k")) config.committee_size = args.k;
    if (cmd->count("--trials")) config.n_trials = args.trials;
    if (cmd->count("--seed")) config.seed = args.seed;
    if (cmd->count("--threads")) config.threads = args.threads;
    if (cmd->count("--insignificant")) config.insignificance_band = {0.4, 0.6};
    config.validate();
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"committee elections: multiwinner rules, decision rules, satisfaction "
                 "evaluation and Monte-Carlo simulations"};
    app.set_version_flag("--version", "celect 1.0.0");
    app.require_subcommand(1);
    std::ostringstream result;

    // winners
    auto* winners = app.add_subcommand("winners", "compute a multiwinner committee");
    std::string winners_rule, winners_profile;
    int winners_k = 0;
    bool winners_exact = false, winners_sequential = false;
    winners->add_option("--rule", winners_rule, "topk | cc | pav | kmedian(j)")->required();
    winners->add_option("--k", winners_k, "committee size")->required();
    winners->add_option("--profile", winners_profile, "profile file")->required();
    winners->add_flag("--exact", winners_exact, "exact winner by enumeration");
    winners->add_flag("--sequential", winners_sequential, "greedy sequential winner");
    winners->callback([&] {
        if (winners_exact == winners_sequential)
            throw std::invalid_argument("pass exactly one of --exact and --sequential");
        const auto file = read_profile_file(winners_profile);
        const OwaVector alpha = named_rule(winners_rule, winners_k);
        const Committee committee =
            winners_exact ? owa_winner_exact(alpha, file.profile, winners_k)
                          : owa_winner_sequential(alpha, file.profile, winners_k);
        result << "committee: " << committee_text(committee) << '\n'
               << "total: " << format_real(owa_total(alpha, file.profile, committee)) << '\n';
    });

    // evaluate
    auto* evaluate = app.add_subcommand("evaluate", "satisfaction of a fixed committee");
    std::string eval_profile, eval_committee, eval_decision, eval_model = "det";
    evaluate->add_option("--profile", eval_profile, "profile file")->required();
    evaluate->add_option("--committee", eval_committee, "1-based indices, e.g. 1,2,3")->required();
    evaluate->add_option("--decision", eval_decision, "majority | rd | unanimity | quota:t")
        ->required();
    evaluate->add_option("--model", eval_model, "det | prob");
    evaluate->callback([&] {
        const auto file = read_profile_file(eval_profile);
        const Committee committee(parse_committee_arg(eval_committee),
                                  file.profile.n_candidates());
        const DecisionRule rule = parse_decision_arg(eval_decision, committee.size());
        EvalReport report;
        if (eval_model == "det") {
            report = eval_deterministic(instance_from_file(file), committee, rule);
        } else if (eval_model == "prob") {
            report = eval_probabilistic(file.profile, committee, rule);
        } else {
            throw std::invalid_argument("model must be det or prob");
        }
        result << "voter,satisfaction\n";
        for (std::size_t i = 0; i < report.per_voter.size(); ++i)
            result << i + 1 << ',' << format_real(report.per_voter[i]) << '\n';
        result << "total," << format_real(report.total) << '\n';
    });

    // optimal-committee
    auto* optimal = app.add_subcommand("optimal-committee", "best committee for a decision rule");
    std::string opt_profile, opt_decision, opt_model = "det";
    int opt_k = 0;
    optimal->add_option("--profile", opt_profile, "profile file")->required();
    optimal->add_option("--k", opt_k, "committee size")->required();
    optimal->add_option("--decision", opt_decision, "majority | rd | unanimity | quota:t")
        ->required();
    optimal->add_option("--model", opt_model, "det | prob");
    optimal->callback([&] {
        const auto file = read_profile_file(opt_profile);
        const DecisionRule rule = parse_decision_arg(opt_decision, opt_k);
        std::pair<Committee, EvalReport> best =
            opt_model == "det"
                ? optimal_committee(instance_from_file(file), opt_k, rule)
                : optimal_committee(file.profile, opt_k, rule);
        result << "committee: " << committee_text(best.first) << '\n'
               << "total: " << format_real(best.second.total) << '\n';
    });

    // comb
    auto* comb_cmd = app.add_subcommand("comb", "combined full rule");
    std::string comb_profile;
    int comb_k = 0;
    comb_cmd->add_option("--profile", comb_profile, "profile file")->required();
    comb_cmd->add_option("--k", comb_k, "odd committee size")->required();
    comb_cmd->callback([&] {
        const auto file = read_profile_file(comb_profile);
        const FullRuleOutcome outcome = comb(instance_from_file(file), comb_k);
        const bool rd = outcome.decision == make_random_dictatorship(comb_k);
        result << "committee: " << committee_text(outcome.committee) << '\n'
               << "decision: " << (rd ? "random-dictatorship" : "majority") << '\n'
               << "total: " << format_real(outcome.total) << '\n';
    });

    // optimal-full
    auto* full = app.add_subcommand("optimal-full", "optimal full multiwinner rule");
    std::string full_profile;
    int full_k = 0;
    full->add_option("--profile", full_profile, "profile file")->required();
    full->add_option("--k", full_k, "committee size")->required();
    full->callback([&] {
        const auto file = read_profile_file(full_profile);
        const FullRuleOutcome outcome = optimal_full_multiwinner(instance_from_file(file), full_k);
        result << "committee: " << committee_text(outcome.committee) << '\n'
               << "decision: " << probs_text(outcome.decision) << '\n'
               << "total: " << format_real(outcome.total) << '\n';
    });

    // simulate-line
    auto* line = app.add_subcommand("simulate-line", "spatial simulation on [0,1]");
    SimulateArgs line_args;
    line->add_option("--voters", line_args.voters, "number of voters");
    line->add_option("--candidates", line_args.candidates, "number of candidates");
    line->add_option("--k", line_args.k, "committee size");
    line->add_flag("--insignificant", line_args.insignificant,
                   "drop issues with acceptance odds near a coin flip");
    add_common_simulate_flags(line, line_args);
    line->callback([&] {
        const ExperimentConfig config = build_config(line, line_args, ExperimentMode::line);
        write_output(csv_string(run_line_experiment(config)), line_args.out_path);
    });

    // simulate-preflib
    auto* pref = app.add_subcommand("simulate-preflib", "simulation over preference datasets");
    SimulateArgs pref_args;
    pref->add_option("--dir", pref_args.dir, "directory of preference files")->required();
    pref->add_option("--k", pref_args.k, "committee size");
    add_common_simulate_flags(pref, pref_args);
    pref->callback([&] {
        const ExperimentConfig config = build_config(pref, pref_args, ExperimentMode::preflib);
        std::vector<std::string> paths;
        for (const auto& entry : std::filesystem::directory_iterator(pref_args.dir))
            if (entry.is_regular_file()) paths.push_back(entry.path().string());
        std::sort(paths.begin(), paths.end());
        std::vector<ResultRow> rows;
        std::uint64_t dataset = 0;
        for (const auto& path : paths) {
            const RankProfile profile = read_preflib_file(path);
            if (!filter_dataset(profile)) continue;
            auto part = run_preflib_experiment(config, profile,
                                               dataset * static_cast<std::uint64_t>(config.n_trials));
            rows.insert(rows.end(), part.begin(), part.end());
            ++dataset;
        }
        if (dataset == 0) throw std::runtime_error("no dataset passed the size filter");
        write_output(csv_string(rows), pref_args.out_path);
    });

    // parse-preflib
    auto* parse = app.add_subcommand("parse-preflib", "convert a preference file to a profile");
    std::string parse_in, parse_out;
    parse->add_option("--in", parse_in, "preference file")->required();
    parse->add_option("--out", parse_out, "output profile path ('-' for stdout)");
    parse->callback([&] {
        const RankProfile profile = read_preflib_file(parse_in);
        std::ostringstream out;
        write_profile(out, borda_scores(profile));
        write_output(out.str(), parse_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    std::cout << result.str();
    return 0;
}
