#pragma once
// Core types for committee elections: score profiles, committees, randomized
// decision rules and single-issue deterministic instances, plus the text
// format shared by the CLI and the fixtures.

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace celect {

// Fixed six-decimal rendering used for every real printed by the CLI and the
// CSV writers.
std::string format_real(double value);

// Input failure carrying the 1-based line it was detected on.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

enum class ProfileKind { approval, borda, general };

std::string to_string(ProfileKind kind);
ProfileKind parse_profile_kind(const std::string& text);

// Matrix of scores u(voter, candidate) in [0,1]. Approval profiles are 0/1;
// Borda profiles hold, per voter, a permutation of {0, 1/(m-1), ..., 1}.
class ScoreProfile {
public:
    ScoreProfile(int n_voters, int n_candidates, std::vector<double> scores,
                 ProfileKind kind = ProfileKind::general);

    int n_voters() const { return n_voters_; }
    int n_candidates() const { return n_candidates_; }
    ProfileKind kind() const { return kind_; }

    double score(int voter, int candidate) const {
        return scores_[static_cast<std::size_t>(voter) * n_candidates_ + candidate];
    }
    std::span<const double> row(int voter) const;
    double column_sum(int candidate) const;

private:
    int n_voters_ = 0;
    int n_candidates_ = 0;
    ProfileKind kind_ = ProfileKind::general;
    std::vector<double> scores_;
};

// A size-K subset of candidate indices, kept sorted ascending.
class Committee {
public:
    Committee(std::vector<int> members, int n_candidates);

    int size() const { return static_cast<int>(members_.size()); }
    const std::vector<int>& members() const { return members_; }

    friend bool operator==(const Committee&, const Committee&) = default;

private:
    std::vector<int> members_;
};

// Lexicographic order on sorted member lists; this is the tie-break order used
// by every argmax in the library.
bool lex_less(const Committee& a, const Committee& b);

enum class Alternative { accept, reject };

char to_char(Alternative alt);
Alternative alternative_from_char(char c);

// Approval profile plus each voter's preferred alternative on their own issue.
struct DeterministicInstance {
    DeterministicInstance(ScoreProfile approvals, std::vector<Alternative> preferred);

    ScoreProfile approvals;
    std::vector<Alternative> preferred;
};

// Map from the number of committee members voting "accept" (0..K) to the
// probability that the committee decision is "accept".
class DecisionRule {
public:
    DecisionRule(std::vector<double> probs, bool symmetric);

    int k() const { return static_cast<int>(probs_.size()) - 1; }
    double prob(int accepts) const;
    std::span<const double> probs() const { return probs_; }
    bool symmetric() const { return symmetric_; }
    bool monotone() const;

    friend bool operator==(const DecisionRule&, const DecisionRule&) = default;

private:
    std::vector<double> probs_;
    bool symmetric_ = false;
};

double decision_prob(const DecisionRule& rule, int accepts);

DecisionRule make_majority(int committee_size);             // committee_size odd
DecisionRule make_random_dictatorship(int committee_size);
DecisionRule make_unanimity(int committee_size);

// Symmetric monotone rule that accepts deterministically at `threshold` or
// more accept votes. With `half_plateau`, positions between the center and the
// threshold get probability 1/2; without it the threshold must sit at the
// center. threshold = K+1 yields the constant-1/2 rule.
DecisionRule make_quota(int committee_size, int threshold, bool half_plateau);

// Probability that the decision matches a voter preferring `preferred`, as a
// function of how many members vote consistently with that voter. Equals the
// rule's own table for symmetric rules.
std::vector<double> consistency_table(const DecisionRule& rule, Alternative preferred);

// Text format: header "n m kind", then n rows of m scores, then (optionally,
// for deterministic instances) one row of n A/R tokens.
struct ProfileFile {
    ScoreProfile profile;
    std::optional<std::vector<Alternative>> preferred;
};

ProfileFile read_profile(std::istream& in);
ProfileFile read_profile_file(const std::string& path);
void write_profile(std::ostream& out, const ScoreProfile& profile,
                   const std::vector<Alternative>* preferred = nullptr);

}  // namespace celect
