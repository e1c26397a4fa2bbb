#include "celect/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

namespace celect {

namespace {

constexpr double kSymmetryTol = 1e-12;

bool is_zero_or_one(double v) { return v == 0.0 || v == 1.0; }

}  // namespace

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::string to_string(ProfileKind kind) {
    switch (kind) {
        case ProfileKind::approval: return "approval";
        case ProfileKind::borda: return "borda";
        case ProfileKind::general: return "general";
    }
    throw std::invalid_argument("unknown profile kind");
}

ProfileKind parse_profile_kind(const std::string& text) {
    if (text == "approval") return ProfileKind::approval;
    if (text == "borda") return ProfileKind::borda;
    if (text == "general") return ProfileKind::general;
    throw std::invalid_argument("unknown profile kind '" + text + "'");
}

ScoreProfile::ScoreProfile(int n_voters, int n_candidates, std::vector<double> scores,
                           ProfileKind kind)
    : n_voters_(n_voters), n_candidates_(n_candidates), kind_(kind), scores_(std::move(scores)) {
    if (n_voters_ <= 0 || n_candidates_ <= 0)
        throw std::invalid_argument("profile needs at least one voter and one candidate");
    if (scores_.size() != static_cast<std::size_t>(n_voters_) * n_candidates_)
        throw std::invalid_argument("score matrix size does not match n_voters * n_candidates");
    for (double v : scores_) {
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("score outside [0,1]");
    }
    if (kind_ == ProfileKind::approval) {
        for (double v : scores_)
            if (!is_zero_or_one(v)) throw std::invalid_argument("approval score must be 0 or 1");
    } else if (kind_ == ProfileKind::borda) {
        if (n_candidates_ < 2)
            throw std::invalid_argument("borda profile needs at least two candidates");
        std::vector<double> sorted(n_candidates_);
        for (int i = 0; i < n_voters_; ++i) {
            auto r = row(i);
            std::copy(r.begin(), r.end(), sorted.begin());
            std::sort(sorted.begin(), sorted.end());
            for (int j = 0; j < n_candidates_; ++j) {
                double expected = static_cast<double>(j) / (n_candidates_ - 1);
                if (std::abs(sorted[j] - expected) > 1e-9)
                    throw std::invalid_argument("borda row is not a rescaled permutation");
            }
        }
    }
}

std::span<const double> ScoreProfile::row(int voter) const {
    return {scores_.data() + static_cast<std::size_t>(voter) * n_candidates_,
            static_cast<std::size_t>(n_candidates_)};
}

double ScoreProfile::column_sum(int candidate) const {
    double sum = 0.0;
    for (int i = 0; i < n_voters_; ++i) sum += score(i, candidate);
    return sum;
}

Committee::Committee(std::vector<int> members, int n_candidates) : members_(std::move(members)) {
    if (members_.empty()) throw std::invalid_argument("committee must have at least one member");
    if (static_cast<int>(members_.size()) > n_candidates)
        throw std::invalid_argument("committee larger than the candidate set");
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw std::invalid_argument("committee members must be distinct");
    if (members_.front() < 0 || members_.back() >= n_candidates)
        throw std::invalid_argument("committee member index out of range");
}

bool lex_less(const Committee& a, const Committee& b) {
    return std::lexicographical_compare(a.members().begin(), a.members().end(),
                                        b.members().begin(), b.members().end());
}

char to_char(Alternative alt) { return alt == Alternative::accept ? 'A' : 'R'; }

Alternative alternative_from_char(char c) {
    if (c == 'A' || c == 'a') return Alternative::accept;
    if (c == 'R' || c == 'r') return Alternative::reject;
    throw std::invalid_argument(std::string("unknown alternative token '") + c + "'");
}

DeterministicInstance::DeterministicInstance(ScoreProfile approvals_in,
                                             std::vector<Alternative> preferred_in)
    : approvals(std::move(approvals_in)), preferred(std::move(preferred_in)) {
    if (approvals.kind() != ProfileKind::approval)
        throw std::invalid_argument("deterministic instance requires an approval profile");
    if (static_cast<int>(preferred.size()) != approvals.n_voters())
        throw std::invalid_argument("preferred-alternative vector length must equal n_voters");
}

DecisionRule::DecisionRule(std::vector<double> probs, bool symmetric)
    : probs_(std::move(probs)), symmetric_(symmetric) {
    if (probs_.size() < 2) throw std::invalid_argument("decision rule needs k >= 1");
    for (double v : probs_)
        if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("decision probability outside [0,1]");
    if (symmetric_) {
        const int kk = k();
        for (int a = 0; a <= kk; ++a)
            if (std::abs(probs_[a] + probs_[kk - a] - 1.0) > kSymmetryTol)
                throw std::invalid_argument("rule marked symmetric violates prob(a) + prob(K-a) = 1");
    }
}

double DecisionRule::prob(int accepts) const {
    if (accepts < 0 || accepts > k())
        throw std::out_of_range("accept count outside 0..K");
    return probs_[accepts];
}

bool DecisionRule::monotone() const {
    for (std::size_t a = 1; a < probs_.size(); ++a)
        if (probs_[a] + kSymmetryTol < probs_[a - 1]) return false;
    return true;
}

double decision_prob(const DecisionRule& rule, int accepts) { return rule.prob(accepts); }

DecisionRule make_majority(int committee_size) {
    if (committee_size < 1) throw std::invalid_argument("committee size must be positive");
    if (committee_size % 2 == 0) throw std::invalid_argument("majority rule requires odd committee size");
    std::vector<double> probs(committee_size + 1, 0.0);
    for (int a = (committee_size + 1) / 2; a <= committee_size; ++a) probs[a] = 1.0;
    return DecisionRule(std::move(probs), true);
}

DecisionRule make_random_dictatorship(int committee_size) {
    if (committee_size < 1) throw std::invalid_argument("committee size must be positive");
    std::vector<double> probs(committee_size + 1);
    for (int a = 0; a <= committee_size; ++a)
        probs[a] = static_cast<double>(a) / committee_size;
    return DecisionRule(std::move(probs), true);
}

DecisionRule make_unanimity(int committee_size) {
    if (committee_size < 1) throw std::invalid_argument("committee size must be positive");
    std::vector<double> probs(committee_size + 1, 0.0);
    probs[committee_size] = 1.0;
    return DecisionRule(std::move(probs), committee_size == 1);
}

DecisionRule make_quota(int committee_size, int threshold, bool half_plateau) {
    const int k = committee_size;
    if (k < 1) throw std::invalid_argument("committee size must be positive");
    if (2 * threshold <= k)
        throw std::invalid_argument("quota threshold must exceed K/2");
    if (threshold > k + 1) throw std::invalid_argument("quota threshold must be at most K+1");
    const int center = k / 2 + 1;  // first index strictly above K/2
    if (!half_plateau && threshold > center)
        throw std::invalid_argument("quota without plateau requires the threshold at the center");
    std::vector<double> probs(k + 1, 0.0);
    for (int a = threshold; a <= k; ++a) probs[a] = 1.0;
    for (int a = center; a < threshold; ++a) probs[a] = 0.5;
    for (int a = 0; a < center; ++a) {
        const int mirror = k - a;
        probs[a] = mirror < center ? 0.5 : 1.0 - probs[mirror];  // mirror < center only at an even-K center
    }
    return DecisionRule(std::move(probs), true);
}

std::vector<double> consistency_table(const DecisionRule& rule, Alternative preferred) {
    const int k = rule.k();
    std::vector<double> table(k + 1);
    for (int l = 0; l <= k; ++l)
        table[l] = preferred == Alternative::accept ? rule.prob(l) : 1.0 - rule.prob(k - l);
    return table;
}

namespace {

// Reads the next non-blank line; returns false on EOF.
bool next_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
}

}  // namespace

ProfileFile read_profile(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!next_line(in, line, line_no)) throw ParseError(1, "empty profile");
    std::istringstream header(line);
    int n = 0, m = 0;
    std::string kind_text;
    if (!(header >> n >> m >> kind_text)) throw ParseError(line_no, "expected header 'n m kind'");
    std::string extra;
    if (header >> extra) throw ParseError(line_no, "trailing tokens after header");
    if (n <= 0 || m <= 0) throw ParseError(line_no, "voter and candidate counts must be positive");
    ProfileKind kind;
    try {
        kind = parse_profile_kind(kind_text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }

    std::vector<double> scores;
    scores.reserve(static_cast<std::size_t>(n) * m);
    for (int i = 0; i < n; ++i) {
        if (!next_line(in, line, line_no))
            throw ParseError(line_no + 1, "expected " + std::to_string(n) + " score rows");
        std::istringstream row(line);
        double v = 0.0;
        for (int j = 0; j < m; ++j) {
            if (!(row >> v)) throw ParseError(line_no, "expected " + std::to_string(m) + " scores");
            scores.push_back(v);
        }
        if (row >> extra) throw ParseError(line_no, "too many scores on row");
    }

    std::optional<std::vector<Alternative>> preferred;
    if (next_line(in, line, line_no)) {
        std::istringstream row(line);
        std::vector<Alternative> alts;
        std::string tok;
        while (row >> tok) {
            if (tok.size() != 1) throw ParseError(line_no, "expected single-character A/R tokens");
            try {
                alts.push_back(alternative_from_char(tok[0]));
            } catch (const std::invalid_argument& e) {
                throw ParseError(line_no, e.what());
            }
        }
        if (static_cast<int>(alts.size()) != n)
            throw ParseError(line_no, "expected one A/R token per voter");
        preferred = std::move(alts);
        if (next_line(in, line, line_no)) throw ParseError(line_no, "unexpected trailing content");
    }

    try {
        return ProfileFile{ScoreProfile(n, m, std::move(scores), kind), std::move(preferred)};
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
}

ProfileFile read_profile_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_profile(in);
}

void write_profile(std::ostream& out, const ScoreProfile& profile,
                   const std::vector<Alternative>* preferred) {
    out << profile.n_voters() << ' ' << profile.n_candidates() << ' ' << to_string(profile.kind())
        << '\n';
    char buf[64];
    for (int i = 0; i < profile.n_voters(); ++i) {
        auto r = profile.row(i);
        for (int j = 0; j < profile.n_candidates(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", r[j]);
            out << (j ? " " : "") << buf;
        }
        out << '\n';
    }
    if (preferred) {
        for (std::size_t i = 0; i < preferred->size(); ++i)
            out << (i ? " " : "") << to_char((*preferred)[i]);
        out << '\n';
    }
}

}  // namespace celect
