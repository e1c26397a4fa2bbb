#include "celect/preflib.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace celect {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

bool parse_int(const std::string& text, int& out) {
    const std::string t = trim(text);
    if (t.empty()) return false;
    std::size_t used = 0;
    try {
        out = std::stoi(t, &used);
    } catch (const std::exception&) {
        return false;
    }
    return used == t.size();
}

// Looks for "<KEY>: value" in a '#' metadata line.
bool metadata_int(const std::string& line, const std::string& key, int& out) {
    const auto pos = line.find(key);
    if (pos == std::string::npos) return false;
    const auto colon = line.find(':', pos + key.size());
    if (colon == std::string::npos) return false;
    return parse_int(line.substr(colon + 1), out);
}

long long count_inversions(std::vector<int>& seq, std::vector<int>& buffer) {
    const std::size_t n = seq.size();
    long long inversions = 0;
    for (std::size_t width = 1; width < n; width *= 2) {
        for (std::size_t lo = 0; lo + width < n; lo += 2 * width) {
            const std::size_t mid = lo + width;
            const std::size_t hi = std::min(lo + 2 * width, n);
            std::size_t i = lo, j = mid, out = lo;
            while (i < mid && j < hi) {
                if (seq[i] <= seq[j]) {
                    buffer[out++] = seq[i++];
                } else {
                    inversions += static_cast<long long>(mid - i);
                    buffer[out++] = seq[j++];
                }
            }
            while (i < mid) buffer[out++] = seq[i++];
            while (j < hi) buffer[out++] = seq[j++];
            std::copy(buffer.begin() + lo, buffer.begin() + hi, seq.begin() + lo);
        }
    }
    return inversions;
}

void rescale_row_to_half_mean(std::vector<double>& row) {
    double mean = 0.0;
    for (double v : row) mean += v;
    mean /= row.size();
    if (mean == 0.0) return;  // degenerate row, left as zeros
    const double scale = 0.5 / mean;
    for (double& v : row) v *= scale;
}

}  // namespace

std::vector<std::vector<int>> RankProfile::expanded() const {
    std::vector<std::vector<int>> out;
    out.reserve(n_voters);
    for (std::size_t r = 0; r < rankings.size(); ++r)
        for (int count = 0; count < multiplicities[r]; ++count) out.push_back(rankings[r]);
    return out;
}

RankProfile parse_preflib(const std::string& text) {
    RankProfile profile;
    int declared_candidates = 0;
    int declared_voters = 0;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            int value = 0;
            if (metadata_int(t, "NUMBER ALTERNATIVES", value)) declared_candidates = value;
            if (metadata_int(t, "NUMBER VOTERS", value)) declared_voters = value;
            continue;
        }
        if (t.find('{') != std::string::npos || t.find('}') != std::string::npos)
            throw ParseError(line_no, "tied preference groups are not supported");

        const auto colon = t.find(':');
        if (colon == std::string::npos) throw ParseError(line_no, "expected 'count: ids'");
        int count = 0;
        if (!parse_int(t.substr(0, colon), count) || count < 1)
            throw ParseError(line_no, "bad voter count");

        std::vector<int> ranking;
        std::string token;
        std::istringstream ids(t.substr(colon + 1));
        while (std::getline(ids, token, ',')) {
            int id = 0;
            if (!parse_int(token, id)) throw ParseError(line_no, "bad candidate id '" + trim(token) + "'");
            ranking.push_back(id - 1);
        }
        if (ranking.empty()) throw ParseError(line_no, "empty ranking");

        if (profile.n_candidates == 0)
            profile.n_candidates = declared_candidates > 0
                                       ? declared_candidates
                                       : static_cast<int>(ranking.size());
        if (static_cast<int>(ranking.size()) != profile.n_candidates)
            throw ParseError(line_no, "incomplete ranking: expected " +
                                          std::to_string(profile.n_candidates) + " candidates");
        std::vector<bool> seen(profile.n_candidates, false);
        for (int id : ranking) {
            if (id < 0 || id >= profile.n_candidates)
                throw ParseError(line_no, "unknown candidate id " + std::to_string(id + 1));
            if (seen[id])
                throw ParseError(line_no, "repeated candidate id " + std::to_string(id + 1));
            seen[id] = true;
        }

        profile.rankings.push_back(std::move(ranking));
        profile.multiplicities.push_back(count);
        profile.n_voters += count;
    }
    if (profile.rankings.empty()) throw ParseError(line_no == 0 ? 1 : line_no, "no rankings found");
    if (declared_voters > 0 && declared_voters != profile.n_voters)
        throw ParseError(line_no, "declared voter count does not match the rankings");
    return profile;
}

RankProfile read_preflib_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_preflib(buffer.str());
}

std::string serialize_preflib(const RankProfile& profile) {
    std::ostringstream out;
    out << "# NUMBER ALTERNATIVES: " << profile.n_candidates << '\n';
    out << "# NUMBER VOTERS: " << profile.n_voters << '\n';
    for (std::size_t r = 0; r < profile.rankings.size(); ++r) {
        out << profile.multiplicities[r] << ": ";
        for (std::size_t j = 0; j < profile.rankings[r].size(); ++j)
            out << (j ? "," : "") << profile.rankings[r][j] + 1;
        out << '\n';
    }
    return out.str();
}

bool filter_dataset(const RankProfile& profile) {
    return profile.n_voters >= 15 && profile.n_candidates >= 20;
}

long long kendall_tau(std::span<const int> rank_a, std::span<const int> rank_b) {
    if (rank_a.size() != rank_b.size())
        throw std::invalid_argument("rankings must have the same length");
    const int m = static_cast<int>(rank_a.size());
    std::vector<int> position_in_b(m, -1);
    for (int r = 0; r < m; ++r) {
        const int c = rank_b[r];
        if (c < 0 || c >= m || position_in_b[c] != -1)
            throw std::invalid_argument("inputs must be permutations of 0..m-1");
        position_in_b[c] = r;
    }
    std::vector<int> seq(m);
    std::vector<bool> seen(m, false);
    for (int r = 0; r < m; ++r) {
        const int c = rank_a[r];
        if (c < 0 || c >= m || seen[c])
            throw std::invalid_argument("inputs must be permutations of 0..m-1");
        seen[c] = true;
        seq[r] = position_in_b[c];
    }
    std::vector<int> buffer(m);
    return count_inversions(seq, buffer);
}

IssueDistances issue_distances(const RankProfile& profile) {
    const auto rankings = profile.expanded();
    const int n = profile.n_voters;
    const int m = profile.n_candidates;

    IssueDistances out;
    out.voter.assign(n, std::vector<double>(n, 0.0));
    for (int v = 0; v < n; ++v) {
        for (int w = v + 1; w < n; ++w) {
            const double d = static_cast<double>(kendall_tau(rankings[v], rankings[w]));
            out.voter[v][w] = d;
            out.voter[w][v] = d;
        }
    }
    for (auto& row : out.voter) rescale_row_to_half_mean(row);

    out.candidate.assign(n, std::vector<double>(m, 0.0));
    for (int v = 0; v < n; ++v) {
        for (int r = 0; r < m; ++r) out.candidate[v][rankings[v][r]] = r;
        rescale_row_to_half_mean(out.candidate[v]);
    }
    return out;
}

ScoreProfile borda_scores(const RankProfile& profile) {
    const int m = profile.n_candidates;
    if (m < 2) throw std::invalid_argument("borda scores need at least two candidates");
    const auto rankings = profile.expanded();
    std::vector<double> scores(static_cast<std::size_t>(profile.n_voters) * m, 0.0);
    for (int v = 0; v < profile.n_voters; ++v)
        for (int r = 0; r < m; ++r)
            scores[static_cast<std::size_t>(v) * m + rankings[v][r]] =
                static_cast<double>(m - 1 - r) / (m - 1);
    return ScoreProfile(profile.n_voters, m, std::move(scores), ProfileKind::borda);
}

}  // namespace celect
