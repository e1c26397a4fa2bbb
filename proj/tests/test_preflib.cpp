#include <algorithm>
#include <numeric>
#include <random>

#include "celect/preflib.hpp"
#include "doctest.h"

using namespace celect;

namespace {

long long kendall_tau_naive(const std::vector<int>& a, const std::vector<int>& b) {
    const int m = static_cast<int>(a.size());
    std::vector<int> pos_a(m), pos_b(m);
    for (int r = 0; r < m; ++r) {
        pos_a[a[r]] = r;
        pos_b[b[r]] = r;
    }
    long long discordant = 0;
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y)
            if ((pos_a[x] < pos_a[y]) != (pos_b[x] < pos_b[y])) ++discordant;
    return discordant;
}

std::vector<std::vector<int>> all_permutations(int m) {
    std::vector<int> base(m);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

}  // namespace

TEST_CASE("parsing strict-order lines") {
    const auto one = parse_preflib("1: 1,2,3\n");
    CHECK(one.n_voters == 1);
    CHECK(one.n_candidates == 3);
    CHECK(one.rankings[0] == std::vector<int>{0, 1, 2});

    const auto two = parse_preflib("2: 3,1,2\n");
    CHECK(two.n_voters == 2);
    CHECK(two.multiplicities[0] == 2);
    CHECK(two.rankings[0] == std::vector<int>{2, 0, 1});
    CHECK(two.expanded().size() == 2);

    const auto with_meta = parse_preflib(
        "# TITLE: toy\n# NUMBER ALTERNATIVES: 3\n# NUMBER VOTERS: 3\n2: 1,2,3\n1: 3,2,1\n");
    CHECK(with_meta.n_voters == 3);
    CHECK(with_meta.n_candidates == 3);
}

TEST_CASE("parse errors name the line") {
    try {
        parse_preflib("1: 1,2,3\n1: 1,1,2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("repeated") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_preflib("1: {1,2},3\n"), ParseError);   // tied group
    CHECK_THROWS_AS(parse_preflib("1: 1,2\n1: 1,2,3\n"), ParseError);  // inconsistent length
    CHECK_THROWS_AS(parse_preflib("1: 1,2,4\n"), ParseError);     // unknown id
    CHECK_THROWS_AS(parse_preflib("1: 1,2,3\n1: 1,2\n"), ParseError);  // incomplete
    CHECK_THROWS_AS(parse_preflib("x: 1,2,3\n"), ParseError);
    CHECK_THROWS_AS(parse_preflib("# only metadata\n"), ParseError);
    CHECK_THROWS_AS(parse_preflib("# NUMBER VOTERS: 5\n1: 1,2\n"), ParseError);
}

TEST_CASE("parse, serialize, parse is the identity") {
    const std::string text = "3: 2,1,4,3\n1: 1,2,3,4\n2: 4,3,2,1\n";
    const auto profile = parse_preflib(text);
    const std::string serialized = serialize_preflib(profile);
    const auto again = parse_preflib(serialized);
    CHECK(again.n_voters == profile.n_voters);
    CHECK(again.n_candidates == profile.n_candidates);
    CHECK(again.rankings == profile.rankings);
    CHECK(again.multiplicities == profile.multiplicities);
    CHECK(serialize_preflib(again) == serialized);
}

TEST_CASE("dataset filter thresholds") {
    auto profile_with = [](int voters, int candidates) {
        RankProfile p;
        p.n_voters = voters;
        p.n_candidates = candidates;
        return p;
    };
    CHECK(filter_dataset(profile_with(15, 20)));
    CHECK_FALSE(filter_dataset(profile_with(14, 50)));
    CHECK_FALSE(filter_dataset(profile_with(100, 19)));
}

TEST_CASE("kendall tau on known pairs") {
    const std::vector<int> identity{0, 1, 2, 3};
    CHECK(kendall_tau(identity, identity) == 0);

    const std::vector<int> six{0, 1, 2, 3, 4, 5};
    const std::vector<int> reversed{5, 4, 3, 2, 1, 0};
    CHECK(kendall_tau(six, reversed) == 15);

    const std::vector<int> swapped{1, 0, 3, 2};
    CHECK(kendall_tau(identity, swapped) == 2);

    CHECK_THROWS_AS(kendall_tau(identity, six), std::invalid_argument);
    const std::vector<int> not_perm{0, 0, 1, 2};
    CHECK_THROWS_AS(kendall_tau(identity, not_perm), std::invalid_argument);
}

TEST_CASE("kendall tau is a metric on permutations") {
    const auto perms = all_permutations(4);
    for (const auto& a : perms) {
        for (const auto& b : perms) {
            const long long d = kendall_tau(a, b);
            CHECK(d == kendall_tau(b, a));
            CHECK((d == 0) == (a == b));
            for (const auto& c : perms)
                CHECK(d <= kendall_tau(a, c) + kendall_tau(c, b));
        }
    }
}

TEST_CASE("merge counting matches pair enumeration") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> m_dist(2, 100);
    for (int rep = 0; rep < 500; ++rep) {
        const int m = m_dist(rng);
        std::vector<int> a(m), b(m);
        std::iota(a.begin(), a.end(), 0);
        std::iota(b.begin(), b.end(), 0);
        std::shuffle(a.begin(), a.end(), rng);
        std::shuffle(b.begin(), b.end(), rng);
        CHECK(kendall_tau(a, b) == kendall_tau_naive(a, b));
    }
}

TEST_CASE("issue distances are rescaled to mean one half") {
    const auto profile = parse_preflib("1: 1,2,3,4\n1: 4,3,2,1\n1: 2,1,3,4\n");
    const auto d = issue_distances(profile);
    REQUIRE(d.voter.size() == 3);
    REQUIRE(d.candidate.size() == 3);
    for (int v = 0; v < 3; ++v) {
        double voter_mean = 0.0, cand_mean = 0.0;
        for (double x : d.voter[v]) voter_mean += x;
        for (double x : d.candidate[v]) cand_mean += x;
        CHECK(voter_mean / 3 == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(cand_mean / 4 == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(d.voter[v][v] == 0.0);  // own issue sits at the voter
    }
    // Candidate ranked first has raw distance zero.
    CHECK(d.candidate[0][0] == 0.0);
    CHECK(d.candidate[1][3] == 0.0);

    // Identical voters: zero rows stay zero.
    const auto twins = parse_preflib("2: 1,2,3\n");
    const auto dd = issue_distances(twins);
    CHECK(dd.voter[0] == std::vector<double>{0.0, 0.0});
    CHECK(dd.voter[1] == std::vector<double>{0.0, 0.0});
}

TEST_CASE("borda scores from rankings") {
    const auto profile = parse_preflib("1: 3,1,2\n");
    const auto scores = borda_scores(profile);
    CHECK(scores.kind() == ProfileKind::borda);
    CHECK(scores.score(0, 0) == doctest::Approx(0.5));
    CHECK(scores.score(0, 1) == doctest::Approx(0.0));
    CHECK(scores.score(0, 2) == doctest::Approx(1.0));

    const auto pair = parse_preflib("1: 2,1\n");
    const auto two = borda_scores(pair);
    CHECK(two.score(0, 1) == 1.0);
    CHECK(two.score(0, 0) == 0.0);

    std::mt19937 rng(59);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<int> ranking(5);
        std::iota(ranking.begin(), ranking.end(), 0);
        std::shuffle(ranking.begin(), ranking.end(), rng);
        RankProfile p;
        p.n_voters = 1;
        p.n_candidates = 5;
        p.rankings = {ranking};
        p.multiplicities = {1};
        CHECK(borda_scores(p).score(0, ranking[0]) == 1.0);  // top candidate always 1
    }
}
