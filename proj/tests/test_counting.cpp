#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "degseq/counting.hpp"
#include "degseq/regions.hpp"
#include "oracles.hpp"

#include <future>
#include <set>
#include <numeric>

using namespace degseq;

TEST_CASE("enumerate_realizations worked examples") {
    auto gs = enumerate_realizations(DegreeSequence({2, 1, 1}));
    REQUIRE(gs.size() == 1);
    CHECK(gs[0].edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});

    CHECK(enumerate_realizations(DegreeSequence({1, 1, 1, 1})).size() == 3);
    CHECK(enumerate_realizations(DegreeSequence({3, 3, 1, 1})).empty());
    CHECK_THROWS_AS(enumerate_realizations(DegreeSequence(std::vector<int>(9, 0))), Error);
}

TEST_CASE("count worked examples") {
    CHECK(count_realizations(DegreeSequence({1, 1})) == 1);
    CHECK(count_realizations(DegreeSequence({2, 2, 2, 2})) == 3);
    CHECK(count_realizations(DegreeSequence({1, 2, 2, 3})) == 1);
    CHECK(count_realizations(DegreeSequence({3, 3, 1, 1})) == 0);
    CHECK(count_realizations(DegreeSequence({5, 1, 0, 0})) == 0); // entry > n-1
    CHECK(count_realizations(DegreeSequence({1, 1, 1})) == 0);    // odd sum
    CHECK_THROWS_AS(count_realizations(DegreeSequence(std::vector<int>(17, 0))), Error);
}

TEST_CASE("count equals enumeration for every sequence up to n = 5") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> cur(static_cast<size_t>(n), 0);
        for (;;) {
            DegreeSequence d(cur);
            if (d.sum() % 2 == 0)
                CHECK(count_realizations(d) == Int(enumerate_realizations(d).size()));
            int pos = n - 1;
            while (pos >= 0 && cur[static_cast<size_t>(pos)] == n - 1) {
                cur[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++cur[static_cast<size_t>(pos)];
        }
    }
}

TEST_CASE("count and enumeration agree with the bitmask oracle") {
    SplitMix64 rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng.below(4)); // up to 5
        std::vector<int> degs;
        for (int t = 0; t < n; ++t)
            degs.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
        if (std::accumulate(degs.begin(), degs.end(), 0LL) % 2 != 0) degs[0] ^= 1;
        auto brute = oracles::brute_realizations(degs);
        DegreeSequence d(degs);
        CHECK(count_realizations(d) == Int(brute.size()));
        CHECK(enumerate_realizations(d).size() == brute.size());
    }
    // one denser spot check at n = 6
    auto brute6 = oracles::brute_realizations({3, 3, 2, 2, 1, 1});
    CHECK(count_realizations(DegreeSequence({3, 3, 2, 2, 1, 1})) == Int(brute6.size()));
}

TEST_CASE("count is invariant under permutation of the sequence") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng.below(6));
        std::vector<int> degs;
        for (int t = 0; t < n; ++t)
            degs.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
        Int base = count_realizations(DegreeSequence(degs), 16);
        for (int s = 0; s < 3; ++s) {
            for (size_t t = degs.size(); t > 1; --t)
                std::swap(degs[t - 1], degs[rng.below(t)]);
            CHECK(count_realizations(DegreeSequence(degs), 16) == base);
        }
    }
}

TEST_CASE("boundary quotient worked examples") {
    CHECK(boundary_quotient(DegreeSequence({1, 1}), PairConvention::i_le_j).quotient == 0);
    CHECK(boundary_quotient(DegreeSequence({1, 1}), PairConvention::i_lt_j).quotient == 0);

    auto strict = boundary_quotient(DegreeSequence({1, 1, 1, 1}), PairConvention::i_lt_j);
    CHECK(strict.quotient == Rat(4));
    auto diag = boundary_quotient(DegreeSequence({1, 1, 1, 1}), PairConvention::i_le_j);
    CHECK(diag.quotient == Rat(16, 3));

    CHECK(boundary_quotient(DegreeSequence({2, 2, 2}), PairConvention::i_le_j).quotient == 0);
    CHECK(boundary_quotient(DegreeSequence({2, 2, 2}), PairConvention::i_lt_j).quotient == 0);

    CHECK_THROWS_AS(boundary_quotient(DegreeSequence({3, 3, 1, 1})), Error);
}

TEST_CASE("quotient times base equals the term sum, and terms match the oracle") {
    SplitMix64 rng(321);
    int checked = 0;
    while (checked < 25) {
        int n = 2 + static_cast<int>(rng.below(4));
        std::vector<int> degs;
        for (int t = 0; t < n; ++t)
            degs.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
        DegreeSequence d(degs);
        if (d.sum() % 2 != 0 || count_realizations(d) == 0) continue;
        ++checked;
        auto report = boundary_quotient(d, PairConvention::i_le_j);
        Int term_sum = 0;
        for (const auto& t : report.terms) {
            CHECK(Int(oracles::brute_realizations(
                      perturb(d, Perturbation::plus(t.i, t.j)).degrees())
                      .size()) == t.count);
            term_sum += t.count;
        }
        CHECK(report.quotient * Rat(report.base_count) == Rat(term_sum));
        CHECK(report.quotient >= 0);
    }
}

TEST_CASE("boundary quotient stays under 3 n^13 on fully graphic members (n <= 7)") {
    for (int n = 2; n <= 7; ++n) {
        Int bound = 3 * boost::multiprecision::pow(Int(n), 13);
        std::set<std::vector<int>> seen; // members repeat across regions
        for (int c1 = 0; c1 < n; ++c1)
            for (int c2 = 0; c2 <= c1; ++c2)
                for (long long sigma = (static_cast<long long>(n) * c2 + 1) / 2 * 2;
                     sigma <= static_cast<long long>(n) * c1; sigma += 2) {
                    SimpleRegion r = SimpleRegion::create(n, sigma, c1, c2);
                    if (!is_fully_graphic(r)) continue;
                    for (const DegreeSequence& d : enumerate_region(r)) {
                        if (!seen.insert(d.degrees()).second) continue;
                        auto report = boundary_quotient(d, PairConvention::i_le_j);
                        CHECK(report.quotient <= Rat(bound));
                    }
                }
    }
}

TEST_CASE("the shared memo behaves like one map under concurrent use") {
    std::vector<DegreeSequence> inputs;
    SplitMix64 rng(808);
    for (int t = 0; t < 24; ++t) {
        int n = 6 + static_cast<int>(rng.below(5));
        std::vector<int> degs;
        for (int v = 0; v < n; ++v)
            degs.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
        inputs.emplace_back(degs);
    }
    std::vector<Int> sequential;
    clear_count_memo();
    for (const DegreeSequence& d : inputs) sequential.push_back(count_realizations(d));
    clear_count_memo();
    std::vector<std::future<Int>> futures;
    for (const DegreeSequence& d : inputs)
        futures.push_back(std::async(std::launch::async,
                                     [&d] { return count_realizations(d); }));
    for (size_t t = 0; t < inputs.size(); ++t) CHECK(futures[t].get() == sequential[t]);
}

TEST_CASE("havel_hakimi realizes graphic sequences exactly") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng.below(8));
        std::vector<int> degs;
        for (int t = 0; t < n; ++t)
            degs.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
        DegreeSequence d(degs);
        if (d.sum() % 2 != 0) continue;
        auto g = havel_hakimi(d);
        bool graphic = is_graphic(d).graphic;
        CHECK(g.has_value() == graphic);
        if (g) CHECK(graph_degrees(*g) == d);
    }
    CHECK_FALSE(havel_hakimi(DegreeSequence({3, 3, 1, 1})).has_value());
}
