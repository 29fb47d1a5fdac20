#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "degseq/adversarial.hpp"
#include "degseq/counting.hpp"
#include "oracles.hpp"

#include <algorithm>

using namespace degseq;

TEST_CASE("half_graph worked examples") {
    auto [d2, g2] = half_graph(2);
    CHECK(d2.degrees() == std::vector<int>{1, 1});
    CHECK(g2.edge_count() == 1);

    auto [d4, g4] = half_graph(4);
    CHECK(d4.degrees() == std::vector<int>{1, 2, 2, 3});
    CHECK(d4.sum() == 8); // r^2/2
    CHECK(graph_degrees(g4) == d4);
    CHECK(count_realizations(d4) == 1);
    CHECK(oracles::brute_realizations(d4.degrees()).size() == 1);

    // uniqueness holds through r = 8
    for (int r : {2, 4, 6, 8}) {
        auto [d, g] = half_graph(r);
        CHECK(d.sum() == static_cast<long long>(r) * r / 2);
        CHECK(count_realizations(d) == 1);
        CHECK(graph_degrees(g) == d);
    }
    CHECK_THROWS_AS(half_graph(3), Error);
    CHECK_THROWS_AS(half_graph(0), Error);
}

TEST_CASE("near_regular_bipartite worked examples") {
    LabeledGraph m = near_regular_bipartite(2, 2, 2);
    CHECK(m.edge_count() == 2);
    for (int v = 0; v < 4; ++v) CHECK(m.degree(v) == 1);

    LabeledGraph g = near_regular_bipartite(2, 3, 3);
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(1) == 1);
    for (int v = 2; v < 5; ++v) CHECK(g.degree(v) == 1);

    CHECK_THROWS_AS(near_regular_bipartite(1, 2, 5), Error);
    CHECK_THROWS_AS(near_regular_bipartite(0, 3, 1), Error);
    CHECK(near_regular_bipartite(0, 0, 0).edge_count() == 0);
}

TEST_CASE("near_regular_bipartite side degrees take two adjacent values") {
    SplitMix64 rng(31337);
    for (int trial = 0; trial < 150; ++trial) {
        int x = 1 + static_cast<int>(rng.below(6));
        int y = 1 + static_cast<int>(rng.below(6));
        long long e = static_cast<long long>(rng.below(static_cast<std::uint64_t>(x) * y + 1));
        LabeledGraph g = near_regular_bipartite(x, y, e);
        CHECK(g.edge_count() == e);
        int lo_x = static_cast<int>(e / x), hi_count_x = static_cast<int>(e % x);
        int at_hi = 0;
        for (int v = 0; v < x; ++v) {
            CHECK((g.degree(v) == lo_x || g.degree(v) == lo_x + 1));
            if (g.degree(v) == lo_x + 1) ++at_hi;
        }
        CHECK(at_hi == (hi_count_x == 0 ? 0 : hi_count_x));
        int lo_y = static_cast<int>(e / y);
        for (int v = x; v < x + y; ++v)
            CHECK((g.degree(v) == lo_y || g.degree(v) == lo_y + 1));
        // bipartite: no edges inside a side
        for (int a = 0; a < x; ++a)
            for (int b = a + 1; b < x; ++b) CHECK_FALSE(g.has_edge(a, b));
        for (int a = x; a < x + y; ++a)
            for (int b = a + 1; b < x + y; ++b) CHECK_FALSE(g.has_edge(a, b));
    }
}

TEST_CASE("compose_split worked examples") {
    SplitComposition c = compose_split(0, 0, 4, 0);
    CHECK(c.sigma == 8);
    CHECK(c.degrees.degrees() == std::vector<int>{1, 2, 2, 3});

    c = compose_split(1, 1, 4, 1);
    CHECK(c.degrees.degrees() == std::vector<int>{5, 2, 3, 3, 4, 1});
    CHECK(c.sigma == 18);

    c = compose_split(2, 2, 4, 2);
    CHECK(c.degrees.degrees() == std::vector<int>{6, 6, 3, 4, 4, 5, 1, 1});
    CHECK(c.sigma == 30);
}

TEST_CASE("compose_split satisfies the five block conditions and the sigma formula") {
    SplitMix64 rng(64);
    for (int trial = 0; trial < 80; ++trial) {
        int x = static_cast<int>(rng.below(4));
        int y = static_cast<int>(rng.below(4));
        int r = 2 * (1 + static_cast<int>(rng.below(3)));
        long long e = (x == 0 || y == 0)
                          ? 0
                          : static_cast<long long>(rng.below(static_cast<std::uint64_t>(x) * y + 1));
        SplitComposition c = compose_split(x, y, r, e);
        CHECK(c.sigma == static_cast<long long>(r) * r / 2 + 2LL * x * r +
                             static_cast<long long>(x) * (x - 1) + 2 * e);
        CHECK(c.degrees.sum() == c.sigma);
        const LabeledGraph& g = c.graph;
        for (int a = 0; a < x; ++a)
            for (int b = a + 1; b < x; ++b) CHECK(g.has_edge(a, b)); // X clique
        for (int a = 0; a < x; ++a)
            for (int t = 0; t < r; ++t) CHECK(g.has_edge(a, x + t)); // X-R complete
        for (int a = x + r; a < x + r + y; ++a)
            for (int b = a + 1; b < x + r + y; ++b) CHECK_FALSE(g.has_edge(a, b)); // Y empty
        for (int t = 0; t < r; ++t)
            for (int a = x + r; a < x + r + y; ++a) CHECK_FALSE(g.has_edge(x + t, a)); // Y-R empty
        // R realizes the half-graph degrees
        auto [hd, hg] = half_graph(r);
        for (int t = 0; t < r; ++t) CHECK(g.degree(x + t) == x + hd[t]);
    }
}

TEST_CASE("unstable_window worked examples") {
    UnstableWindow w = unstable_window(100, 60, 1, 4);
    CHECK_FALSE(w.empty);
    CHECK(w.x_min == 2);
    CHECK(w.x_max == 55);
    CHECK(w.sigma_min == 214);
    CHECK(w.sigma_max == 3638);
    CHECK(w.q == 3444);
    CHECK(w.q_r == 2885); // (60-1-4)^2 - 4*1*39 + 16

    UnstableWindow wb = unstable_window(100, 60, 1, 4, Rat(9, 10));
    REQUIRE(wb.epsilon.has_value());
    CHECK_FALSE(wb.epsilon->exact);
    CHECK(wb.epsilon->hi - wb.epsilon->lo <= Rat(1, 1000000000000LL));
    // eps = 1 - (sqrt(2885) - 7)/sqrt(3444) = 0.20402...
    CHECK(wb.epsilon->lo > Rat(20402, 100000));
    CHECK(wb.epsilon->hi < Rat(20403, 100000));
    REQUIRE(wb.eq8_holds.has_value());
    CHECK(*wb.eq8_holds);
    REQUIRE(wb.epsilon_bound_holds.has_value());
    CHECK(*wb.epsilon_bound_holds); // 0.204 <= 21/53.1 = 0.3955
    REQUIRE(wb.eq9_inside_window.has_value());
    CHECK(*wb.eq9_inside_window);

    UnstableWindow we = unstable_window(10, 4, 2, 2);
    CHECK(we.empty); // x^2 - 4x + 16 <= 0 has no solution

    CHECK_THROWS_AS(unstable_window(10, 4, 0, 2), Error); // c2 >= 1
    CHECK_THROWS_AS(unstable_window(10, 4, 2, 3), Error); // odd r
}

TEST_CASE("claim 3.5: consecutive intervals overlap across the x range") {
    for (int n : {20, 50, 90})
        for (int c2 : {1, 2})
            for (int c1 : {n - 2, n - 10})
                for (int r : {2, 4}) {
                    if (c1 <= c2) continue;
                    UnstableWindow w = unstable_window(n, c1, c2, r);
                    if (w.empty) continue;
                    for (size_t t = 0; t + 1 < w.intervals.size(); ++t) {
                        CHECK(w.intervals[t].lo <= w.intervals[t].hi);
                        CHECK(w.intervals[t + 1].lo <= w.intervals[t].hi); // overlap
                    }
                }
}

TEST_CASE("construct_unstable worked examples") {
    // least feasible x for sigma = 1000 is 9 (the I^x table: I^9 = [326, 1016])
    UnstableConstruction u = construct_unstable(SimpleRegion::create(100, 1000, 60, 1), 4);
    CHECK(u.x == 9);
    CHECK(u.e == 424);
    CHECK(SimpleRegion::create(100, 1000, 60, 1).contains(u.sequence));
    // the x = 25 instance quoted alongside the rule is also feasible
    CHECK(interval_lo(100, 1, 4, 25) == 950);
    CHECK(interval_hi(60, 4, 25) == 2408);
    SplitComposition alt = compose_split(25, 71, 4, 96);
    CHECK(SimpleRegion::create(100, 1000, 60, 1).contains(alt.degrees));

    u = construct_unstable(SimpleRegion::create(6, 18, 5, 1), 4);
    CHECK(u.x == 1);
    CHECK(u.e == 1);
    CHECK(u.sequence.degrees() == std::vector<int>{5, 2, 3, 3, 4, 1});

    CHECK_THROWS_AS(construct_unstable(SimpleRegion::create(100, 4000, 60, 1), 4), Error);
}

TEST_CASE("construct_unstable stays in-region across a sweep") {
    for (int n : {30, 60})
        for (int c1 : {n - 5})
            for (int c2 : {1, 2})
                for (int r : {2, 4}) {
                    UnstableWindow w = unstable_window(n, c1, c2, r);
                    if (w.empty) continue;
                    for (long long sigma = (w.sigma_min + 1) / 2 * 2; sigma <= w.sigma_max;
                         sigma += std::max(2LL, (w.sigma_max - w.sigma_min) / 20 / 2 * 2)) {
                        if (sigma < static_cast<long long>(n) * c2 ||
                            sigma > static_cast<long long>(n) * c1)
                            continue;
                        SimpleRegion region = SimpleRegion::create(n, sigma, c1, c2);
                        UnstableConstruction u = construct_unstable(region, r);
                        CHECK(region.contains(u.sequence));
                    }
                }
}

TEST_CASE("eq 29/30 endpoint bounds on a small grid") {
    for (int n : {20, 40, 80})
        for (int c2 : {1, 2, 3})
            for (int r : {2, 4, 8}) {
                int c1 = n - 2;
                UnstableWindow w = unstable_window(n, c1, c2, r);
                if (w.empty) continue;
                long long m = c1 - c2;
                CHECK(w.sigma_min <= (w.x_min + r) * m + static_cast<long long>(n) * c2);
                CHECK(w.sigma_max >= w.x_max * m + static_cast<long long>(n) * c2);
            }
}

TEST_CASE("boundary quotient dominance for the tiny composition") {
    UnstableConstruction u = construct_unstable(SimpleRegion::create(6, 18, 5, 1), 4);
    auto [h2, g2] = half_graph(4);
    Rat composed = boundary_quotient(u.sequence, PairConvention::i_le_j).quotient;
    Rat plain = boundary_quotient(h2, PairConvention::i_le_j).quotient;
    CHECK(composed >= plain);
    CHECK(plain == Rat(3));
    CHECK(composed == Rat(20));
}

TEST_CASE("thm16 membership predicate matches the reported interval") {
    UnstableWindow w = unstable_window(100, 60, 1, 4, Rat(1, 2));
    REQUIRE(w.eq9_interval.has_value());
    long long lo = w.eq9_interval->lo, hi = w.eq9_interval->hi;
    CHECK(thm16_interval_contains(100, 60, 1, 4, lo));
    CHECK(thm16_interval_contains(100, 60, 1, 4, hi));
    CHECK_FALSE(thm16_interval_contains(100, 60, 1, 4, lo - 2));
    CHECK_FALSE(thm16_interval_contains(100, 60, 1, 4, hi + 2));
}
