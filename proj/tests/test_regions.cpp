#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "degseq/regions.hpp"
#include "oracles.hpp"

#include <algorithm>

using namespace degseq;

TEST_CASE("region validation") {
    CHECK_THROWS_AS(SimpleRegion::create(4, 7, 3, 1), Error);  // odd sigma
    CHECK_THROWS_AS(SimpleRegion::create(4, 8, 4, 1), Error);  // c1 == n
    CHECK_THROWS_AS(SimpleRegion::create(4, 8, 1, 2), Error);  // c1 < c2
    CHECK_THROWS_AS(SimpleRegion::create(4, 2, 3, 1), Error);  // sigma < n c2
    CHECK_THROWS_AS(SimpleRegion::create(4, 14, 3, 1), Error); // sigma > n c1
}

TEST_CASE("leg sequence worked examples") {
    auto info = leg_info(SimpleRegion::create(4, 8, 3, 1));
    CHECK(info.sequence.degrees() == std::vector<int>{3, 3, 1, 1});
    CHECK(info.alpha_floor == 2);
    CHECK(info.a == 1);

    CHECK(leg_sequence(SimpleRegion::create(4, 4, 1, 1)).degrees() ==
          std::vector<int>{1, 1, 1, 1});
    CHECK(leg_sequence(SimpleRegion::create(4, 6, 2, 1)).degrees() ==
          std::vector<int>{2, 2, 1, 1});
    // extremes
    CHECK(leg_sequence(SimpleRegion::create(4, 12, 3, 1)).degrees() ==
          std::vector<int>{3, 3, 3, 3});
    CHECK(leg_sequence(SimpleRegion::create(4, 4, 3, 1)).degrees() ==
          std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("leg entries stay inside the region and sum to sigma") {
    for (int n = 1; n <= 6; ++n)
        for (int c1 = 0; c1 < n; ++c1)
            for (int c2 = 0; c2 <= c1; ++c2)
                for (long long sigma = static_cast<long long>(n) * c2;
                     sigma <= static_cast<long long>(n) * c1; ++sigma) {
                    if (sigma % 2 != 0) continue;
                    SimpleRegion r = SimpleRegion::create(n, sigma, c1, c2);
                    DegreeSequence leg = leg_sequence(r);
                    CHECK(leg.n() == n);
                    CHECK(leg.sum() == sigma);
                    CHECK(r.contains(leg));
                }
}

TEST_CASE("fully graphic worked examples") {
    CHECK_FALSE(is_fully_graphic(SimpleRegion::create(4, 8, 3, 1)));
    CHECK(is_fully_graphic(SimpleRegion::create(4, 6, 2, 1)));
    CHECK(is_fully_graphic(SimpleRegion::create(5, 10, 2, 2)));
}

TEST_CASE("enumerate_region worked examples") {
    auto members = enumerate_region(SimpleRegion::create(3, 4, 2, 1));
    REQUIRE(members.size() == 1);
    CHECK(members[0].degrees() == std::vector<int>{2, 1, 1});

    members = enumerate_region(SimpleRegion::create(2, 2, 1, 1));
    REQUIRE(members.size() == 1);
    CHECK(members[0].degrees() == std::vector<int>{1, 1});

    members = enumerate_region(SimpleRegion::create(4, 8, 3, 1));
    REQUIRE(members.size() == 3);
    CHECK(members[0].degrees() == std::vector<int>{3, 3, 1, 1});
    CHECK(members[1].degrees() == std::vector<int>{3, 2, 2, 1});
    CHECK(members[2].degrees() == std::vector<int>{2, 2, 2, 2});

    CHECK_THROWS_AS(enumerate_region(SimpleRegion::create(14, 14, 1, 1)), Error);
}

TEST_CASE("enumerate_region is complete and duplicate-free") {
    for (int n = 1; n <= 6; ++n)
        for (int c1 = 0; c1 < n; ++c1)
            for (int c2 = 0; c2 <= c1; ++c2)
                for (long long sigma = (static_cast<long long>(n) * c2 + 1) / 2 * 2;
                     sigma <= static_cast<long long>(n) * c1; sigma += 2) {
                    SimpleRegion r = SimpleRegion::create(n, sigma, c1, c2);
                    auto mine = enumerate_region(r);
                    auto naive = oracles::naive_region_members(n, sigma, c1, c2);
                    REQUIRE(mine.size() == naive.size());
                    for (size_t t = 0; t < mine.size(); ++t)
                        CHECK(mine[t].degrees() == naive[t]);
                }
}

TEST_CASE("lemma 3.1 at desk scale: LEG decides full graphicality") {
    for (int n = 1; n <= 6; ++n)
        for (int c1 = 0; c1 < n; ++c1)
            for (int c2 = 0; c2 <= c1; ++c2)
                for (long long sigma = (static_cast<long long>(n) * c2 + 1) / 2 * 2;
                     sigma <= static_cast<long long>(n) * c1; sigma += 2) {
                    SimpleRegion r = SimpleRegion::create(n, sigma, c1, c2);
                    bool all_graphic = true;
                    for (const DegreeSequence& d : enumerate_region(r))
                        if (!is_graphic(d).graphic) {
                            all_graphic = false;
                            break;
                        }
                    CHECK(is_fully_graphic(r) == all_graphic);
                }
}

TEST_CASE("classification worked examples") {
    auto c = classify(SimpleRegion::create(4, 8, 3, 1));
    CHECK(c.q_value == 9);
    REQUIRE(c.lemma15_window.has_value());
    // even sigma with |(sigma-4)/1 - 5| <= 5, intersected with [4, 12]
    CHECK(c.lemma15_window->lo == 4);
    CHECK(c.lemma15_window->hi == 12);
    CHECK_FALSE(c.fully_graphic);
    CHECK_FALSE(c.p4_applicable);
    CHECK_FALSE(c.gs_plus.has_value());

    auto c2 = classify(SimpleRegion::create(10, 30, 3, 2));
    CHECK(c2.p1); // (3-2+1)^2 = 4 <= 4*2*(10-3-1) = 48

    // c1 == c2: window undefined, LEG regular
    auto c3 = classify(SimpleRegion::create(5, 10, 2, 2));
    CHECK_FALSE(c3.lemma15_window_defined);
    CHECK_FALSE(c3.lemma15_window.has_value());
    CHECK(c3.leg.degrees() == std::vector<int>{2, 2, 2, 2, 2});
}

TEST_CASE("lemma 1.5 at desk scale: failures have Q > 0 and sigma in window") {
    for (int n = 1; n <= 6; ++n)
        for (int c1 = 1; c1 < n; ++c1)
            for (int c2 = 0; c2 < c1; ++c2)
                for (long long sigma = (static_cast<long long>(n) * c2 + 1) / 2 * 2;
                     sigma <= static_cast<long long>(n) * c1; sigma += 2) {
                    SimpleRegion r = SimpleRegion::create(n, sigma, c1, c2);
                    if (is_fully_graphic(r)) continue;
                    CHECK(q_value(n, c1, c2) > 0);
                    CHECK(lemma15_window_contains(n, c1, c2, sigma));
                    auto cls = classify(r);
                    REQUIRE(cls.lemma15_window.has_value());
                    CHECK(cls.lemma15_window->lo <= sigma);
                    CHECK(sigma <= cls.lemma15_window->hi);
                }
}

TEST_CASE("p4 worked examples") {
    CHECK(p4_holds(DegreeSequence(std::vector<int>(10, 1))));
    CHECK_FALSE(p4_holds(DegreeSequence({3, 3, 3, 3})));
    CHECK_FALSE(p4_holds(DegreeSequence({0, 0})));
}

TEST_CASE("gs+ with eps = 1/2 implies fully graphic at n <= 6") {
    Rat eps(1, 2);
    int hits = 0;
    for (int n = 2; n <= 6; ++n)
        for (int c1 = 0; c1 < n; ++c1)
            for (int c2 = 0; c2 <= c1; ++c2)
                for (long long sigma = (static_cast<long long>(n) * c2 + 1) / 2 * 2;
                     sigma <= static_cast<long long>(n) * c1; sigma += 2) {
                    if (!phi_gs_plus(n, sigma, c1, c2, eps)) continue;
                    ++hits;
                    CHECK(is_fully_graphic(SimpleRegion::create(n, sigma, c1, c2)));
                }
    CHECK(hits > 0);
}
