#pragma once

#include "degseq/degree_sequence.hpp"
#include "degseq/numeric.hpp"

#include <optional>
#include <vector>

namespace degseq {

// The simple region D(n, sigma, c1, c2): all length-n sequences with even
// sum sigma and every entry in [c2, c1].
struct SimpleRegion {
    int n;
    long long sigma;
    int c1;
    int c2;

    // Validates n > c1 >= c2 >= 0, n*c2 <= sigma <= n*c1, sigma even.
    static SimpleRegion create(int n, long long sigma, int c1, int c2);

    bool contains(const DegreeSequence& d) const;
};

// The extremal member (c1 x floor(alpha), a, c2 x rest); its graphicality
// decides full graphicality of the region. For c1 == c2 the region has the
// single regular member.
DegreeSequence leg_sequence(const SimpleRegion& r);

struct LegInfo {
    DegreeSequence sequence;
    long long alpha_floor;
    int a;
};
LegInfo leg_info(const SimpleRegion& r);

bool is_fully_graphic(const SimpleRegion& r);

// All non-increasing members, in lexicographically decreasing order.
// Throws Errc::too_large when n exceeds the guard.
std::vector<DegreeSequence> enumerate_region(const SimpleRegion& r, int guard = 12);

struct EvenInterval {
    long long lo; // even
    long long hi; // even, lo <= hi
};

struct RegionClassification {
    bool fully_graphic;
    long long q_value; // (c1-c2+1)^2 - 4*c2*(n-1-c1)
    // Even-sigma window of the non-fully-graphic range, intersected with
    // [n*c2, n*c1]; nullopt when Q <= 0, empty, or c1 == c2 (undefined).
    std::optional<EvenInterval> lemma15_window;
    bool lemma15_window_defined; // false only for c1 == c2
    bool p1;                     // (c1-c2+1)^2 <= 4*c2*(n-c1-1)
    bool p2;                     // the sigma-dependent strengthening
    bool p3;                     // 2 <= c2 and 3 <= c1 <= sqrt(sigma/9)
    bool p4_applicable;          // always false: per-sequence predicate, see p4_holds
    std::optional<bool> gs_plus; // engaged when epsilon was supplied
    DegreeSequence leg;
    long long alpha_floor;
    int a_value;
};

RegionClassification classify(const SimpleRegion& r,
                              const std::optional<Rat>& epsilon = std::nullopt);

// Membership of sigma in the lemma-1.5 window for (n, c1, c2), decided with
// exact integer arithmetic. Requires c1 > c2.
bool lemma15_window_contains(int n, int c1, int c2, long long sigma);

long long q_value(int n, int c1, int c2);

// Per-sequence predicate: sum of the c1 largest degrees + 6*c1 + 2 <= sum of
// the rest, on the non-increasing sort (c1 = max degree). Out-of-range max
// (> n) evaluates to false.
bool p4_holds(const DegreeSequence& d);

bool phi_jms(int n, int c1, int c2);
bool phi_jms_star(int n, long long sigma, int c1, int c2);
bool phi_gs(long long sigma, int c1, int c2);
bool phi_gs_plus(int n, long long sigma, int c1, int c2, const Rat& epsilon);

} // namespace degseq
