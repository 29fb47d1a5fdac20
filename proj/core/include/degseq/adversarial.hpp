#pragma once

#include "degseq/degree_sequence.hpp"
#include "degseq/graph.hpp"
#include "degseq/numeric.hpp"
#include "degseq/regions.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace degseq {

// h_{r/2} = (1, 2, ..., r/2, r/2, ..., r-1) and its unique realization
// (constructed greedily; degree-exactness asserted). Throws Errc::odd_r.
std::pair<DegreeSequence, LabeledGraph> half_graph(int r);

// Bipartite graph with e edges on X-side 0..x-1 and Y-side x..x+y-1 whose
// side degrees each take only two adjacent values (e mod side at the
// ceiling). Gale-Ryser style greedy. Errc::infeasible when e > x*y or a
// side is empty with e > 0.
LabeledGraph near_regular_bipartite(int x, int y, long long e);

// The five-block graph: clique X, X-R complete, half-graph inside R,
// Y independent, Y-R empty, X-Y a near-regular fill with e edges.
// Block layout: X first, then R, then Y.
struct SplitComposition {
    int x;
    int y;
    int r;
    long long e;
    LabeledGraph graph;
    DegreeSequence degrees;
    long long sigma; // r^2/2 + 2xr + x(x-1) + 2e
};

SplitComposition compose_split(int x, int y, int r, long long e);

struct XInterval {
    long long x;
    long long lo; // I_0^x
    long long hi; // I_1^x
};

struct EpsilonValue {
    bool exact;
    Rat lo;
    Rat hi; // lo == hi when exact; else hi - lo <= 10^-12
};

// The window data of the non-P-stable construction: integer x-range
// satisfying the consecutive-overlap inequality, the per-x sigma intervals,
// their union endpoints, the discriminants Q and Q(r), and (when defined)
// the epsilon of the containment argument. With beta supplied, also the
// hypothesis check and the target sigma interval.
struct UnstableWindow {
    int n;
    int c1;
    int c2;
    int r;
    long long q;   // (c1-c2+1)^2 - 4 c2 (n-1-c1)
    long long q_r; // (c1-c2-r)^2 - 4 c2 (n-1-c1) + 4r
    bool empty;    // no integer x satisfies the overlap inequality
    long long x_min = 0;
    long long x_max = -1;
    long long sigma_min = 0;
    long long sigma_max = -1;
    std::vector<XInterval> intervals;
    std::optional<EpsilonValue> epsilon; // engaged when q > 0 and q_r >= 0

    std::optional<Rat> beta;
    std::optional<bool> eq8_holds;
    std::optional<bool> epsilon_bound_holds;   // eps <= 3(r+3)/(beta(c1-c2))
    std::optional<EvenInterval> eq9_interval;  // even-sigma range; nullopt if empty
    std::optional<bool> eq9_inside_window;     // eq9 real interval inside [sigma_min, sigma_max]
};

// Requires n > c1 >= c2 >= 1 (Errc::invalid_region) and even r >= 2
// (Errc::odd_r). An empty window is reported, not thrown.
UnstableWindow unstable_window(int n, int c1, int c2, int r,
                               const std::optional<Rat>& beta = std::nullopt);

// I_0^x and I_1^x endpoints.
long long interval_lo(int n, int c2, int r, long long x);
long long interval_hi(int c1, int r, long long x);

long long q_r_value(int n, int c1, int c2, int r);

// Exact membership of sigma in the Eq.-(9)-style interval
// |(sigma - n c2) / ((c1-c2)/2) - (1+c1+c2)| <= sqrt(Q(r)) - (r+3).
bool thm16_interval_contains(int n, int c1, int c2, int r, long long sigma);

struct UnstableConstruction {
    DegreeSequence sequence;
    SplitComposition composition;
    long long x;
    long long e;
};

// Builds a member of the region whose boundary quotient inherits the
// half-graph's: least x in [c2, c1-r+1] with sigma in I^x, e from the sigma
// formula, then the split composition. Errc::sigma_outside_window when no x
// fits.
UnstableConstruction construct_unstable(const SimpleRegion& region, int r);

} // namespace degseq
