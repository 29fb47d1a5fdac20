#pragma once

#include "degseq/degree_sequence.hpp"
#include "degseq/graph.hpp"
#include "degseq/numeric.hpp"

#include <optional>
#include <tuple>
#include <vector>

namespace degseq {

// All labeled realizations of d, in canonical (sorted edge-list) order.
// Empty exactly when d is non-graphic. Throws Errc::too_large past the guard.
std::vector<LabeledGraph> enumerate_realizations(const DegreeSequence& d, int guard = 8);

// Exact |G(d)| by memoized recursion on the degree multiset: pick a
// maximum-degree position, choose its neighborhood as a sub-multiset of the
// residual degree values (multinomial-weighted), recurse on the decremented
// multiset. The memo table is shared and thread-safe; results are identical
// to sequential evaluation. Returns 0 for non-graphic input, including
// entries > n-1. Throws Errc::too_large when n exceeds the limit.
Int count_realizations(const DegreeSequence& d, int limit = 16);

void clear_count_memo(); // mostly for benchmarks

enum class PairConvention {
    i_le_j, // diagonal included (default; matches the constructive sweep)
    i_lt_j, // strict pairs only
};

struct BoundaryTerm {
    int i; // 0-based
    int j;
    Int count;
};

struct BoundaryReport {
    Rat quotient;
    PairConvention convention;
    Int base_count;
    std::vector<BoundaryTerm> terms; // ordered by (i, j), i <= j per convention
};

// The boundary quotient: sum over index pairs of |G(d + 1^{+i,+j})| divided
// by |G(d)|, exact. Perturbed sequences with entries > n-1 contribute 0.
// Throws Errc::not_graphic when the base count is 0.
BoundaryReport boundary_quotient(const DegreeSequence& d,
                                 PairConvention convention = PairConvention::i_le_j,
                                 int limit = 16);

// Deterministic greedy realization; nullopt when d is non-graphic.
std::optional<LabeledGraph> havel_hakimi(const DegreeSequence& d);

} // namespace degseq
