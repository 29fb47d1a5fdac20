#pragma once

#include "degseq/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace degseq {

// An alternating trail of edges and non-edges: vertices may repeat, pairs
// never do. Against a reference graph, pair t is an edge iff
// (t even) == starts_with_edge. Edge-abundant trails start (and, having odd
// length, end) with an edge.
struct AlternatingTrail {
    std::vector<int> vertices; // v_0 .. v_L
    bool starts_with_edge = true;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

struct TrailViolation {
    int position; // first violating pair index (or vertex index for range errors)
    std::string reason;
};

// Structural + alternation check of t against g; nullopt when valid.
std::optional<TrailViolation> validate_trail(const LabeledGraph& g,
                                             const AlternatingTrail& t);

// Lexicographically least (by vertex sequence) edge-abundant alternating
// trail from v_p to v_q of odd length <= max_len, by exhaustive DFS with a
// used-pair set; nullopt when none exists. max_len must be odd and >= 1.
std::optional<AlternatingTrail> find_witness_trail(const LabeledGraph& g, int p, int q,
                                                   int max_len = 11);

// Flips every pair of t: edges become non-edges and vice versa.
// Throws Errc::invalid_trail carrying the first violating position.
LabeledGraph flip_along_trail(const LabeledGraph& g, const AlternatingTrail& t);

// Maximal alternating trail in E(h0) delta E(h1) starting at v_q with a
// first element in E(h1)\E(h0); by the degree precondition
// (degrees(h1) = degrees(h0) + 1^{+p,+q}) it ends at v_p and is
// edge-abundant with respect to h1. Greedy extension, lowest-index first.
AlternatingTrail symmetric_difference_trail(const LabeledGraph& h0, const LabeledGraph& h1,
                                            int p, int q);

// S = {v_p, v_q} (a singleton when p == q); K', Y', R' as sorted vertex sets.
struct HostileConfiguration {
    int p;
    int q;
    std::vector<int> k;
    std::vector<int> y;
    std::vector<int> r;

    std::vector<int> s() const { return p == q ? std::vector<int>{p} : std::vector<int>{p, q}; }
};

struct HostileVerdict {
    bool ok;
    char violated; // 'a'..'e' when !ok, '\0' otherwise
};

// Checks (a) K' clique, (b) K'-R' complete bipartite, (c) Y' independent,
// (d) Y'-R' empty, (e) Gamma(v_p) u Gamma(v_q) inside K'. Returns the first
// violated condition. Throws Errc::not_a_partition when S,K',Y',R' do not
// partition the vertex set.
HostileVerdict verify_hostile(const LabeledGraph& g, const HostileConfiguration& h);

} // namespace degseq
