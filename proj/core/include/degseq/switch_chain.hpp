#pragma once

#include "degseq/degree_sequence.hpp"
#include "degseq/graph.hpp"
#include "degseq/numeric.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace degseq {

// One switch-chain state. The degree sequence of graph is invariant across
// the run. edge_list mirrors the graph's edges in a deterministic order so
// proposals are O(1); it is derived state.
struct ChainState {
    LabeledGraph graph;
    SplitMix64 rng;
    unsigned long long steps_taken = 0;
    unsigned long long proposals_rejected = 0;
    std::vector<std::pair<int, int>> edge_list;
};

// Initial realization via the deterministic greedy construction.
// Throws Errc::not_graphic.
ChainState make_chain_state(const DegreeSequence& d, std::uint64_t seed);

// Samples an ordered pair of distinct edges and one of the two rewirings
// uniformly; applies it iff all four endpoints are distinct and neither new
// pair is present, otherwise holds (lazy step). Throws Errc::too_few_edges
// below 2 edges.
void switch_step_inplace(ChainState& state);

inline ChainState switch_step(ChainState state) {
    switch_step_inplace(state);
    return state;
}

// "i-j,k-l" over the sorted edge list; exact, collision-free.
std::string canonical_key(const LabeledGraph& g);

struct MixingReport {
    std::vector<std::pair<std::string, long long>> visit_counts; // sorted by key
    // (1/2) sum over all realizations |empirical - uniform|; engaged only
    // when n <= 8 where the realization set is enumerated exactly.
    std::optional<Rat> tv_distance;
    long long total_samples = 0;
};

// Runs burn_in + steps proposals from the greedy initial realization,
// recording every thin-th post-burn-in state. sample_sink, when set, sees
// (sample_index, state_key) for each recorded sample.
MixingReport run_chain(const DegreeSequence& d, std::uint64_t seed, long long steps,
                       long long thin = 1, long long burn_in = 0,
                       const std::function<void(long long, const std::string&)>& sample_sink = {});

} // namespace degseq
