#include "degseq/switch_chain.hpp"

#include "degseq/counting.hpp"
#include "degseq/errors.hpp"

#include <algorithm>
#include <map>

namespace degseq {

ChainState make_chain_state(const DegreeSequence& d, std::uint64_t seed) {
    auto g = havel_hakimi(d);
    if (!g) fail(Errc::not_graphic, "no realization exists");
    ChainState state{*g, SplitMix64(seed), 0, 0, g->edges()};
    return state;
}

void switch_step_inplace(ChainState& state) {
    auto& edges = state.edge_list;
    std::uint64_t m = edges.size();
    if (m < 2) fail(Errc::too_few_edges, "switch step needs at least two edges");

    // ordered pair of distinct edges, then one of the two rewirings
    std::uint64_t a = state.rng.below(m);
    std::uint64_t b = state.rng.below(m - 1);
    if (b >= a) ++b;
    bool flip = state.rng.below(2) == 1;

    auto [v1, w1] = edges[a];
    auto [v2, w2] = edges[b];
    if (flip) std::swap(v2, w2);

    ++state.steps_taken;
    // proposed: (v1, w2) and (v2, w1)
    bool distinct = v1 != v2 && v1 != w2 && w1 != v2 && w1 != w2;
    if (!distinct || state.graph.has_edge(v1, w2) || state.graph.has_edge(v2, w1)) {
        ++state.proposals_rejected; // lazy hold
        return;
    }
    state.graph.remove_edge(v1, w1);
    state.graph.remove_edge(v2, w2);
    state.graph.add_edge(v1, w2);
    state.graph.add_edge(v2, w1);
    edges[a] = {std::min(v1, w2), std::max(v1, w2)};
    edges[b] = {std::min(v2, w1), std::max(v2, w1)};
}

std::string canonical_key(const LabeledGraph& g) {
    std::string key;
    for (auto [i, j] : g.edges()) {
        if (!key.empty()) key += ',';
        key += std::to_string(i);
        key += '-';
        key += std::to_string(j);
    }
    return key.empty() ? "empty" : key;
}

MixingReport run_chain(const DegreeSequence& d, std::uint64_t seed, long long steps,
                       long long thin, long long burn_in,
                       const std::function<void(long long, const std::string&)>& sample_sink) {
    if (steps < 0 || burn_in < 0 || thin < 1)
        fail(Errc::invalid_argument, "need steps, burn_in >= 0 and thin >= 1");
    ChainState state = make_chain_state(d, seed);
    bool frozen = state.edge_list.size() < 2; // nothing to propose; unique up to holds

    for (long long t = 0; t < burn_in; ++t)
        if (!frozen) switch_step_inplace(state);

    MixingReport report;
    std::map<std::string, long long> counts;
    long long sample_index = 0;
    for (long long t = 1; t <= steps; ++t) {
        if (!frozen) switch_step_inplace(state);
        if (t % thin == 0) {
            if (graph_degrees(state.graph) != d)
                fail(Errc::internal_invariant, "chain left the degree class");
            std::string key = canonical_key(state.graph);
            ++counts[key];
            if (sample_sink) sample_sink(sample_index, key);
            ++sample_index;
        }
    }
    report.total_samples = sample_index;
    report.visit_counts.assign(counts.begin(), counts.end());

    if (d.n() <= 8 && report.total_samples > 0) {
        std::vector<LabeledGraph> all = enumerate_realizations(d, 8);
        Rat tv = 0;
        Rat uniform(1, static_cast<long long>(all.size()));
        for (const LabeledGraph& g : all) {
            auto it = counts.find(canonical_key(g));
            Rat emp = it == counts.end() ? Rat(0) : Rat(it->second, report.total_samples);
            Rat diff = emp - uniform;
            if (diff < 0) diff = -diff;
            tv += diff;
        }
        report.tv_distance = tv / 2;
    }
    return report;
}

} // namespace degseq
