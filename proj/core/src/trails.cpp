#include "degseq/trails.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace degseq {

namespace {

struct PairSet {
    // used-pair matrix with O(1) set/unset
    int n;
    std::vector<unsigned char> used;
    explicit PairSet(int n_) : n(n_), used(static_cast<size_t>(n_) * n_, 0) {}
    bool contains(int a, int b) const { return used[static_cast<size_t>(a) * n + b] != 0; }
    void insert(int a, int b) {
        used[static_cast<size_t>(a) * n + b] = 1;
        used[static_cast<size_t>(b) * n + a] = 1;
    }
    void erase(int a, int b) {
        used[static_cast<size_t>(a) * n + b] = 0;
        used[static_cast<size_t>(b) * n + a] = 0;
    }
};

} // namespace

std::optional<TrailViolation> validate_trail(const LabeledGraph& g, const AlternatingTrail& t) {
    if (t.length() < 1) return TrailViolation{0, "trail needs at least one pair"};
    for (size_t i = 0; i < t.vertices.size(); ++i) {
        int v = t.vertices[i];
        if (v < 0 || v >= g.n())
            return TrailViolation{static_cast<int>(i), "vertex out of range"};
    }
    std::set<std::pair<int, int>> seen;
    for (int i = 0; i < t.length(); ++i) {
        int a = t.vertices[static_cast<size_t>(i)];
        int b = t.vertices[static_cast<size_t>(i) + 1];
        if (a == b) return TrailViolation{i, "consecutive vertices equal"};
        auto pr = std::minmax(a, b);
        if (!seen.insert({pr.first, pr.second}).second)
            return TrailViolation{i, "pair repeated"};
        bool should_be_edge = ((i % 2 == 0) == t.starts_with_edge);
        if (g.has_edge(a, b) != should_be_edge)
            return TrailViolation{i, should_be_edge ? "expected an edge" : "expected a non-edge"};
    }
    return std::nullopt;
}

std::optional<AlternatingTrail> find_witness_trail(const LabeledGraph& g, int p, int q,
                                                   int max_len) {
    if (max_len < 1 || max_len % 2 == 0)
        fail(Errc::invalid_argument, "max_len must be odd and >= 1");
    if (p < 0 || p >= g.n() || q < 0 || q >= g.n())
        fail(Errc::invalid_argument, "vertex out of range");

    PairSet used(g.n());
    std::vector<int> trail{p};
    std::optional<AlternatingTrail> found;

    // DFS in increasing next-vertex order; accepting before extending yields
    // the lexicographically least valid vertex sequence.
    auto dfs = [&](auto&& self, int v, int depth) -> bool {
        if (v == q && depth % 2 == 1) {
            found = AlternatingTrail{trail, true};
            return true;
        }
        if (depth == max_len) return false;
        bool need_edge = (depth % 2 == 0); // pair index == depth
        for (int w = 0; w < g.n(); ++w) {
            if (w == v || used.contains(v, w)) continue;
            if (g.has_edge(v, w) != need_edge) continue;
            used.insert(v, w);
            trail.push_back(w);
            bool done = self(self, w, depth + 1);
            trail.pop_back();
            used.erase(v, w);
            if (done) return true;
        }
        return false;
    };
    dfs(dfs, p, 0);
    return found;
}

LabeledGraph flip_along_trail(const LabeledGraph& g, const AlternatingTrail& t) {
    if (auto bad = validate_trail(g, t))
        fail(Errc::invalid_trail,
             "invalid trail at position " + std::to_string(bad->position) + ": " + bad->reason);
    LabeledGraph out = g;
    for (int i = 0; i < t.length(); ++i) {
        int a = t.vertices[static_cast<size_t>(i)];
        int b = t.vertices[static_cast<size_t>(i) + 1];
        if (out.has_edge(a, b))
            out.remove_edge(a, b);
        else
            out.add_edge(a, b);
    }
    return out;
}

AlternatingTrail symmetric_difference_trail(const LabeledGraph& h0, const LabeledGraph& h1,
                                            int p, int q) {
    if (h0.n() != h1.n()) fail(Errc::precondition_violated, "graphs differ in size");
    DegreeSequence expect = perturb(graph_degrees(h0), Perturbation::plus(p, q));
    if (graph_degrees(h1) != expect)
        fail(Errc::precondition_violated, "degrees(h1) != degrees(h0) + 1^{+p,+q}");

    int n = h0.n();
    // plus-class: edges of h1 not in h0; minus-class: edges of h0 not in h1
    auto in_plus = [&](int a, int b) { return h1.has_edge(a, b) && !h0.has_edge(a, b); };
    auto in_minus = [&](int a, int b) { return h0.has_edge(a, b) && !h1.has_edge(a, b); };

    PairSet used(n);
    std::vector<int> trail{q};
    int cur = q;
    bool want_plus = true;
    for (;;) {
        int next = -1;
        for (int w = 0; w < n; ++w) {
            if (w == cur || used.contains(cur, w)) continue;
            if (want_plus ? in_plus(cur, w) : in_minus(cur, w)) {
                next = w;
                break;
            }
        }
        if (next < 0) break;
        used.insert(cur, next);
        trail.push_back(next);
        cur = next;
        want_plus = !want_plus;
    }

    // The counting argument behind the degree precondition forces the
    // maximal trail to stop at v_p after a plus-class pair.
    if (cur != p || trail.size() % 2 != 0)
        fail(Errc::internal_invariant, "maximal difference trail did not end at v_p");
    return AlternatingTrail{trail, true};
}

namespace {

bool is_sorted_unique(const std::vector<int>& v) {
    for (size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] >= v[i + 1]) return false;
    return true;
}

} // namespace

HostileVerdict verify_hostile(const LabeledGraph& g, const HostileConfiguration& h) {
    int n = g.n();
    std::vector<int> mark(static_cast<size_t>(n), 0);
    auto place = [&](const std::vector<int>& vs) {
        if (!is_sorted_unique(vs)) fail(Errc::not_a_partition, "set not sorted/unique");
        for (int v : vs) {
            if (v < 0 || v >= n) fail(Errc::not_a_partition, "vertex out of range");
            if (mark[static_cast<size_t>(v)]++) fail(Errc::not_a_partition, "sets overlap");
        }
    };
    place(h.s());
    place(h.k);
    place(h.y);
    place(h.r);
    for (int v = 0; v < n; ++v)
        if (!mark[static_cast<size_t>(v)]) fail(Errc::not_a_partition, "vertex not covered");

    // (a) K' is a clique
    for (size_t a = 0; a < h.k.size(); ++a)
        for (size_t b = a + 1; b < h.k.size(); ++b)
            if (!g.has_edge(h.k[a], h.k[b])) return {false, 'a'};
    // (b) K'-R' complete bipartite
    for (int u : h.k)
        for (int w : h.r)
            if (!g.has_edge(u, w)) return {false, 'b'};
    // (c) Y' independent
    for (size_t a = 0; a < h.y.size(); ++a)
        for (size_t b = a + 1; b < h.y.size(); ++b)
            if (g.has_edge(h.y[a], h.y[b])) return {false, 'c'};
    // (d) Y'-R' empty
    for (int u : h.y)
        for (int w : h.r)
            if (g.has_edge(u, w)) return {false, 'd'};
    // (e) Gamma(v_p) u Gamma(v_q) inside K'
    for (int s : {h.p, h.q})
        for (int w : g.neighbors(s))
            if (!std::binary_search(h.k.begin(), h.k.end(), w)) return {false, 'e'};
    return {true, '\0'};
}

} // namespace degseq
