#include "degseq/constructive.hpp"

#include "degseq/counting.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace degseq {

namespace {

std::vector<int> sorted_union(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

std::vector<int> sorted_minus(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace

const char* phase_name(Phase p) noexcept {
    switch (p) {
    case Phase::down1: return "down1";
    case Phase::uplift: return "uplift";
    case Phase::down2: return "down2";
    }
    return "?";
}

JmsPartition jms_partition(const LabeledGraph& g, int p, int q) {
    if (p < 0 || q < 0 || p >= g.n() || q >= g.n())
        fail(Errc::invalid_argument, "vertex out of range");
    std::vector<int> gp = g.neighbors(p);
    std::vector<int> gq = g.neighbors(q);
    if (gp != gq) fail(Errc::neighborhoods_differ, "Gamma(v_p) != Gamma(v_q)");

    int n = g.n();
    JmsPartition part;
    part.p = p;
    part.q = q;
    part.s = p == q ? std::vector<int>{p} : std::vector<int>{std::min(p, q), std::max(p, q)};
    part.x = gp; // sorted by construction

    std::vector<char> in_s(static_cast<size_t>(n), 0), in_x(static_cast<size_t>(n), 0),
        in_y(static_cast<size_t>(n), 0), in_z(static_cast<size_t>(n), 0);
    for (int v : part.s) in_s[static_cast<size_t>(v)] = 1;
    for (int v : part.x) in_x[static_cast<size_t>(v)] = 1;

    for (int v = 0; v < n; ++v) {
        if (in_s[static_cast<size_t>(v)] || in_x[static_cast<size_t>(v)]) continue;
        int missing = 0;
        for (int x : part.x)
            if (!g.has_edge(v, x)) ++missing;
        if (missing >= 2) {
            part.y.push_back(v);
            in_y[static_cast<size_t>(v)] = 1;
        }
    }
    // Z = Gamma(Y) outside X (and outside S, Y to keep the classes disjoint;
    // these coincide in the regime where the partition is meaningful).
    for (int y : part.y)
        for (int w : g.neighbors(y))
            if (!in_x[static_cast<size_t>(w)] && !in_s[static_cast<size_t>(w)] &&
                !in_y[static_cast<size_t>(w)])
                in_z[static_cast<size_t>(w)] = 1;
    for (int v = 0; v < n; ++v)
        if (in_z[static_cast<size_t>(v)]) part.z.push_back(v);
    for (int v = 0; v < n; ++v)
        if (!in_s[static_cast<size_t>(v)] && !in_x[static_cast<size_t>(v)] &&
            !in_y[static_cast<size_t>(v)] && !in_z[static_cast<size_t>(v)])
            part.r.push_back(v);
    part.k = sorted_union(part.x, part.z);
    return part;
}

RefinedRPartition refine_r(const LabeledGraph& g, const JmsPartition& part) {
    RefinedRPartition out;
    for (int r : part.r) {
        std::vector<int> missing;
        for (int k : part.k)
            if (!g.has_edge(r, k)) missing.push_back(k);
        if (missing.empty())
            out.r0.push_back(r);
        else if (missing.size() == 1)
            out.ri[missing.front()].push_back(r);
        else
            out.r_inf.push_back(r);
    }
    for (auto& [i, vs] : out.ri) out.r_n.insert(out.r_n.end(), vs.begin(), vs.end());
    out.r_n.insert(out.r_n.end(), out.r_inf.begin(), out.r_inf.end());
    std::sort(out.r_n.begin(), out.r_n.end());
    return out;
}

StructureVerdict validate_structure(const LabeledGraph& g, const JmsPartition& part) {
    // (i) v_p v_q is not an edge
    if (part.p != part.q && g.has_edge(part.p, part.q)) return {false, "i"};
    // (ii) Y independent
    for (size_t a = 0; a < part.y.size(); ++a)
        for (size_t b = a + 1; b < part.y.size(); ++b)
            if (g.has_edge(part.y[a], part.y[b])) return {false, "ii"};
    // (iii) K clique
    for (size_t a = 0; a < part.k.size(); ++a)
        for (size_t b = a + 1; b < part.k.size(); ++b)
            if (!g.has_edge(part.k[a], part.k[b])) return {false, "iii"};
    // (iv) Y-R empty
    for (int y : part.y)
        for (int r : part.r)
            if (g.has_edge(y, r)) return {false, "iv"};
    // (v) |X \ Gamma(r)| <= 1 for r in R
    for (int r : part.r) {
        int missing = 0;
        for (int x : part.x)
            if (!g.has_edge(r, x)) ++missing;
        if (missing > 1) return {false, "v"};
    }
    // refined checks: R_inf independent, no cross R_i edges
    RefinedRPartition refined = refine_r(g, part);
    for (size_t a = 0; a < refined.r_inf.size(); ++a)
        for (size_t b = a + 1; b < refined.r_inf.size(); ++b)
            if (g.has_edge(refined.r_inf[a], refined.r_inf[b])) return {false, "r_inf_edge"};
    std::vector<std::vector<int>> classes;
    for (auto& [i, vs] : refined.ri) classes.push_back(vs);
    classes.push_back(refined.r_inf);
    for (size_t a = 0; a < classes.size(); ++a)
        for (size_t b = a + 1; b < classes.size(); ++b)
            for (int u : classes[a])
                for (int v : classes[b])
                    if (g.has_edge(u, v)) return {false, "cross_ri_edge"};
    return {true, std::nullopt};
}

LabeledGraph hinge_flip(const LabeledGraph& g, int x, int y, int z) {
    if (x == y || x == z || y == z) fail(Errc::degenerate_vertices, "x, y, z must be distinct");
    if (x < 0 || y < 0 || z < 0 || x >= g.n() || y >= g.n() || z >= g.n())
        fail(Errc::invalid_argument, "vertex out of range");
    if (!g.has_edge(x, y)) fail(Errc::not_an_edge, "(x, y) must be an edge");
    if (g.has_edge(x, z)) fail(Errc::already_an_edge, "(x, z) must be a non-edge");
    LabeledGraph out = g;
    out.remove_edge(x, y);
    out.add_edge(x, z);
    return out;
}

namespace {

// The downward-twist loop: repeatedly apply the lexicographically least
// (x, y, z) with x != z in r0set, y in rnset, (x,y) an edge, (x,z) a
// non-edge. Each twist removes an rnset-incident edge, so the loop runs at
// most |E| times.
void twist_loop(LabeledGraph& g, const std::vector<int>& r0set, const std::vector<int>& rnset,
                Phase phase, std::vector<HingeFlipStep>& steps) {
    int guard = g.edge_count();
    for (int iter = 0; iter <= guard; ++iter) {
        bool applied = false;
        for (int x : r0set) {
            for (int y : rnset) {
                if (!g.has_edge(x, y)) continue;
                for (int z : r0set) {
                    if (z == x || g.has_edge(x, z)) continue;
                    g = hinge_flip(g, x, y, z);
                    steps.push_back({x, y, z, phase});
                    applied = true;
                    break;
                }
                if (applied) break;
            }
            if (applied) break;
        }
        if (!applied) return;
    }
    fail(Errc::internal_invariant, "downward twists exceeded the edge-count bound");
}

} // namespace

std::pair<LabeledGraph, TwistTrace> run_case1(const LabeledGraph& g, const JmsPartition& part,
                                              const RefinedRPartition& refined) {
    for (size_t a = 0; a < refined.r_n.size(); ++a)
        for (size_t b = a + 1; b < refined.r_n.size(); ++b)
            if (g.has_edge(refined.r_n[a], refined.r_n[b]))
                fail(Errc::case_mismatch, "R_N contains an edge; Case I does not apply");

    LabeledGraph cur = g;
    TwistTrace trace;
    trace.case_tag = CaseTag::case1;
    twist_loop(cur, refined.r0, refined.r_n, Phase::down1, trace.steps);

    std::vector<int> r00, r01;
    for (int r : refined.r0) {
        bool touches = false;
        for (int y : refined.r_n)
            if (cur.has_edge(r, y)) {
                touches = true;
                break;
            }
        (touches ? r00 : r01).push_back(r);
    }
    trace.hostile = HostileConfiguration{part.p, part.q, sorted_union(part.k, r00),
                                         sorted_union(part.y, refined.r_n), r01};
    return {cur, trace};
}

std::pair<LabeledGraph, TwistTrace> run_case2(const LabeledGraph& g, const JmsPartition& part,
                                              const RefinedRPartition& refined, int i) {
    auto it = refined.ri.find(i);
    const std::vector<int> ri = it == refined.ri.end() ? std::vector<int>{} : it->second;
    bool has_inner_edge = false;
    for (size_t a = 0; a < ri.size() && !has_inner_edge; ++a)
        for (size_t b = a + 1; b < ri.size(); ++b)
            if (g.has_edge(ri[a], ri[b])) {
                has_inner_edge = true;
                break;
            }
    if (!has_inner_edge)
        fail(Errc::case_mismatch, "R_i has no edge for i = " + std::to_string(i));

    LabeledGraph cur = g;
    TwistTrace trace;
    trace.case_tag = CaseTag::case2;
    Case2State state;
    state.pivot = i;

    // Step 1: BFS spanning trees of g[R_i] from least-index roots; the BFS
    // level-1 set equals the root's neighborhood inside R_i by construction.
    std::set<int> ri_set(ri.begin(), ri.end());
    std::set<int> visited;
    for (int root : ri) {
        if (visited.count(root)) continue;
        OrientedTree tree;
        tree.root = root;
        visited.insert(root);
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (!ri_set.count(w) || visited.count(w)) continue;
                visited.insert(w);
                tree.edges.emplace_back(u, w);
                queue.push_back(w);
            }
        }
        state.ri1.push_back(root);
        state.trees.push_back(std::move(tree));
    }
    state.ri0 = sorted_minus(ri, state.ri1);

    for (const OrientedTree& tree : state.trees) {
        for (auto [parent, child] : tree.edges) {
            cur = hinge_flip(cur, child, parent, i);
            trace.steps.push_back({child, parent, i, Phase::uplift});
        }
    }

    // Step 2: downward twists over (R_0*, R_N*).
    state.r0_star = sorted_union(refined.r0, state.ri0);
    state.rn_star = sorted_union(refined.r_inf, state.ri1);
    twist_loop(cur, state.r0_star, state.rn_star, Phase::down2, trace.steps);

    for (int r : state.r0_star) {
        for (int y : state.rn_star)
            if (cur.has_edge(r, y)) {
                state.rk.push_back(r);
                break;
            }
    }
    trace.hostile = HostileConfiguration{part.p, part.q, sorted_union(part.k, state.rk),
                                         sorted_union(part.y, state.rn_star),
                                         sorted_minus(state.r0_star, state.rk)};
    trace.case2 = std::move(state);
    return {cur, trace};
}

LabeledGraph replay_trace(const LabeledGraph& g, const TwistTrace& trace) {
    LabeledGraph cur = g;
    for (const HingeFlipStep& s : trace.steps) cur = hinge_flip(cur, s.x, s.y, s.z);
    return cur;
}

Certificate certify(const LabeledGraph& g, int p, int q, const SimpleRegion& region) {
    if (p < 0 || q < 0 || p >= g.n() || q >= g.n())
        fail(Errc::invalid_argument, "vertex out of range");
    if (g.neighbors(p) != g.neighbors(q))
        fail(Errc::neighborhoods_differ, "Gamma(v_p) != Gamma(v_q)");
    if (g.n() != region.n)
        fail(Errc::precondition_violated, "graph size does not match the region");
    DegreeSequence base = [&] {
        try {
            return perturb(graph_degrees(g), Perturbation::minus(p, q));
        } catch (const Error&) {
            fail(Errc::precondition_violated, "degrees(g) - 1^{+p,+q} has a negative entry");
        }
    }();
    if (!region.contains(base))
        fail(Errc::precondition_violated, "degrees(g) - 1^{+p,+q} is not a region member");

    if (auto trail = find_witness_trail(g, p, q, 11)) return *trail;

    JmsPartition part = jms_partition(g, p, q);
    StructureVerdict verdict = validate_structure(g, part);
    if (!verdict.ok)
        fail(Errc::internal_invariant,
             "no 11-witness trail, yet structural check " + *verdict.violated + " failed");
    RefinedRPartition refined = refine_r(g, part);

    // Case II for the least K-vertex whose R_i has an inner edge, else Case I.
    int case2_vertex = -1;
    for (const auto& [i, vs] : refined.ri) {
        for (size_t a = 0; a < vs.size() && case2_vertex < 0; ++a)
            for (size_t b = a + 1; b < vs.size(); ++b)
                if (g.has_edge(vs[a], vs[b])) {
                    case2_vertex = i;
                    break;
                }
        if (case2_vertex >= 0) break;
    }

    auto [final_graph, trace] = case2_vertex >= 0 ? run_case2(g, part, refined, case2_vertex)
                                                  : run_case1(g, part, refined);

    DegreeSequence d_pp = [&] {
        try {
            return perturb(graph_degrees(final_graph), Perturbation::minus(p, q));
        } catch (const Error&) {
            fail(Errc::internal_invariant, "hostile construction drove a degree negative");
        }
    }();

    // Postconditions guaranteed by the no-trail hypothesis; any failure here
    // is a bug, not an input problem.
    HostileVerdict hv = verify_hostile(final_graph, trace.hostile);
    if (!hv.ok)
        fail(Errc::internal_invariant,
             std::string("hostile configuration check failed at condition ") + hv.violated);
    if (!region.contains(d_pp))
        fail(Errc::internal_invariant, "D'' left the region");
    if (is_graphic(d_pp).graphic)
        fail(Errc::internal_invariant, "D'' is graphic despite the hostile configuration");

    return HostileCertificate{trace.hostile, final_graph, d_pp, trace};
}

ReductionResult reduce_unequal_neighborhoods(const LabeledGraph& g, int i, int j) {
    if (i < 0 || j < 0 || i >= g.n() || j >= g.n() || i == j)
        fail(Errc::invalid_argument, "need two distinct vertices");
    if (g.neighbors(i) == g.neighbors(j))
        fail(Errc::neighborhoods_equal, "Gamma(v_i) == Gamma(v_j)");
    for (int m = 0; m < g.n(); ++m) {
        if (m == i || m == j) continue;
        if (g.has_edge(i, m) && !g.has_edge(m, j)) {
            LabeledGraph out = g;
            out.remove_edge(i, m);
            out.add_edge(m, j);
            return {out, m, j};
        }
    }
    for (int m = 0; m < g.n(); ++m) {
        if (m == i || m == j) continue;
        if (g.has_edge(j, m) && !g.has_edge(m, i)) {
            LabeledGraph out = g;
            out.remove_edge(j, m);
            out.add_edge(m, i);
            return {out, m, i};
        }
    }
    // Neighborhoods differ only through the edge (v_i, v_j) itself.
    fail(Errc::no_reducing_vertex, "no length-2 alternating trail between v_i and v_j");
}

} // namespace degseq
