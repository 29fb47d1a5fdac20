#pragma once

#include "degseq/graph.hpp"
#include "degseq/regions.hpp"
#include "degseq/trails.hpp"

#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace degseq {

// The S, X, Y, Z, R, K vertex classes around a perturbed pair with equal
// neighborhoods: X = Gamma(v_p) = Gamma(v_q), Y = vertices missing at least
// two X-neighbors, Z = Gamma(Y) outside X, R = the rest, K = X u Z.
struct JmsPartition {
    int p;
    int q;
    std::vector<int> s;
    std::vector<int> x;
    std::vector<int> y;
    std::vector<int> z;
    std::vector<int> r;
    std::vector<int> k;
};

// Throws Errc::neighborhoods_differ unless Gamma(v_p) == Gamma(v_q).
JmsPartition jms_partition(const LabeledGraph& g, int p, int q);

struct StructureVerdict {
    bool ok;
    // First failed check: "i".."v", "r_inf_edge", "cross_ri_edge".
    std::optional<std::string> violated;
};

// Checker for the structural facts that hold when no witness trail exists:
// (i) v_p v_q non-edge, (ii) Y independent, (iii) K clique, (iv) Y-R empty,
// (v) |X \ Gamma(r)| <= 1 for r in R; plus, on the refined partition,
// R_inf independent and no R_i-R_j edges for i != j.
StructureVerdict validate_structure(const LabeledGraph& g, const JmsPartition& part);

// R split by the missing K-neighbors: R_0 (none missing), R_i (exactly
// {v_i} missing, keyed by the K-vertex), R_inf (two or more missing).
struct RefinedRPartition {
    std::vector<int> r0;
    std::map<int, std::vector<int>> ri;
    std::vector<int> r_inf;
    std::vector<int> r_n; // union of all R_i and R_inf
};

RefinedRPartition refine_r(const LabeledGraph& g, const JmsPartition& part);

// Deletes the edge (x, y), adds the non-edge (x, z); degree of y drops by 1,
// z gains 1, everything else unchanged.
LabeledGraph hinge_flip(const LabeledGraph& g, int x, int y, int z);

enum class Phase { down1, uplift, down2 };
const char* phase_name(Phase p) noexcept;

struct HingeFlipStep {
    int x; // pivot (degree unchanged)
    int y; // loses the edge
    int z; // gains the edge
    Phase phase;
};

struct OrientedTree {
    int root;
    std::vector<std::pair<int, int>> edges; // parent -> child, BFS order
};

struct Case2State {
    int pivot; // v_i
    std::vector<int> ri0;
    std::vector<int> ri1; // component roots
    std::vector<int> r0_star;
    std::vector<int> rn_star;
    std::vector<int> rk;
    std::vector<OrientedTree> trees;
};

enum class CaseTag { case1, case2 };

struct TwistTrace {
    CaseTag case_tag;
    std::vector<HingeFlipStep> steps;
    std::optional<Case2State> case2;
    HostileConfiguration hostile; // the partition the construction ends with
};

// Case I: downward twists over (R_0, R_N) until exhaustion, then the
// K u R_0^0 / Y u R_N / R_0^1 partition. Requires R_N independent
// (Errc::case_mismatch otherwise). Total mechanical transform; the
// hostility/region guarantees are checked inside certify only.
std::pair<LabeledGraph, TwistTrace> run_case1(const LabeledGraph& g, const JmsPartition& part,
                                              const RefinedRPartition& refined);

// Case II for the K-vertex i whose R_i contains an edge: Step 1 uplifts
// spanning-tree edges of g[R_i] onto v_i (BFS trees from least-index roots),
// Step 2 reruns the downward twists over (R_0*, R_N*), then the
// K u R_K / Y u R_N* / rest partition. Errc::case_mismatch when R_i is
// edgeless.
std::pair<LabeledGraph, TwistTrace> run_case2(const LabeledGraph& g, const JmsPartition& part,
                                              const RefinedRPartition& refined, int i);

// Re-applies the recorded steps; reproduces the construction output
// bit-exactly.
LabeledGraph replay_trace(const LabeledGraph& g, const TwistTrace& trace);

struct HostileCertificate {
    HostileConfiguration config;
    LabeledGraph final_graph;
    DegreeSequence d_pp; // degrees(final_graph) - 1^{+p,+q}; not graphic
    TwistTrace trace;
};

using Certificate = std::variant<AlternatingTrail, HostileCertificate>;

inline bool is_witness(const Certificate& c) {
    return std::holds_alternative<AlternatingTrail>(c);
}

// The dichotomy: an 11-witness trail between v_p and v_q, or a hostile
// configuration reached by twists whose base sequence D'' stays in the
// region and fails Erdos-Gallai. Preconditions: degrees(g) = d + 1^{+p,+q}
// for some d in region (Errc::precondition_violated) and
// Gamma(v_p) == Gamma(v_q) (Errc::neighborhoods_differ). A structural
// validator failure with no witness trail present is impossible and raises
// Errc::internal_invariant, as does any failed postcondition check on the
// hostile branch.
Certificate certify(const LabeledGraph& g, int p, int q, const SimpleRegion& region);

struct ReductionResult {
    LabeledGraph graph;
    int m;              // the pivot vertex of the length-2 alternating trail
    int doubled_vertex; // degrees went from d + 1^{+i,+j} to d + 2*1^{+doubled}
};

// For Gamma(v_i) != Gamma(v_j): flips the least length-2 alternating trail
// v_i v_m v_j (or its mirror), moving one degree from i to j (or j to i).
// Errc::neighborhoods_equal when the neighborhoods agree;
// Errc::no_reducing_vertex in the degenerate corner where they differ only
// through the edge (v_i, v_j) itself.
ReductionResult reduce_unequal_neighborhoods(const LabeledGraph& g, int i, int j);

} // namespace degseq
