#include "degseq/errors.hpp"

namespace degseq {

const char* errc_tag(Errc c) noexcept {
    switch (c) {
    case Errc::odd_sum: return "OddSum";
    case Errc::underflow: return "Underflow";
    case Errc::too_large: return "TooLarge";
    case Errc::not_graphic: return "NotGraphic";
    case Errc::invalid_region: return "InvalidRegion";
    case Errc::invalid_trail: return "InvalidTrail";
    case Errc::not_a_partition: return "NotAPartition";
    case Errc::neighborhoods_differ: return "NeighborhoodsDiffer";
    case Errc::neighborhoods_equal: return "NeighborhoodsEqual";
    case Errc::no_reducing_vertex: return "NoReducingVertex";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::case_mismatch: return "CaseMismatch";
    case Errc::internal_invariant: return "InternalInvariantFailure";
    case Errc::odd_r: return "OddR";
    case Errc::infeasible: return "Infeasible";
    case Errc::sigma_outside_window: return "SigmaOutsideWindow";
    case Errc::parity_impossible: return "ParityImpossible";
    case Errc::too_few_edges: return "TooFewEdges";
    case Errc::not_an_edge: return "NotAnEdge";
    case Errc::already_an_edge: return "AlreadyAnEdge";
    case Errc::degenerate_vertices: return "DegenerateVertices";
    case Errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace degseq
