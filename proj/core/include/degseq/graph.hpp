#pragma once

#include "degseq/degree_sequence.hpp"
#include "degseq/errors.hpp"

#include <utility>
#include <vector>

namespace degseq {

// A simple labeled graph on vertices 0..n-1. No loops, no multi-edges.
// Stored as an adjacency matrix; certificate work targets small and medium
// instances where O(n^2) storage is the right trade.
class LabeledGraph {
public:
    explicit LabeledGraph(int n);
    LabeledGraph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    bool has_edge(int i, int j) const {
        return adj_[static_cast<size_t>(i) * n_ + j] != 0;
    }
    void add_edge(int i, int j);
    void remove_edge(int i, int j);

    int degree(int v) const { return deg_[static_cast<size_t>(v)]; }
    int edge_count() const { return edge_count_; }
    std::vector<int> neighbors(int v) const;

    // Lexicographically sorted list of pairs (i, j) with i < j.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const LabeledGraph&) const = default;

private:
    void check_pair(int i, int j) const;

    int n_;
    int edge_count_ = 0;
    std::vector<unsigned char> adj_;
    std::vector<int> deg_;
};

// Positional degree vector of g; sum equals 2*|edges|.
DegreeSequence graph_degrees(const LabeledGraph& g);

} // namespace degseq
