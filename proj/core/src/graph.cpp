#include "degseq/graph.hpp"

#include <string>

namespace degseq {

LabeledGraph::LabeledGraph(int n) : n_(n) {
    if (n < 1) fail(Errc::invalid_argument, "graph needs n >= 1");
    adj_.assign(static_cast<size_t>(n) * n, 0);
    deg_.assign(static_cast<size_t>(n), 0);
}

LabeledGraph::LabeledGraph(int n, const std::vector<std::pair<int, int>>& edges)
    : LabeledGraph(n) {
    for (auto [i, j] : edges) add_edge(i, j);
}

void LabeledGraph::check_pair(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        fail(Errc::invalid_argument, "vertex out of range");
    if (i == j) fail(Errc::invalid_argument, "loops are not allowed");
}

void LabeledGraph::add_edge(int i, int j) {
    check_pair(i, j);
    if (has_edge(i, j)) fail(Errc::invalid_argument, "duplicate edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
    adj_[static_cast<size_t>(i) * n_ + j] = 1;
    adj_[static_cast<size_t>(j) * n_ + i] = 1;
    ++deg_[static_cast<size_t>(i)];
    ++deg_[static_cast<size_t>(j)];
    ++edge_count_;
}

void LabeledGraph::remove_edge(int i, int j) {
    check_pair(i, j);
    if (!has_edge(i, j)) fail(Errc::invalid_argument, "no such edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
    adj_[static_cast<size_t>(i) * n_ + j] = 0;
    adj_[static_cast<size_t>(j) * n_ + i] = 0;
    --deg_[static_cast<size_t>(i)];
    --deg_[static_cast<size_t>(j)];
    --edge_count_;
}

std::vector<int> LabeledGraph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(deg_[static_cast<size_t>(v)]));
    for (int w = 0; w < n_; ++w)
        if (has_edge(v, w)) out.push_back(w);
    return out;
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
}

DegreeSequence graph_degrees(const LabeledGraph& g) {
    std::vector<int> d(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) d[static_cast<size_t>(v)] = g.degree(v);
    return DegreeSequence(std::move(d));
}

} // namespace degseq
