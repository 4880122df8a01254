#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "idealflow/matrix.hpp"

namespace idealflow {

template <ScalarDomain T>
class StochasticMatrix;

struct Edge {
    std::size_t from;
    std::size_t to;
    Rational weight;
};

// Weighted directed graph. Absence of an edge means weight zero; explicit
// zero-weight and duplicate edges are rejected. Self-loops are allowed.
class DirectedNetwork {
public:
    DirectedNetwork(std::size_t node_count, std::vector<Edge> edges,
                    std::vector<std::string> labels = {});

    std::size_t node_count() const { return node_count_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(std::size_t node) const { return labels_.at(node); }
    const std::vector<std::string>& labels() const { return labels_; }

    // Successor lists in insertion order.
    std::vector<std::vector<std::size_t>> adjacency_lists() const;

private:
    std::size_t node_count_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
};

struct IrreducibilityReport {
    bool strongly_connected = false;
    std::size_t component_count = 0;
    std::vector<std::size_t> component_assignment;
};

// Entry (i, j) is the weight of edge i -> j, zero when absent.
SquareMatrix<Rational> adjacency_matrix(const DirectedNetwork& g);

// Rebuild the network of a non-negative matrix: one edge per nonzero entry.
DirectedNetwork network_from_adjacency(const SquareMatrix<Rational>& m);

// Strongly connected components (Tarjan). Component ids are dense, 0-based.
IrreducibilityReport strong_connectivity(const DirectedNetwork& g);
IrreducibilityReport strong_connectivity(
    const std::vector<std::vector<std::size_t>>& successors);

// SCC decomposition of a matrix's nonzero pattern.
template <ScalarDomain T>
IrreducibilityReport strong_connectivity_of_support(const SquareMatrix<T>& m) {
    std::vector<std::vector<std::size_t>> succ(m.order());
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j)
            if (m(i, j) != T{}) succ[i].push_back(j);
    return strong_connectivity(succ);
}

// Row-normalized walk matrix: row i of the adjacency matrix divided by the
// weighted out-degree of node i. Exact over rationals; throws
// DanglingNodeError when a node has no outgoing edge.
StochasticMatrix<Rational> uniform_walk_matrix(const DirectedNetwork& g);

}  // namespace idealflow
