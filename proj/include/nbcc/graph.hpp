#pragma once

#include "dense.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nbcc {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Sorted, duplicate-free list of vertex ids of some host graph.
using VertexSet = std::vector<Vertex>;

// Simple undirected graph on vertices 0..n-1. Immutable once built; neighbour
// lists are sorted and symmetric. Graphs on at most 64 vertices also carry a
// bit-matrix copy of the adjacency.
class Graph {
public:
    Graph() = default;

    // Throws input_error on an out-of-range endpoint or a self-loop.
    // Duplicate edges (in either orientation) collapse.
    Graph(Vertex n, std::span<const Edge> edges);
    Graph(Vertex n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size()))
    {
    }

    // Returns a copy carrying per-vertex labels (size must equal order()).
    Graph with_labels(std::vector<std::string> labels) const;

    Vertex order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edge_count_; }
    bool empty() const noexcept { return n_ == 0; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
    std::size_t min_degree() const noexcept;
    bool adjacent(Vertex u, Vertex v) const;

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    const std::vector<std::string>& labels() const noexcept { return labels_; }

    // Null when the graph has more than 64 vertices.
    const DenseGraph* dense() const noexcept { return dense_ ? &*dense_ : nullptr; }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.adj_ == b.adj_ && a.labels_ == b.labels_;
    }

private:
    Vertex n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::string> labels_;
    std::optional<DenseGraph> dense_ = DenseGraph{};
};

// Throws input_error unless `s` is sorted, duplicate-free and in range.
void validate_vertex_set(const Graph& g, std::span<const Vertex> s);

// {v} together with its neighbours.
VertexSet closed_neighborhood(const Graph& g, Vertex v);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_host;                  // new id -> old id
    std::vector<std::optional<Vertex>> from_host; // old id -> new id
};

// Vertices of `s` renumbered 0..|s|-1 in sorted order. Labels carry over.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

Graph complement(const Graph& g);

// Radius of the subgraph induced by `s`, measured inside it; nullopt when that
// subgraph is disconnected. Throws input_error for an empty set.
std::optional<std::uint32_t> radius_within(const Graph& g, std::span<const Vertex> s);

// Diameter of the subgraph induced by `s`; nullopt when disconnected.
std::optional<std::uint32_t> diameter_within(const Graph& g, std::span<const Vertex> s);

struct Degeneracy {
    std::uint32_t value = 0;
    std::vector<Vertex> order; // peeling order, lowest id first among ties
};

Degeneracy degeneracy(const Graph& g);

// Components ordered by their lowest vertex, each sorted.
std::vector<VertexSet> connected_components(const Graph& g);

Graph graph_from_dense(const DenseGraph& d);

Mask to_mask(std::span<const Vertex> s);
VertexSet from_mask(Mask m);

} // namespace nbcc
