#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace nbcc {

using Mask = std::uint64_t;

inline constexpr Mask bit(unsigned v) noexcept { return Mask{1} << v; }
inline constexpr unsigned lowest(Mask m) noexcept { return static_cast<unsigned>(std::countr_zero(m)); }
inline constexpr unsigned count(Mask m) noexcept { return static_cast<unsigned>(std::popcount(m)); }
inline constexpr Mask prefix(unsigned n) noexcept { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

// Bit-matrix adjacency for graphs on at most 64 vertices. The exact solvers
// (clique cover, independent set, minor scans) all run on this form and take
// a vertex subset mask instead of building induced subgraphs.
struct DenseGraph {
    unsigned n = 0;
    std::vector<Mask> rows;

    DenseGraph() = default;
    explicit DenseGraph(unsigned order) : n(order), rows(order, 0) {}

    Mask all() const noexcept { return prefix(n); }
    bool adjacent(unsigned u, unsigned v) const noexcept { return (rows[u] >> v) & 1U; }
    void add_edge(unsigned u, unsigned v) noexcept
    {
        rows[u] |= bit(v);
        rows[v] |= bit(u);
    }
    unsigned edge_count() const noexcept;
    unsigned min_degree() const noexcept;

    // Complement restricted to `subset`; vertices outside keep empty rows.
    DenseGraph complement(Mask subset) const;

    friend bool operator==(const DenseGraph&, const DenseGraph&) = default;
};

// A maximum independent set of the subgraph induced by `subset`. Branch and
// bound on a maximum-degree vertex; bounded by a greedy clique partition of
// the residual graph. Ties resolve toward lower ids, so the result is
// deterministic.
Mask max_independent_set(const DenseGraph& g, Mask subset);

// Greedy clique partition: grow from the lowest uncovered vertex, always
// adding the lowest common neighbour.
std::vector<Mask> greedy_clique_partition(const DenseGraph& g, Mask subset);

// Minimum clique partition of `subset` (chromatic number of the complement).
// Blocks are ordered by their lowest vertex.
std::vector<Mask> min_clique_partition(const DenseGraph& g, Mask subset);

} // namespace nbcc
