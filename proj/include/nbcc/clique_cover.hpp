#pragma once

#include "caps.hpp"
#include "graph.hpp"

#include <string>
#include <vector>

namespace nbcc {

// Partition of a graph's vertices into cliques.
struct CliqueCover {
    std::vector<VertexSet> blocks;

    std::size_t size() const noexcept { return blocks.size(); }
    friend bool operator==(const CliqueCover&, const CliqueCover&) = default;
};

struct CoverCheck {
    bool ok = true;
    std::string violation; // empty when ok
};

// Checks that the blocks partition V(g) and that each block is a clique.
CoverCheck verify_cover(const Graph& g, const CliqueCover& cover);

enum class CoverMode { exact, greedy };

// Minimum clique cover, i.e. an optimal colouring of the complement.
// Throws size_error when g has more than `cap` vertices.
CliqueCover exact_clique_cover(const Graph& g, std::uint32_t cap = Caps::default_exact_cover);

// Grows each block from the lowest-id uncovered vertex by repeatedly adding
// the lowest-id uncovered common neighbour.
CliqueCover greedy_clique_cover(const Graph& g);

// Minimum over x of the clique cover number of g[N[x]].
struct BetaTilde {
    std::uint32_t value = 0;
    Vertex witness = 0;   // lowest id attaining value
    CliqueCover cover;    // cover of N[witness], in g's vertex ids
};

BetaTilde beta_tilde(const Graph& g, CoverMode mode = CoverMode::exact,
                     std::uint32_t cap = Caps::default_exact_cover);

// Dense-kernel form used by the minor scans; cover blocks are masks.
struct DenseBetaTilde {
    unsigned value = 0;
    unsigned witness = 0;
    std::vector<Mask> cover;
};

DenseBetaTilde beta_tilde(const DenseGraph& g, CoverMode mode);

CliqueCover cover_from_masks(const std::vector<Mask>& blocks);

} // namespace nbcc
