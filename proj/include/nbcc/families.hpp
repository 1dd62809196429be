#pragma once

#include "clique_cover.hpp"
#include "graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nbcc {

// complete, cycle, path, star (`n` leaves around centre 0), grid (a x b),
// empty. Throws input_error for unknown kinds or non-positive sizes.
Graph gen_named(const std::string& kind, std::uint32_t n, std::uint32_t b = 0);

// Each pair (u, v), u < v, in lexicographic order consumes one uniform draw
// and becomes an edge when the draw is below p.
Graph gen_erdos_renyi(std::uint32_t n, double p, std::uint64_t seed);

// Vertex i attaches to a random subset (size 1..attach_max) of a greedily
// grown clique around a random earlier vertex, so the reverse insertion order
// is a perfect elimination order.
Graph gen_chordal(std::uint32_t n, std::uint64_t seed, std::uint32_t attach_max);

// Random closed intervals in [0, 1]; adjacent iff they intersect.
Graph gen_interval(std::uint32_t n, std::uint64_t seed);

// A finite poset on 0..n-1 with its incomparability graph.
struct PosetInstance {
    std::uint32_t n = 0;
    std::vector<Edge> relation; // (a, b) means a < b; sorted, transitively closed
    Graph incomparability;

    bool less(Vertex a, Vertex b) const;
};

// Builds the instance from a relation, closing it transitively. Throws
// input_error if the relation has a cycle or an out-of-range element.
PosetInstance make_poset(std::uint32_t n, std::vector<Edge> relation);

// Throws input_error unless the relation is irreflexive, antisymmetric and
// transitive and the graph matches it.
void validate_poset(const PosetInstance& poset);

// Random linear extension, each forward pair related with probability
// edge_prob, then transitive closure.
PosetInstance gen_poset_incomparability(std::uint32_t n, std::uint64_t seed, double edge_prob);

struct ChordalCheck {
    bool chordal = false;
    std::vector<Vertex> elimination_order;  // perfect elimination order when chordal
    std::optional<std::pair<Vertex, Vertex>> violation; // non-adjacent later neighbours
    Vertex violating_vertex = 0;
    std::vector<Vertex> chordless_cycle;    // diagnostic; may be empty
};

// Maximum cardinality search; the reverse visit order is tested as a perfect
// elimination order.
ChordalCheck is_chordal(const Graph& g);
bool is_chordal(const DenseGraph& g);

// Layers of minimal elements: layer 0 is every minimal element, layer i+1
// the minimal elements once layers 0..i are removed. Each layer is an
// antichain, i.e. a clique of the incomparability graph.
CliqueCover mirsky_clique_cover(const PosetInstance& poset);

// Generator parameters shared by the CLI and the verification harness.
struct FamilyParams {
    std::string family; // complete|cycle|path|star|grid|empty|er|chordal|interval|poset
    std::uint32_t n = 0;
    std::uint32_t b = 0;      // grid second side
    double p = 0.5;           // er edge probability / poset relation probability
    std::uint64_t seed = 0;
    std::uint32_t attach_max = 3;
};

bool is_random_family(const std::string& family);
bool is_known_family(const std::string& family);

// Incomparability graph for "poset".
Graph generate(const FamilyParams& params);

} // namespace nbcc
