#pragma once

#include "caps.hpp"
#include "clique_cover.hpp"
#include "graph.hpp"
#include "rational.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nbcc {

// Witness of a t-shallow minor: disjoint connected branch sets of radius at
// most t. Host vertices outside every branch set are deleted; no edge is ever
// deleted on its own.
struct MinorModel {
    std::uint32_t t = 0;
    std::vector<VertexSet> branch_sets;

    friend bool operator==(const MinorModel&, const MinorModel&) = default;
};

// One message per violated invariant, naming the offending branch set.
// Empty means the model is valid for `host`.
std::vector<std::string> validate_model(const Graph& host, const MinorModel& model);

// One vertex per branch set (labelled with its member list); two are adjacent
// iff the host has an edge across them. Throws model_error for invalid models.
Graph quotient(const Graph& host, const MinorModel& model);

DenseGraph quotient_dense(const DenseGraph& host, std::span<const Mask> branch_sets);

MinorModel model_from_masks(std::uint32_t t, std::span<const Mask> branch_sets);

// Visits every valid t-model exactly once, up to the order of branch sets.
// Branch sets arrive ordered by their minimum vertex. The empty family is not
// a model and is never visited. Throws size_error above the caps.
using ModelVisitor = std::function<void(std::span<const Mask>)>;
void for_each_minor_model(const Graph& g, std::uint32_t t, const Caps& caps, const ModelVisitor& visit);

std::vector<MinorModel> enumerate_minor_models(const Graph& g, std::uint32_t t, const Caps& caps = {});

// Isomorphism-invariant key of a graph on at most 8 vertices: a canonical
// adjacency string (refined by colour classes, then minimised over orderings
// within classes), or the labelled string tagged as such when that search
// would be too large. Equal keys always imply isomorphic graphs. Larger graphs
// get no key and are never deduplicated.
std::optional<std::uint64_t> canonical_key(const DenseGraph& g);

struct GradResult {
    Rational value;
    MinorModel witness;
};

struct GradHatResult {
    std::uint32_t value = 0;
    MinorModel witness;
};

struct BetaHatResult {
    std::uint32_t value = 0;
    MinorModel witness;
    Vertex vertex = 0;  // witness vertex in the quotient
    CliqueCover cover;  // cover of its closed neighbourhood, quotient ids
};

struct MinorSizeResult {
    std::uint32_t value = 0;
    MinorModel witness;
};

// Max of |E(H)|/|V(H)| over t-minors H.
GradResult grad(const Graph& g, std::uint32_t t, const Caps& caps = {});

// Max of the minimum degree over t-minors.
GradHatResult grad_hat(const Graph& g, std::uint32_t t, const Caps& caps = {});

// Max of beta_tilde(H) over t-minors H. Quotients isomorphic to one already
// evaluated are skipped.
BetaHatResult beta_hat(const Graph& g, std::uint32_t t, CoverMode mode = CoverMode::exact,
                       const Caps& caps = {});

// Largest p with K_p as a t-minor.
MinorSizeResult largest_clique_minor(const Graph& g, std::uint32_t t, const Caps& caps = {});

// Largest s with K_{1,s} as a t-minor (K_2 counts as s = 1); 0 iff g has no edge.
MinorSizeResult largest_star_minor(const Graph& g, std::uint32_t t, const Caps& caps = {});

// All of the above from a single enumeration pass.
struct MinorProfile {
    GradResult grad;
    GradHatResult grad_hat;
    BetaHatResult beta_hat;
    MinorSizeResult clique;
    MinorSizeResult star;
    std::size_t models = 0;
    std::size_t distinct_quotients = 0;
};

MinorProfile minor_profile(const Graph& g, std::uint32_t t, CoverMode mode = CoverMode::exact,
                           const Caps& caps = {});

} // namespace nbcc
