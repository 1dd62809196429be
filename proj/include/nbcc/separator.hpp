#pragma once

#include "caps.hpp"
#include "graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nbcc {

struct FatScene;

struct IndependentSet {
    std::uint32_t alpha = 0;
    VertexSet witness;
};

// Exact maximum independent set. Throws size_error above caps.mis vertices.
IndependentSet max_independent_set(const Graph& g, const Caps& caps = {});

// alpha of the subgraph induced by `subset`.
std::uint32_t alpha_measure(const Graph& g, std::span<const Vertex> subset, const Caps& caps = {});

enum class SeparatorStrategy { degree_peel, neighborhood_peel, geometric_cut };

std::string to_string(SeparatorStrategy s);
SeparatorStrategy parse_strategy(const std::string& name); // throws input_error

struct SeparatorResult {
    VertexSet separator;
    std::uint32_t alpha_graph = 0;
    std::uint32_t alpha_separator = 0;
    std::vector<VertexSet> components;         // components of G - S
    std::vector<std::uint32_t> component_alphas;
    SeparatorStrategy strategy = SeparatorStrategy::degree_peel;
    bool qualified = false; // every component alpha <= alpha_graph / 2

    std::uint32_t max_component_alpha() const;
    // log(alpha_S) / log(alpha_G); nullopt when alpha_G < 2 or S is independent-free.
    std::optional<double> exponent() const;
};

// Heuristic alpha-separator. degree_peel moves a maximum-degree vertex of the
// component with the largest alpha into S; neighborhood_peel moves the whole
// closed neighbourhood of that component's beta_tilde witness. Both stop as
// soon as every component of G - S has alpha <= alpha(G) / 2.
SeparatorResult find_alpha_separator(const Graph& g, SeparatorStrategy strategy, const Caps& caps = {});

// Sweeps an axis-aligned slab (width = median object size) across the scene
// and keeps the cut with the smallest alpha(S) whose two sides each have
// alpha <= alpha(G) / 2; otherwise the best-balanced cut, unqualified.
SeparatorResult geometric_cut_separator(const FatScene& scene, unsigned axis, unsigned sweep_steps,
                                        const Caps& caps = {});

// Recomputes components and their alphas from scratch and compares.
bool separator_bookkeeping_holds(const Graph& g, const SeparatorResult& r, const Caps& caps = {});

struct ReportInstance {
    std::string id;
    std::string family;
    Graph graph;
};

struct ConjectureReport {
    std::string csv;
    std::vector<std::string> log; // skipped instances and per-instance errors
};

inline constexpr const char* conjecture_csv_header =
    "instance_id,family,n,t,strategy,alpha_G,alpha_S,max_component_alpha,exponent,qualified";

// One CSV row per instance per strategy. Instances with alpha(G) = 1 are
// skipped with a log line; errors are logged and the run continues.
ConjectureReport conjecture_report(const std::vector<ReportInstance>& instances, std::uint32_t t,
                                   const std::vector<SeparatorStrategy>& strategies, const Caps& caps = {});

} // namespace nbcc
