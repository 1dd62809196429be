#include "nbcc/clique_cover.hpp"

#include "nbcc/errors.hpp"

#include <algorithm>

namespace nbcc {

CoverCheck verify_cover(const Graph& g, const CliqueCover& cover)
{
    std::vector<int> owner(g.order(), -1);
    for (std::size_t b = 0; b < cover.blocks.size(); ++b) {
        const auto& block = cover.blocks[b];
        if (block.empty())
            return {false, "block " + std::to_string(b) + " is empty"};
        for (Vertex v : block) {
            if (v >= g.order())
                return {false, "block " + std::to_string(b) + " names vertex " + std::to_string(v) +
                                   " outside the graph"};
            if (owner[v] >= 0)
                return {false, "vertex " + std::to_string(v) + " appears in blocks " +
                                   std::to_string(owner[v]) + " and " + std::to_string(b)};
            owner[v] = static_cast<int>(b);
        }
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j)
                if (!g.adjacent(block[i], block[j]))
                    return {false, "block " + std::to_string(b) + " is not a clique: " +
                                       std::to_string(block[i]) + "-" + std::to_string(block[j]) + " missing"};
    }
    for (Vertex v = 0; v < g.order(); ++v)
        if (owner[v] < 0)
            return {false, "vertex " + std::to_string(v) + " is not covered"};
    return {};
}

CliqueCover cover_from_masks(const std::vector<Mask>& blocks)
{
    CliqueCover out;
    out.blocks.reserve(blocks.size());
    for (Mask b : blocks)
        out.blocks.push_back(from_mask(b));
    return out;
}

namespace {

void require_cap(const Graph& g, std::uint32_t cap)
{
    const std::uint32_t limit = std::min(cap, Caps::hard_exact_cover);
    if (g.order() > limit)
        throw size_error("exact clique cover limited to " + std::to_string(limit) + " vertices (got " +
                         std::to_string(g.order()) + "); use greedy_clique_cover or raise the cap");
}

} // namespace

CliqueCover exact_clique_cover(const Graph& g, std::uint32_t cap)
{
    require_cap(g, cap);
    const DenseGraph& d = *g.dense();
    return cover_from_masks(min_clique_partition(d, d.all()));
}

CliqueCover greedy_clique_cover(const Graph& g)
{
    if (const DenseGraph* d = g.dense())
        return cover_from_masks(greedy_clique_partition(*d, d->all()));

    CliqueCover out;
    std::vector<char> covered(g.order(), 0);
    for (Vertex seed = 0; seed < g.order(); ++seed) {
        if (covered[seed])
            continue;
        VertexSet block{seed};
        covered[seed] = 1;
        std::vector<Vertex> common;
        for (Vertex w : g.neighbors(seed))
            if (!covered[w])
                common.push_back(w);
        while (!common.empty()) {
            const Vertex v = common.front();
            block.push_back(v);
            covered[v] = 1;
            std::vector<Vertex> next;
            for (Vertex w : common)
                if (w != v && g.adjacent(v, w))
                    next.push_back(w);
            common.swap(next);
        }
        std::sort(block.begin(), block.end());
        out.blocks.push_back(std::move(block));
    }
    return out;
}

BetaTilde beta_tilde(const Graph& g, CoverMode mode, std::uint32_t cap)
{
    if (g.empty())
        throw input_error("beta_tilde of the empty graph is undefined");

    BetaTilde best;
    bool have = false;
    for (Vertex x = 0; x < g.order(); ++x) {
        const VertexSet nb = closed_neighborhood(g, x);
        const auto sub = induced_subgraph(g, nb);
        CliqueCover local = mode == CoverMode::exact ? exact_clique_cover(sub.graph, cap)
                                                     : greedy_clique_cover(sub.graph);
        const auto value = static_cast<std::uint32_t>(local.size());
        if (have && value >= best.value)
            continue;
        for (auto& block : local.blocks)
            for (auto& v : block)
                v = sub.to_host[v];
        best = {value, x, std::move(local)};
        have = true;
        if (value == 1)
            break;
    }
    return best;
}

DenseBetaTilde beta_tilde(const DenseGraph& g, CoverMode mode)
{
    if (g.n == 0)
        throw input_error("beta_tilde of the empty graph is undefined");

    DenseBetaTilde best;
    for (unsigned x = 0; x < g.n; ++x) {
        const Mask nb = g.rows[x] | bit(x);
        auto blocks = mode == CoverMode::exact ? min_clique_partition(g, nb) : greedy_clique_partition(g, nb);
        if (x > 0 && blocks.size() >= best.value)
            continue;
        best = {static_cast<unsigned>(blocks.size()), x, std::move(blocks)};
        if (best.value == 1)
            break;
    }
    return best;
}

} // namespace nbcc
