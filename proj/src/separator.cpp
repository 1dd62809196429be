#include "nbcc/separator.hpp"

#include "nbcc/clique_cover.hpp"
#include "nbcc/errors.hpp"
#include "nbcc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace nbcc {

IndependentSet max_independent_set(const Graph& g, const Caps& caps)
{
    const std::uint32_t limit = std::min(caps.mis, Caps::hard_mis);
    if (g.order() > limit)
        throw size_error("exact independent set limited to " + std::to_string(limit) + " vertices (got " +
                         std::to_string(g.order()) + ")");
    const DenseGraph& d = *g.dense();
    const Mask best = nbcc::max_independent_set(d, d.all());
    return {count(best), from_mask(best)};
}

std::uint32_t alpha_measure(const Graph& g, std::span<const Vertex> subset, const Caps& caps)
{
    if (subset.empty())
        return 0;
    return max_independent_set(induced_subgraph(g, subset).graph, caps).alpha;
}

std::string to_string(SeparatorStrategy s)
{
    switch (s) {
    case SeparatorStrategy::degree_peel:
        return "degree-peel";
    case SeparatorStrategy::neighborhood_peel:
        return "neighborhood-peel";
    case SeparatorStrategy::geometric_cut:
        return "geometric-cut";
    }
    return "degree-peel";
}

SeparatorStrategy parse_strategy(const std::string& name)
{
    if (name == "degree-peel")
        return SeparatorStrategy::degree_peel;
    if (name == "neighborhood-peel")
        return SeparatorStrategy::neighborhood_peel;
    if (name == "geometric-cut")
        return SeparatorStrategy::geometric_cut;
    throw input_error("unknown separator strategy '" + name + "'");
}

std::uint32_t SeparatorResult::max_component_alpha() const
{
    std::uint32_t m = 0;
    for (auto a : component_alphas)
        m = std::max(m, a);
    return m;
}

std::optional<double> SeparatorResult::exponent() const
{
    if (alpha_graph < 2 || alpha_separator == 0)
        return std::nullopt;
    return std::log(static_cast<double>(alpha_separator)) / std::log(static_cast<double>(alpha_graph));
}

namespace {

// Components of g - removed (host ids) with their alphas.
void account(const Graph& g, const std::vector<char>& removed, SeparatorResult& r, const Caps& caps)
{
    VertexSet kept;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!removed[v])
            kept.push_back(v);
    const auto rest = induced_subgraph(g, kept);
    r.components.clear();
    r.component_alphas.clear();
    for (auto comp : connected_components(rest.graph)) {
        for (auto& v : comp)
            v = rest.to_host[v];
        r.component_alphas.push_back(alpha_measure(g, comp, caps));
        r.components.push_back(std::move(comp));
    }
    r.separator.clear();
    for (Vertex v = 0; v < g.order(); ++v)
        if (removed[v])
            r.separator.push_back(v);
    r.alpha_separator = alpha_measure(g, r.separator, caps);
    r.qualified = std::all_of(r.component_alphas.begin(), r.component_alphas.end(),
                              [&](std::uint32_t a) { return 2 * a <= r.alpha_graph; });
}

} // namespace

SeparatorResult find_alpha_separator(const Graph& g, SeparatorStrategy strategy, const Caps& caps)
{
    if (strategy == SeparatorStrategy::geometric_cut)
        throw input_error("geometric-cut needs a scene; use geometric_cut_separator");
    SeparatorResult r;
    r.strategy = strategy;
    r.alpha_graph = max_independent_set(g, caps).alpha;
    std::vector<char> removed(g.order(), 0);
    account(g, removed, r, caps);
    while (!r.qualified) {
        std::size_t worst = 0;
        for (std::size_t i = 1; i < r.components.size(); ++i)
            if (r.component_alphas[i] > r.component_alphas[worst])
                worst = i;
        const VertexSet& comp = r.components[worst];
        const auto sub = induced_subgraph(g, comp);
        if (strategy == SeparatorStrategy::degree_peel) {
            Vertex pick = 0;
            for (Vertex v = 1; v < sub.graph.order(); ++v)
                if (sub.graph.degree(v) > sub.graph.degree(pick))
                    pick = v;
            removed[sub.to_host[pick]] = 1;
        } else {
            BetaTilde bt;
            try {
                bt = beta_tilde(sub.graph, CoverMode::exact, caps.exact_cover);
            } catch (const size_error&) {
                bt = beta_tilde(sub.graph, CoverMode::greedy);
            }
            for (Vertex v : closed_neighborhood(sub.graph, bt.witness))
                removed[sub.to_host[v]] = 1;
        }
        account(g, removed, r, caps);
    }
    return r;
}

SeparatorResult geometric_cut_separator(const FatScene& scene, unsigned axis, unsigned sweep_steps,
                                        const Caps& caps)
{
    if (axis >= scene.d)
        throw input_error("cut axis " + std::to_string(axis) + " out of range for d=" + std::to_string(scene.d));
    if (sweep_steps < 1)
        throw input_error("sweep needs at least one step");
    const Graph g = intersection_graph(scene);
    SeparatorResult best;
    best.strategy = SeparatorStrategy::geometric_cut;
    best.alpha_graph = max_independent_set(g, caps).alpha;
    if (g.order() <= 1) {
        // Nothing to separate.
        std::vector<char> removed(g.order(), 0);
        account(g, removed, best, caps);
        best.qualified = false;
        return best;
    }

    std::vector<double> sizes;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    std::vector<AxisBox> boxes;
    for (const auto& obj : scene.objects) {
        sizes.push_back(object_size(obj));
        boxes.push_back(bounds(obj));
        lo = std::min(lo, boxes.back().low[axis]);
        hi = std::max(hi, boxes.back().high[axis]);
    }
    std::sort(sizes.begin(), sizes.end());
    const double width = sizes[sizes.size() / 2];

    bool have = false;
    std::uint32_t best_side = 0;
    for (unsigned step = 0; step < sweep_steps; ++step) {
        const double cut = lo + (hi - lo) * (step + 0.5) / sweep_steps;
        AxisBox slab{Point(scene.d, -1e300), Point(scene.d, 1e300)};
        slab.low[axis] = cut - 0.5 * width;
        slab.high[axis] = cut + 0.5 * width;
        const FatObject slab_obj = slab;

        std::vector<char> removed(g.order(), 0);
        VertexSet left, right;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (intersects(scene.objects[v], slab_obj))
                removed[v] = 1;
            else if (boxes[v].high[axis] < cut)
                left.push_back(v);
            else
                right.push_back(v);
        }
        const std::uint32_t side = std::max(alpha_measure(g, left, caps), alpha_measure(g, right, caps));
        const bool ok = 2 * side <= best.alpha_graph;
        SeparatorResult r;
        r.strategy = SeparatorStrategy::geometric_cut;
        r.alpha_graph = best.alpha_graph;
        account(g, removed, r, caps);
        r.qualified = ok;
        const bool better = !have || (ok && !best.qualified) ||
                            (ok == best.qualified &&
                             (ok ? r.alpha_separator < best.alpha_separator
                                 : (side < best_side || (side == best_side && r.alpha_separator < best.alpha_separator))));
        if (better) {
            best = std::move(r);
            best_side = side;
            have = true;
        }
    }
    return best;
}

bool separator_bookkeeping_holds(const Graph& g, const SeparatorResult& r, const Caps& caps)
{
    std::vector<char> removed(g.order(), 0);
    for (Vertex v : r.separator)
        removed[v] = 1;
    SeparatorResult fresh;
    fresh.alpha_graph = max_independent_set(g, caps).alpha;
    account(g, removed, fresh, caps);
    if (fresh.alpha_graph != r.alpha_graph || fresh.alpha_separator != r.alpha_separator ||
        fresh.components != r.components || fresh.component_alphas != r.component_alphas)
        return false;
    return !r.qualified || fresh.qualified;
}

ConjectureReport conjecture_report(const std::vector<ReportInstance>& instances, std::uint32_t t,
                                   const std::vector<SeparatorStrategy>& strategies, const Caps& caps)
{
    ConjectureReport out;
    std::ostringstream csv;
    csv << conjecture_csv_header << '\n';
    for (const auto& inst : instances) {
        try {
            const auto alpha = max_independent_set(inst.graph, caps).alpha;
            if (alpha <= 1) {
                out.log.push_back("skip " + inst.id + ": alpha(G)=" + std::to_string(alpha) +
                                  " makes the balance condition degenerate");
                continue;
            }
            for (auto strategy : strategies) {
                const auto r = find_alpha_separator(inst.graph, strategy, caps);
                csv << inst.id << ',' << inst.family << ',' << inst.graph.order() << ',' << t << ','
                    << to_string(strategy) << ',' << r.alpha_graph << ',' << r.alpha_separator << ','
                    << r.max_component_alpha() << ',';
                if (auto e = r.exponent())
                    csv << std::setprecision(6) << std::fixed << *e << std::defaultfloat;
                csv << ',' << (r.qualified ? "true" : "false") << '\n';
            }
        } catch (const error& e) {
            out.log.push_back("error " + inst.id + ": " + e.what());
        }
    }
    out.csv = csv.str();
    return out;
}

} // namespace nbcc
