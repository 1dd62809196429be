#include "nbcc/families.hpp"

#include "nbcc/errors.hpp"
#include "nbcc/random.hpp"

#include <algorithm>
#include <array>

namespace nbcc {

Graph gen_named(const std::string& kind, std::uint32_t n, std::uint32_t b)
{
    std::vector<Edge> edges;
    if (kind == "complete") {
        if (n < 1)
            throw input_error("complete graph needs n >= 1");
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return Graph(n, edges);
    }
    if (kind == "cycle") {
        if (n < 3)
            throw input_error("cycle needs n >= 3");
        for (Vertex u = 0; u < n; ++u)
            edges.emplace_back(std::min(u, (u + 1) % n), std::max(u, (u + 1) % n));
        return Graph(n, edges);
    }
    if (kind == "path") {
        if (n < 1)
            throw input_error("path needs n >= 1");
        for (Vertex u = 0; u + 1 < n; ++u)
            edges.emplace_back(u, u + 1);
        return Graph(n, edges);
    }
    if (kind == "star") {
        if (n < 1)
            throw input_error("star needs at least one leaf");
        for (Vertex leaf = 1; leaf <= n; ++leaf)
            edges.emplace_back(0, leaf);
        return Graph(n + 1, edges);
    }
    if (kind == "grid") {
        if (n < 1 || b < 1)
            throw input_error("grid needs both sides >= 1");
        for (Vertex r = 0; r < n; ++r)
            for (Vertex c = 0; c < b; ++c) {
                const Vertex id = r * b + c;
                if (c + 1 < b)
                    edges.emplace_back(id, id + 1);
                if (r + 1 < n)
                    edges.emplace_back(id, id + b);
            }
        return Graph(n * b, edges);
    }
    if (kind == "empty") {
        if (n < 1)
            throw input_error("empty graph needs n >= 1");
        return Graph(n, edges);
    }
    throw input_error("unknown graph family '" + kind + "'");
}

Graph gen_erdos_renyi(std::uint32_t n, double p, std::uint64_t seed)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw input_error("edge probability must lie in [0, 1]");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.uniform() < p)
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph gen_chordal(std::uint32_t n, std::uint64_t seed, std::uint32_t attach_max)
{
    if (n < 1)
        throw input_error("chordal generator needs n >= 1");
    if (attach_max < 1)
        throw input_error("attach_max must be >= 1");
    SplitMix64 rng(seed);
    std::vector<std::vector<Vertex>> adj(n);
    std::vector<Edge> edges;
    for (Vertex i = 1; i < n; ++i) {
        const auto root = static_cast<Vertex>(rng.below(i));
        std::vector<Vertex> clique{root};
        for (Vertex w : adj[root]) {
            const bool joins = std::all_of(clique.begin(), clique.end(), [&](Vertex c) {
                return std::binary_search(adj[c].begin(), adj[c].end(), w);
            });
            if (joins)
                clique.push_back(w);
        }
        for (std::size_t k = clique.size(); k > 1; --k)
            std::swap(clique[k - 1], clique[rng.below(k)]);
        const auto limit = std::min<std::size_t>(attach_max, clique.size());
        const auto take = 1 + rng.below(limit);
        for (std::size_t k = 0; k < take; ++k) {
            const Vertex w = clique[k];
            edges.emplace_back(w, i);
            adj[w].insert(std::lower_bound(adj[w].begin(), adj[w].end(), i), i);
            adj[i].insert(std::lower_bound(adj[i].begin(), adj[i].end(), w), w);
        }
    }
    return Graph(n, edges);
}

Graph gen_interval(std::uint32_t n, std::uint64_t seed)
{
    if (n < 1)
        throw input_error("interval generator needs n >= 1");
    SplitMix64 rng(seed);
    std::vector<std::array<double, 2>> spans(n);
    for (auto& s : spans) {
        const double a = rng.uniform();
        const double b = rng.uniform();
        s = {std::min(a, b), std::max(a, b)};
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (std::max(spans[u][0], spans[v][0]) <= std::min(spans[u][1], spans[v][1]))
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

bool PosetInstance::less(Vertex a, Vertex b) const
{
    return std::binary_search(relation.begin(), relation.end(), Edge{a, b});
}

namespace {

Graph incomparability_of(std::uint32_t n, const std::vector<std::vector<char>>& less)
{
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (!less[a][b] && !less[b][a])
                edges.emplace_back(a, b);
    return Graph(n, edges);
}

} // namespace

PosetInstance make_poset(std::uint32_t n, std::vector<Edge> relation)
{
    std::vector<std::vector<char>> less(n, std::vector<char>(n, 0));
    for (const auto& [a, b] : relation) {
        if (a >= n || b >= n)
            throw input_error("poset pair (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
        if (a == b)
            throw input_error("poset relation is not irreflexive at " + std::to_string(a));
        less[a][b] = 1;
    }
    for (Vertex k = 0; k < n; ++k)
        for (Vertex i = 0; i < n; ++i)
            if (less[i][k])
                for (Vertex j = 0; j < n; ++j)
                    if (less[k][j])
                        less[i][j] = 1;
    PosetInstance out;
    out.n = n;
    for (Vertex a = 0; a < n; ++a) {
        if (less[a][a])
            throw input_error("poset relation has a cycle through " + std::to_string(a));
        for (Vertex b = 0; b < n; ++b)
            if (less[a][b])
                out.relation.emplace_back(a, b);
    }
    out.incomparability = incomparability_of(n, less);
    return out;
}

void validate_poset(const PosetInstance& poset)
{
    const auto n = poset.n;
    std::vector<std::vector<char>> less(n, std::vector<char>(n, 0));
    for (const auto& [a, b] : poset.relation) {
        if (a >= n || b >= n)
            throw input_error("poset pair out of range");
        if (a == b)
            throw input_error("poset relation is not irreflexive");
        less[a][b] = 1;
    }
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b) {
            if (less[a][b] && less[b][a])
                throw input_error("poset relation is not antisymmetric");
            if (!less[a][b])
                continue;
            for (Vertex c = 0; c < n; ++c)
                if (less[b][c] && !less[a][c])
                    throw input_error("poset relation is not transitive");
        }
    if (poset.incomparability.order() != n || poset.incomparability != incomparability_of(n, less))
        throw input_error("incomparability graph does not match the relation");
}

PosetInstance gen_poset_incomparability(std::uint32_t n, std::uint64_t seed, double edge_prob)
{
    if (n < 1)
        throw input_error("poset generator needs n >= 1");
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
        throw input_error("relation probability must lie in [0, 1]");
    SplitMix64 rng(seed);
    std::vector<Vertex> line(n);
    for (Vertex i = 0; i < n; ++i)
        line[i] = i;
    for (Vertex i = n - 1; i > 0; --i)
        std::swap(line[i], line[rng.below(i + 1)]);
    std::vector<Edge> relation;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (rng.uniform() < edge_prob)
                relation.emplace_back(line[i], line[j]);
    return make_poset(n, std::move(relation));
}

namespace {

std::vector<Vertex> cardinality_search(const Graph& g)
{
    const Vertex n = g.order();
    std::vector<std::size_t> weight(n, 0);
    std::vector<char> visited(n, 0);
    std::vector<Vertex> order;
    order.reserve(n);
    for (Vertex step = 0; step < n; ++step) {
        Vertex pick = n;
        for (Vertex v = 0; v < n; ++v)
            if (!visited[v] && (pick == n || weight[v] > weight[pick]))
                pick = v;
        visited[pick] = 1;
        order.push_back(pick);
        for (Vertex w : g.neighbors(pick))
            if (!visited[w])
                ++weight[w];
    }
    return order;
}

std::vector<Vertex> chordless_cycle_through(const Graph& g, Vertex v, Vertex a, Vertex b)
{
    // Shortest a-b path avoiding N[v] except a and b closes an induced cycle with v.
    std::vector<char> blocked(g.order(), 0);
    for (Vertex w : closed_neighborhood(g, v))
        blocked[w] = 1;
    blocked[a] = blocked[b] = 0;
    std::vector<Vertex> parent(g.order(), g.order());
    std::vector<Vertex> queue{a};
    parent[a] = a;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        for (Vertex w : g.neighbors(u))
            if (!blocked[w] && parent[w] == g.order()) {
                parent[w] = u;
                queue.push_back(w);
            }
    }
    if (parent[b] == g.order())
        return {};
    std::vector<Vertex> cycle{v};
    std::vector<Vertex> path;
    for (Vertex u = b; u != a; u = parent[u])
        path.push_back(u);
    path.push_back(a);
    cycle.insert(cycle.end(), path.rbegin(), path.rend());
    return cycle;
}

} // namespace

ChordalCheck is_chordal(const Graph& g)
{
    ChordalCheck out;
    const auto visit = cardinality_search(g);
    out.elimination_order.assign(visit.rbegin(), visit.rend());
    std::vector<std::size_t> position(g.order());
    for (std::size_t i = 0; i < out.elimination_order.size(); ++i)
        position[out.elimination_order[i]] = i;

    for (Vertex v : out.elimination_order) {
        std::vector<Vertex> later;
        for (Vertex w : g.neighbors(v))
            if (position[w] > position[v])
                later.push_back(w);
        for (std::size_t i = 0; i < later.size(); ++i)
            for (std::size_t j = i + 1; j < later.size(); ++j)
                if (!g.adjacent(later[i], later[j])) {
                    out.violating_vertex = v;
                    out.violation = std::pair{later[i], later[j]};
                    out.chordless_cycle = chordless_cycle_through(g, v, later[i], later[j]);
                    out.elimination_order.clear();
                    return out;
                }
    }
    out.chordal = true;
    return out;
}

bool is_chordal(const DenseGraph& g)
{
    // Same test on the bit matrix: every vertex's earlier-visited neighbours
    // must form a clique.
    Mask visited = 0;
    std::vector<unsigned> weight(g.n, 0);
    for (unsigned step = 0; step < g.n; ++step) {
        unsigned pick = g.n;
        for (Mask m = g.all() & ~visited; m; m &= m - 1) {
            const unsigned v = lowest(m);
            if (pick == g.n || weight[v] > weight[pick])
                pick = v;
        }
        const Mask earlier = g.rows[pick] & visited;
        for (Mask m = earlier; m; m &= m - 1)
            if ((earlier & ~bit(lowest(m))) & ~g.rows[lowest(m)])
                return false;
        visited |= bit(pick);
        for (Mask m = g.rows[pick] & ~visited; m; m &= m - 1)
            ++weight[lowest(m)];
    }
    return true;
}

CliqueCover mirsky_clique_cover(const PosetInstance& poset)
{
    validate_poset(poset);
    const auto n = poset.n;
    std::vector<std::size_t> below(n, 0); // remaining predecessors
    std::vector<std::vector<Vertex>> above(n);
    for (const auto& [a, b] : poset.relation) {
        ++below[b];
        above[a].push_back(b);
    }
    CliqueCover out;
    std::vector<char> placed(n, 0);
    std::size_t remaining = n;
    while (remaining > 0) {
        VertexSet layer;
        for (Vertex v = 0; v < n; ++v)
            if (!placed[v] && below[v] == 0)
                layer.push_back(v);
        for (Vertex v : layer) {
            placed[v] = 1;
            for (Vertex w : above[v])
                --below[w];
        }
        remaining -= layer.size();
        out.blocks.push_back(std::move(layer));
    }
    return out;
}

bool is_random_family(const std::string& family)
{
    return family == "er" || family == "chordal" || family == "interval" || family == "poset";
}

bool is_known_family(const std::string& family)
{
    static const std::array<const char*, 10> names{"complete", "cycle", "path", "star", "grid",
                                                   "empty", "er", "chordal", "interval", "poset"};
    return std::find(names.begin(), names.end(), family) != names.end();
}

Graph generate(const FamilyParams& params)
{
    if (params.family == "er")
        return gen_erdos_renyi(params.n, params.p, params.seed);
    if (params.family == "chordal")
        return gen_chordal(params.n, params.seed, params.attach_max);
    if (params.family == "interval")
        return gen_interval(params.n, params.seed);
    if (params.family == "poset")
        return gen_poset_incomparability(params.n, params.seed, params.p).incomparability;
    return gen_named(params.family, params.n, params.b);
}

} // namespace nbcc
