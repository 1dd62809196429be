#include "nbcc/graph.hpp"

#include "nbcc/errors.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace nbcc {

Graph::Graph(Vertex n, std::span<const Edge> edges) : n_(n), adj_(n)
{
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw input_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
        if (u == v)
            throw input_error("self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        edge_count_ += list.size();
    }
    edge_count_ /= 2;

    if (n <= 64) {
        DenseGraph d(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v : adj_[u])
                d.rows[u] |= bit(v);
        dense_ = std::move(d);
    } else {
        dense_.reset();
    }
}

Graph Graph::with_labels(std::vector<std::string> labels) const
{
    if (!labels.empty() && labels.size() != n_)
        throw input_error("label count " + std::to_string(labels.size()) + " does not match n=" +
                          std::to_string(n_));
    Graph copy = *this;
    copy.labels_ = std::move(labels);
    return copy;
}

std::size_t Graph::min_degree() const noexcept
{
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& list : adj_)
        best = std::min(best, list.size());
    return n_ == 0 ? 0 : best;
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    if (u >= n_ || v >= n_)
        return false;
    if (dense_)
        return dense_->adjacent(u, v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

void validate_vertex_set(const Graph& g, std::span<const Vertex> s)
{
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= g.order())
            throw input_error("vertex " + std::to_string(s[i]) + " out of range (n=" +
                              std::to_string(g.order()) + ")");
        if (i > 0 && s[i - 1] >= s[i])
            throw input_error("vertex set is not sorted and duplicate-free");
    }
}

VertexSet closed_neighborhood(const Graph& g, Vertex v)
{
    if (v >= g.order())
        throw input_error("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(g.order()) + ")");
    VertexSet out(g.neighbors(v).begin(), g.neighbors(v).end());
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s)
{
    validate_vertex_set(g, s);
    InducedSubgraph out;
    out.to_host.assign(s.begin(), s.end());
    out.from_host.assign(g.order(), std::nullopt);
    for (Vertex i = 0; i < s.size(); ++i)
        out.from_host[s[i]] = i;

    std::vector<Edge> edges;
    for (Vertex i = 0; i < s.size(); ++i)
        for (Vertex w : g.neighbors(s[i]))
            if (auto j = out.from_host[w]; j && i < *j)
                edges.emplace_back(i, *j);
    out.graph = Graph(static_cast<Vertex>(s.size()), edges);

    if (!g.labels().empty()) {
        std::vector<std::string> labels;
        labels.reserve(s.size());
        for (Vertex v : s)
            labels.push_back(g.labels()[v]);
        out.graph = out.graph.with_labels(std::move(labels));
    }
    return out;
}

Graph complement(const Graph& g)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u) {
        auto nb = g.neighbors(u);
        auto it = nb.begin();
        for (Vertex v = u + 1; v < g.order(); ++v) {
            while (it != nb.end() && *it < v)
                ++it;
            if (it == nb.end() || *it != v)
                edges.emplace_back(u, v);
        }
    }
    return Graph(g.order(), edges).with_labels(g.labels());
}

namespace {

// Eccentricities inside the induced subgraph; nullopt if it is disconnected.
std::optional<std::vector<std::uint32_t>> eccentricities(const Graph& g, std::span<const Vertex> s)
{
    if (s.empty())
        throw input_error("radius of an empty vertex set is undefined");
    validate_vertex_set(g, s);

    std::vector<char> inside(g.order(), 0);
    for (Vertex v : s)
        inside[v] = 1;

    std::vector<std::uint32_t> ecc;
    ecc.reserve(s.size());
    std::vector<std::uint32_t> dist(g.order());
    std::deque<Vertex> queue;
    constexpr auto unseen = std::numeric_limits<std::uint32_t>::max();
    for (Vertex root : s) {
        std::fill(dist.begin(), dist.end(), unseen);
        dist[root] = 0;
        queue.assign(1, root);
        std::size_t reached = 1;
        std::uint32_t far = 0;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u)) {
                if (!inside[w] || dist[w] != unseen)
                    continue;
                dist[w] = dist[u] + 1;
                far = std::max(far, dist[w]);
                ++reached;
                queue.push_back(w);
            }
        }
        if (reached != s.size())
            return std::nullopt;
        ecc.push_back(far);
    }
    return ecc;
}

} // namespace

std::optional<std::uint32_t> radius_within(const Graph& g, std::span<const Vertex> s)
{
    auto ecc = eccentricities(g, s);
    if (!ecc)
        return std::nullopt;
    return *std::min_element(ecc->begin(), ecc->end());
}

std::optional<std::uint32_t> diameter_within(const Graph& g, std::span<const Vertex> s)
{
    auto ecc = eccentricities(g, s);
    if (!ecc)
        return std::nullopt;
    return *std::max_element(ecc->begin(), ecc->end());
}

Degeneracy degeneracy(const Graph& g)
{
    const Vertex n = g.order();
    std::vector<std::size_t> deg(n);
    std::vector<char> removed(n, 0);
    for (Vertex v = 0; v < n; ++v)
        deg[v] = g.degree(v);

    Degeneracy out;
    out.order.reserve(n);
    // Quadratic selection keeps the lowest-id tie rule trivial; graphs here are small.
    for (Vertex step = 0; step < n; ++step) {
        Vertex pick = n;
        for (Vertex v = 0; v < n; ++v)
            if (!removed[v] && (pick == n || deg[v] < deg[pick]))
                pick = v;
        out.value = std::max<std::uint32_t>(out.value, static_cast<std::uint32_t>(deg[pick]));
        out.order.push_back(pick);
        removed[pick] = 1;
        for (Vertex w : g.neighbors(pick))
            if (!removed[w])
                --deg[w];
    }
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<VertexSet> out;
    std::vector<char> seen(g.order(), 0);
    for (Vertex root = 0; root < g.order(); ++root) {
        if (seen[root])
            continue;
        VertexSet comp{root};
        seen[root] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (Vertex w : g.neighbors(comp[head]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

Graph graph_from_dense(const DenseGraph& d)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < d.n; ++u)
        for (Mask m = d.rows[u] & ~prefix(u + 1); m; m &= m - 1)
            edges.emplace_back(u, lowest(m));
    return Graph(d.n, edges);
}

Mask to_mask(std::span<const Vertex> s)
{
    Mask m = 0;
    for (Vertex v : s)
        m |= bit(v);
    return m;
}

VertexSet from_mask(Mask m)
{
    VertexSet out;
    out.reserve(count(m));
    for (; m; m &= m - 1)
        out.push_back(lowest(m));
    return out;
}

} // namespace nbcc
