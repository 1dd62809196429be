#include "nbcc/dense.hpp"

#include <algorithm>
#include <numeric>

namespace nbcc {

unsigned DenseGraph::edge_count() const noexcept
{
    unsigned twice = 0;
    for (Mask r : rows)
        twice += count(r);
    return twice / 2;
}

unsigned DenseGraph::min_degree() const noexcept
{
    unsigned best = n;
    for (Mask r : rows)
        best = std::min(best, count(r));
    return n == 0 ? 0 : best;
}

DenseGraph DenseGraph::complement(Mask subset) const
{
    DenseGraph out(n);
    for (Mask m = subset & all(); m; m &= m - 1) {
        const unsigned v = lowest(m);
        out.rows[v] = subset & ~rows[v] & ~bit(v);
    }
    return out;
}

std::vector<Mask> greedy_clique_partition(const DenseGraph& g, Mask subset)
{
    std::vector<Mask> blocks;
    Mask uncovered = subset;
    while (uncovered) {
        const unsigned seed = lowest(uncovered);
        Mask block = bit(seed);
        Mask common = g.rows[seed] & uncovered;
        while (common) {
            const unsigned v = lowest(common);
            block |= bit(v);
            common &= g.rows[v];
        }
        uncovered &= ~block;
        blocks.push_back(block);
    }
    return blocks;
}

namespace {

unsigned greedy_partition_size(const DenseGraph& g, Mask subset)
{
    unsigned blocks = 0;
    while (subset) {
        Mask common = g.rows[lowest(subset)] & subset;
        subset &= ~bit(lowest(subset));
        while (common) {
            const unsigned v = lowest(common);
            subset &= ~bit(v);
            common &= g.rows[v];
        }
        ++blocks;
    }
    return blocks;
}

class IndependentSetSearch {
public:
    explicit IndependentSetSearch(const DenseGraph& g) : g_(g) {}

    Mask run(Mask subset)
    {
        search(subset, 0);
        return best_;
    }

private:
    void search(Mask cand, Mask chosen)
    {
        // Isolated and pendant vertices of the residual graph are always safe to take.
        for (bool changed = true; changed && cand;) {
            changed = false;
            for (Mask m = cand; m; m &= m - 1) {
                const unsigned v = lowest(m);
                if (!(cand & bit(v)))
                    continue;
                const Mask nb = g_.rows[v] & cand;
                if (count(nb) <= 1) {
                    chosen |= bit(v);
                    cand &= ~(nb | bit(v));
                    changed = true;
                }
            }
        }
        if (!cand) {
            if (count(chosen) > count(best_))
                best_ = chosen;
            return;
        }
        if (count(chosen) + greedy_partition_size(g_, cand) <= count(best_))
            return;

        unsigned pick = lowest(cand);
        unsigned pick_deg = 0;
        for (Mask m = cand; m; m &= m - 1) {
            const unsigned v = lowest(m);
            const unsigned d = count(g_.rows[v] & cand);
            if (d > pick_deg) {
                pick = v;
                pick_deg = d;
            }
        }
        search(cand & ~g_.rows[pick] & ~bit(pick), chosen | bit(pick));
        search(cand & ~bit(pick), chosen);
    }

    const DenseGraph& g_;
    Mask best_ = 0;
};

class ColoringSearch {
public:
    ColoringSearch(const DenseGraph& g, std::vector<unsigned> order, unsigned lower, std::vector<Mask> incumbent)
        : g_(g), order_(std::move(order)), lower_(lower), best_(std::move(incumbent))
    {
    }

    std::vector<Mask> run(unsigned precolored)
    {
        std::vector<Mask> blocks;
        for (unsigned i = 0; i < precolored; ++i)
            blocks.push_back(bit(order_[i]));
        if (best_.size() > lower_)
            assign(precolored, blocks);
        return best_;
    }

private:
    // Vertex order_[idx] joins an existing block whose members are all its
    // neighbours, or opens exactly one new block.
    void assign(std::size_t idx, std::vector<Mask>& blocks)
    {
        if (done_ || blocks.size() >= best_.size())
            return;
        if (idx == order_.size()) {
            best_ = blocks;
            done_ = best_.size() <= lower_;
            return;
        }
        const unsigned v = order_[idx];
        // Indexed access: deeper levels may grow `blocks` and reallocate it.
        const std::size_t open = blocks.size();
        for (std::size_t b = 0; b < open; ++b) {
            if (blocks[b] & ~g_.rows[v])
                continue;
            blocks[b] |= bit(v);
            assign(idx + 1, blocks);
            blocks[b] &= ~bit(v);
            if (done_)
                return;
        }
        if (blocks.size() + 1 < best_.size()) {
            blocks.push_back(bit(v));
            assign(idx + 1, blocks);
            blocks.pop_back();
        }
    }

    const DenseGraph& g_;
    std::vector<unsigned> order_;
    unsigned lower_;
    std::vector<Mask> best_;
    bool done_ = false;
};

} // namespace

Mask max_independent_set(const DenseGraph& g, Mask subset)
{
    return IndependentSetSearch(g).run(subset & g.all());
}

std::vector<Mask> min_clique_partition(const DenseGraph& g, Mask subset)
{
    subset &= g.all();
    auto greedy = greedy_clique_partition(g, subset);
    const Mask independent = max_independent_set(g, subset);
    const unsigned lower = count(independent);
    if (greedy.size() <= lower)
        return greedy;

    // Members of a maximum independent set need pairwise distinct blocks, so
    // they are placed first, one block each.
    std::vector<unsigned> order;
    for (Mask m = independent; m; m &= m - 1)
        order.push_back(lowest(m));
    std::vector<unsigned> rest;
    for (Mask m = subset & ~independent; m; m &= m - 1)
        rest.push_back(lowest(m));
    std::stable_sort(rest.begin(), rest.end(), [&](unsigned a, unsigned b) {
        return count(subset & ~g.rows[a]) > count(subset & ~g.rows[b]);
    });
    order.insert(order.end(), rest.begin(), rest.end());

    auto blocks = ColoringSearch(g, std::move(order), lower, std::move(greedy)).run(lower);
    std::sort(blocks.begin(), blocks.end(), [](Mask a, Mask b) { return lowest(a) < lowest(b); });
    return blocks;
}

} // namespace nbcc
