#include "nbcc/shallow_minor.hpp"

#include "nbcc/errors.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace nbcc {

std::vector<std::string> validate_model(const Graph& host, const MinorModel& model)
{
    std::vector<std::string> problems;
    std::vector<int> owner(host.order(), -1);
    for (std::size_t i = 0; i < model.branch_sets.size(); ++i) {
        const auto& set = model.branch_sets[i];
        const std::string name = "branch set " + std::to_string(i);
        if (set.empty()) {
            problems.push_back(name + " is empty");
            continue;
        }
        bool in_range = true;
        for (std::size_t k = 0; k < set.size(); ++k) {
            if (set[k] >= host.order()) {
                problems.push_back(name + " names vertex " + std::to_string(set[k]) + " outside the host");
                in_range = false;
            } else if (k > 0 && set[k - 1] >= set[k]) {
                problems.push_back(name + " is not sorted and duplicate-free");
                in_range = false;
            }
        }
        if (!in_range)
            continue;
        for (Vertex v : set) {
            if (owner[v] >= 0)
                problems.push_back(name + " shares vertex " + std::to_string(v) + " with branch set " +
                                   std::to_string(owner[v]));
            else
                owner[v] = static_cast<int>(i);
        }
        const auto radius = radius_within(host, set);
        if (!radius)
            problems.push_back(name + " is disconnected");
        else if (*radius > model.t)
            problems.push_back(name + " has radius " + std::to_string(*radius) + " > t=" + std::to_string(model.t));
    }
    return problems;
}

namespace {

std::string describe(const VertexSet& set)
{
    std::string s = "{";
    for (std::size_t i = 0; i < set.size(); ++i)
        s += (i ? "," : "") + std::to_string(set[i]);
    return s + "}";
}

} // namespace

Graph quotient(const Graph& host, const MinorModel& model)
{
    if (auto problems = validate_model(host, model); !problems.empty())
        throw model_error("invalid minor model: " + problems.front());

    const auto k = static_cast<Vertex>(model.branch_sets.size());
    std::vector<int> owner(host.order(), -1);
    for (Vertex i = 0; i < k; ++i)
        for (Vertex v : model.branch_sets[i])
            owner[v] = static_cast<int>(i);

    std::vector<Edge> edges;
    for (const auto& [u, v] : host.edges()) {
        const int a = owner[u];
        const int b = owner[v];
        if (a >= 0 && b >= 0 && a != b)
            edges.emplace_back(static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b)));
    }
    std::vector<std::string> labels;
    for (const auto& set : model.branch_sets)
        labels.push_back(describe(set));
    return Graph(k, edges).with_labels(std::move(labels));
}

DenseGraph quotient_dense(const DenseGraph& host, std::span<const Mask> branch_sets)
{
    const auto k = static_cast<unsigned>(branch_sets.size());
    DenseGraph out(k);
    std::array<Mask, 64> reach{};
    for (unsigned i = 0; i < k; ++i)
        for (Mask m = branch_sets[i]; m; m &= m - 1)
            reach[i] |= host.rows[lowest(m)];
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = i + 1; j < k; ++j)
            if (reach[i] & branch_sets[j])
                out.add_edge(i, j);
    return out;
}

MinorModel model_from_masks(std::uint32_t t, std::span<const Mask> branch_sets)
{
    MinorModel model{t, {}};
    model.branch_sets.reserve(branch_sets.size());
    for (Mask m : branch_sets)
        model.branch_sets.push_back(from_mask(m));
    return model;
}

namespace {

constexpr unsigned disconnected = 0xFF;

unsigned mask_radius(const DenseGraph& g, Mask set)
{
    unsigned best = disconnected;
    for (Mask roots = set; roots; roots &= roots - 1) {
        Mask seen = bit(lowest(roots));
        Mask frontier = seen;
        unsigned depth = 0;
        while (seen != set) {
            Mask next = 0;
            for (Mask f = frontier; f; f &= f - 1)
                next |= g.rows[lowest(f)];
            next &= set & ~seen;
            if (!next)
                return disconnected;
            seen |= next;
            frontier = next;
            ++depth;
        }
        best = std::min(best, depth);
    }
    return best;
}

class ModelWalk {
public:
    ModelWalk(const DenseGraph& g, std::uint32_t t, const ModelVisitor& visit) : visit_(visit), by_min_(g.n)
    {
        // Candidate branch sets grouped by their minimum vertex, in increasing mask order.
        for (Mask set = 1; set <= g.all(); ++set)
            if (mask_radius(g, set) <= t)
                by_min_[lowest(set)].push_back(set);
    }

    void run(Mask universe)
    {
        family_.clear();
        walk(universe);
    }

private:
    void walk(Mask undecided)
    {
        if (!undecided) {
            if (!family_.empty())
                visit_(family_);
            return;
        }
        const unsigned v = lowest(undecided);
        for (Mask set : by_min_[v]) {
            if (set & ~undecided)
                continue;
            family_.push_back(set);
            walk(undecided & ~set);
            family_.pop_back();
        }
        walk(undecided & ~bit(v)); // v deleted
    }

    const ModelVisitor& visit_;
    std::vector<std::vector<Mask>> by_min_;
    std::vector<Mask> family_;
};

void require_enumerable(const Graph& g, std::uint32_t t, const Caps& caps)
{
    const std::uint32_t limit = std::min(caps.enum_vertices, Caps::hard_enum_vertices);
    if (g.order() > limit)
        throw size_error("minor enumeration limited to " + std::to_string(limit) + " vertices (got " +
                         std::to_string(g.order()) + "); hard cap is " +
                         std::to_string(Caps::hard_enum_vertices));
    if (t > caps.max_t)
        throw size_error("minor enumeration limited to t <= " + std::to_string(caps.max_t) + " (got t=" +
                         std::to_string(t) + ")");
    if (g.empty())
        throw input_error("graph has no vertices, so it has no minors");
}

} // namespace

void for_each_minor_model(const Graph& g, std::uint32_t t, const Caps& caps, const ModelVisitor& visit)
{
    require_enumerable(g, t, caps);
    const DenseGraph& d = *g.dense();
    ModelWalk(d, t, visit).run(d.all());
}

std::vector<MinorModel> enumerate_minor_models(const Graph& g, std::uint32_t t, const Caps& caps)
{
    std::vector<MinorModel> out;
    for_each_minor_model(g, t, caps, [&](std::span<const Mask> sets) { out.push_back(model_from_masks(t, sets)); });
    return out;
}

namespace {

constexpr std::uint64_t labelled_tag = std::uint64_t{1} << 63;
constexpr unsigned canonical_limit = 8;
constexpr std::uint64_t permutation_budget = 5040;

std::uint64_t adjacency_string(const DenseGraph& g, std::span<const unsigned> order)
{
    std::uint64_t key = 0;
    const auto n = static_cast<unsigned>(order.size());
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            key = (key << 1) | (g.adjacent(order[i], order[j]) ? 1U : 0U);
    return key | (std::uint64_t{n} << 56);
}

// Colour refinement starting from degrees; ranks are assigned in sorted
// signature order, so they do not depend on the labelling.
std::vector<unsigned> refined_colours(const DenseGraph& g)
{
    std::vector<unsigned> colour(g.n);
    for (unsigned v = 0; v < g.n; ++v)
        colour[v] = count(g.rows[v]);
    for (unsigned round = 0; round < g.n; ++round) {
        std::vector<std::vector<unsigned>> sig(g.n);
        for (unsigned v = 0; v < g.n; ++v) {
            sig[v].push_back(colour[v]);
            std::vector<unsigned> around;
            for (Mask m = g.rows[v]; m; m &= m - 1)
                around.push_back(colour[lowest(m)]);
            std::sort(around.begin(), around.end());
            sig[v].insert(sig[v].end(), around.begin(), around.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<unsigned> next(g.n);
        for (unsigned v = 0; v < g.n; ++v)
            next[v] = static_cast<unsigned>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        const auto classes = [](const std::vector<unsigned>& c) {
            auto s = c;
            std::sort(s.begin(), s.end());
            return std::unique(s.begin(), s.end()) - s.begin();
        };
        const bool stable = classes(next) == classes(colour);
        colour = std::move(next);
        if (stable)
            break;
    }
    return colour;
}

} // namespace

std::optional<std::uint64_t> canonical_key(const DenseGraph& g)
{
    if (g.n > canonical_limit)
        return std::nullopt;
    std::vector<unsigned> identity(g.n);
    for (unsigned v = 0; v < g.n; ++v)
        identity[v] = v;

    const auto colour = refined_colours(g);
    std::vector<std::vector<unsigned>> cells;
    {
        const unsigned classes = colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
        cells.resize(classes);
        for (unsigned v = 0; v < g.n; ++v)
            cells[colour[v]].push_back(v);
    }
    std::uint64_t work = 1;
    for (const auto& cell : cells)
        for (std::uint64_t k = 2; k <= cell.size(); ++k)
            work *= k;
    if (work > permutation_budget)
        return adjacency_string(g, identity) | labelled_tag;

    std::vector<unsigned> order;
    std::uint64_t best = ~std::uint64_t{0};
    // Odometer over the permutations of each cell.
    const std::function<void(std::size_t)> permute = [&](std::size_t c) {
        if (c == cells.size()) {
            order.clear();
            for (const auto& cell : cells)
                order.insert(order.end(), cell.begin(), cell.end());
            best = std::min(best, adjacency_string(g, order));
            return;
        }
        auto& cell = cells[c];
        std::sort(cell.begin(), cell.end());
        do
            permute(c + 1);
        while (std::next_permutation(cell.begin(), cell.end()));
    };
    permute(0);
    return best;
}

namespace {

struct Wants {
    bool grad = false;
    bool grad_hat = false;
    bool beta_hat = false;
    bool clique = false;
    bool star = false;
};

MinorProfile scan(const Graph& g, std::uint32_t t, CoverMode mode, const Caps& caps, Wants wants)
{
    MinorProfile out;
    bool have_grad = false;
    bool have_grad_hat = false;
    bool have_beta = false;
    bool have_clique = false;
    bool have_star = false;
    std::unordered_set<std::uint64_t> seen;
    std::size_t unkeyed = 0;

    const DenseGraph* host = nullptr;
    for_each_minor_model(g, t, caps, [&](std::span<const Mask> sets) {
        host = host ? host : g.dense();
        ++out.models;
        const DenseGraph h = quotient_dense(*host, sets);
        const unsigned n = h.n;
        const unsigned m = h.edge_count();

        if (wants.grad) {
            const Rational density(m, n);
            if (!have_grad || density > out.grad.value) {
                out.grad = {density, model_from_masks(t, sets)};
                have_grad = true;
            }
        }
        if (wants.grad_hat) {
            const unsigned delta = h.min_degree();
            if (!have_grad_hat || delta > out.grad_hat.value) {
                out.grad_hat = {delta, model_from_masks(t, sets)};
                have_grad_hat = true;
            }
        }
        if (wants.clique && m == n * (n - 1) / 2 && (!have_clique || n > out.clique.value)) {
            out.clique = {n, model_from_masks(t, sets)};
            have_clique = true;
        }
        if (wants.star && n >= 2 && m == n - 1 && (!have_star || n - 1 > out.star.value)) {
            bool centred = false;
            for (unsigned v = 0; v < n && !centred; ++v)
                centred = count(h.rows[v]) == n - 1;
            if (centred) {
                out.star = {n - 1, model_from_masks(t, sets)};
                have_star = true;
            }
        }
        if (wants.beta_hat) {
            if (const auto key = canonical_key(h); !key)
                ++unkeyed;
            else if (!seen.insert(*key).second)
                return;
            const auto bt = beta_tilde(h, mode);
            if (!have_beta || bt.value > out.beta_hat.value) {
                out.beta_hat = {bt.value, model_from_masks(t, sets), bt.witness, cover_from_masks(bt.cover)};
                have_beta = true;
            }
        }
    });
    out.distinct_quotients = seen.size() + unkeyed;
    if (wants.star && !have_star)
        out.star = {0, MinorModel{t, {}}};
    return out;
}

} // namespace

GradResult grad(const Graph& g, std::uint32_t t, const Caps& caps)
{
    return scan(g, t, CoverMode::exact, caps, {.grad = true}).grad;
}

GradHatResult grad_hat(const Graph& g, std::uint32_t t, const Caps& caps)
{
    return scan(g, t, CoverMode::exact, caps, {.grad_hat = true}).grad_hat;
}

BetaHatResult beta_hat(const Graph& g, std::uint32_t t, CoverMode mode, const Caps& caps)
{
    return scan(g, t, mode, caps, {.beta_hat = true}).beta_hat;
}

MinorSizeResult largest_clique_minor(const Graph& g, std::uint32_t t, const Caps& caps)
{
    return scan(g, t, CoverMode::exact, caps, {.clique = true}).clique;
}

MinorSizeResult largest_star_minor(const Graph& g, std::uint32_t t, const Caps& caps)
{
    return scan(g, t, CoverMode::exact, caps, {.star = true}).star;
}

MinorProfile minor_profile(const Graph& g, std::uint32_t t, CoverMode mode, const Caps& caps)
{
    return scan(g, t, mode, caps, {true, true, true, true, true});
}

} // namespace nbcc
