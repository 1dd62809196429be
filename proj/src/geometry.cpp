#include "nbcc/geometry.hpp"

#include "nbcc/errors.hpp"
#include "nbcc/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <type_traits>
#include <unordered_map>

namespace nbcc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double squared_distance(const Point& a, const Point& b)
{
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k)
        s += (a[k] - b[k]) * (a[k] - b[k]);
    return s;
}

Point clamp_to(const AxisBox& box, const Point& p)
{
    Point q(p.size());
    for (std::size_t k = 0; k < p.size(); ++k)
        q[k] = std::clamp(p[k], box.low[k], box.high[k]);
    return q;
}

bool hit(const Ball& a, const Ball& b)
{
    const double reach = a.radius + b.radius;
    return squared_distance(a.center, b.center) <= reach * reach;
}

bool hit(const AxisBox& a, const AxisBox& b)
{
    for (std::size_t k = 0; k < a.low.size(); ++k)
        if (std::max(a.low[k], b.low[k]) > std::min(a.high[k], b.high[k]))
            return false;
    return true;
}

bool hit(const Ball& a, const AxisBox& b)
{
    return squared_distance(a.center, clamp_to(b, a.center)) <= a.radius * a.radius;
}

bool hit(const AxisBox& a, const Ball& b) { return hit(b, a); }

template <class F>
void for_each_primitive(const FatObject& obj, F&& f)
{
    std::visit(overloaded{
                   [&](const UnionGroup& g) {
                       for (const auto& m : g.members)
                           std::visit(f, m);
                   },
                   [&](const auto& single) { f(single); },
               },
               obj);
}

bool primitive_contains(const Ball& b, const Point& p, double eps)
{
    const double r = b.radius + eps;
    return squared_distance(b.center, p) <= r * r;
}

bool primitive_contains(const AxisBox& b, const Point& p, double eps)
{
    for (std::size_t k = 0; k < p.size(); ++k)
        if (p[k] < b.low[k] - eps || p[k] > b.high[k] + eps)
            return false;
    return true;
}

Point centre_of(const Ball& b) { return b.center; }

Point centre_of(const AxisBox& b)
{
    Point c(b.low.size());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = 0.5 * (b.low[k] + b.high[k]);
    return c;
}

void check_primitive(const Primitive& p, unsigned d)
{
    std::visit(overloaded{
                   [&](const Ball& b) {
                       if (b.center.size() != d)
                           throw input_error("ball dimension " + std::to_string(b.center.size()) +
                                             " does not match d=" + std::to_string(d));
                       if (!(b.radius > 0.0))
                           throw input_error("ball radius must be positive");
                   },
                   [&](const AxisBox& b) {
                       if (b.low.size() != d || b.high.size() != d)
                           throw input_error("box dimension does not match d=" + std::to_string(d));
                       for (unsigned k = 0; k < d; ++k)
                           if (!(b.low[k] < b.high[k]))
                               throw input_error("box corners must satisfy low < high on every axis");
                   },
               },
               p);
}

} // namespace

unsigned dimension(const FatObject& obj)
{
    return std::visit(overloaded{
                          [](const Ball& b) { return static_cast<unsigned>(b.center.size()); },
                          [](const AxisBox& b) { return static_cast<unsigned>(b.low.size()); },
                          [](const UnionGroup& g) {
                              if (g.members.empty())
                                  return 0U;
                              return std::visit(overloaded{
                                                    [](const Ball& b) { return static_cast<unsigned>(b.center.size()); },
                                                    [](const AxisBox& b) { return static_cast<unsigned>(b.low.size()); },
                                                },
                                                g.members.front());
                          },
                      },
                      obj);
}

void validate_object(const FatObject& obj, unsigned d)
{
    std::visit(overloaded{
                   [&](const UnionGroup& g) {
                       if (g.members.empty())
                           throw input_error("union group has no members");
                       for (const auto& m : g.members)
                           check_primitive(m, d);
                   },
                   [&](const Ball& b) { check_primitive(b, d); },
                   [&](const AxisBox& b) { check_primitive(b, d); },
               },
               obj);
}

void validate_scene(const FatScene& scene)
{
    if (scene.d < 1)
        throw input_error("scene dimension must be >= 1");
    for (const auto& obj : scene.objects)
        validate_object(obj, scene.d);
}

AxisBox bounds(const FatObject& obj)
{
    const unsigned d = dimension(obj);
    AxisBox out{Point(d, std::numeric_limits<double>::infinity()), Point(d, -std::numeric_limits<double>::infinity())};
    for_each_primitive(obj, overloaded{
                                [&](const Ball& b) {
                                    for (unsigned k = 0; k < d; ++k) {
                                        out.low[k] = std::min(out.low[k], b.center[k] - b.radius);
                                        out.high[k] = std::max(out.high[k], b.center[k] + b.radius);
                                    }
                                },
                                [&](const AxisBox& b) {
                                    for (unsigned k = 0; k < d; ++k) {
                                        out.low[k] = std::min(out.low[k], b.low[k]);
                                        out.high[k] = std::max(out.high[k], b.high[k]);
                                    }
                                },
                            });
    return out;
}

double object_size(const FatObject& obj)
{
    if (const auto* b = std::get_if<Ball>(&obj))
        return 2.0 * b->radius;
    const AxisBox box = bounds(obj);
    double side = 0.0;
    for (std::size_t k = 0; k < box.low.size(); ++k)
        side = std::max(side, box.high[k] - box.low[k]);
    return side;
}

bool intersects(const FatObject& a, const FatObject& b)
{
    if (dimension(a) != dimension(b))
        throw input_error("cannot intersect objects of dimension " + std::to_string(dimension(a)) + " and " +
                          std::to_string(dimension(b)));
    bool found = false;
    for_each_primitive(a, [&](const auto& x) {
        if (found)
            return;
        for_each_primitive(b, [&](const auto& y) { found = found || hit(x, y); });
    });
    return found;
}

bool contains(const FatObject& obj, const Point& p, double eps)
{
    bool inside = false;
    for_each_primitive(obj, [&](const auto& x) { inside = inside || primitive_contains(x, p, eps); });
    return inside;
}

Graph intersection_graph(const FatScene& scene)
{
    validate_scene(scene);
    const auto n = static_cast<Vertex>(scene.objects.size());
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (intersects(scene.objects[i], scene.objects[j]))
                edges.emplace_back(i, j);
    std::vector<std::string> labels;
    for (Vertex i = 0; i < n; ++i)
        labels.push_back("obj" + std::to_string(i));
    return Graph(n, edges).with_labels(std::move(labels));
}

FatScene cluster_union(const FatScene& scene, const std::vector<VertexSet>& subsets, std::uint32_t t,
                       ClusterBound bound)
{
    const Graph g = intersection_graph(scene);
    std::vector<int> owner(g.order(), -1);
    FatScene out;
    out.d = scene.d;
    out.meta = scene.meta;
    out.meta.generator = "cluster_union";
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        const auto& subset = subsets[i];
        const std::string name = "subset " + std::to_string(i);
        if (subset.empty())
            throw precondition_error(name + " is empty");
        validate_vertex_set(g, subset);
        for (Vertex v : subset) {
            if (owner[v] >= 0)
                throw precondition_error(name + " overlaps subset " + std::to_string(owner[v]) + " at object " +
                                         std::to_string(v));
            owner[v] = static_cast<int>(i);
        }
        const auto extent = bound == ClusterBound::diameter ? diameter_within(g, subset) : radius_within(g, subset);
        const char* what = bound == ClusterBound::diameter ? "diameter" : "radius";
        if (!extent)
            throw precondition_error(name + " induces a disconnected subgraph");
        if (*extent > t)
            throw precondition_error(name + " has " + what + " " + std::to_string(*extent) + " > t=" +
                                     std::to_string(t));
        UnionGroup group;
        for (Vertex v : subset)
            for_each_primitive(scene.objects[v], [&](const auto& p) { group.members.emplace_back(p); });
        out.objects.emplace_back(std::move(group));
    }
    out.meta.n = static_cast<std::uint32_t>(out.objects.size());
    return out;
}

std::string to_string(PiercingMethod m)
{
    switch (m) {
    case PiercingMethod::exact:
        return "exact";
    case PiercingMethod::candidates:
        return "candidates";
    case PiercingMethod::greedy:
        return "greedy";
    }
    return "greedy";
}

namespace {

constexpr double contain_eps = 1e-9;
constexpr std::uint64_t search_budget = 2'000'000;

struct Candidate {
    Point point;
    Mask hits = 0;
};

std::vector<Candidate> reduce_candidates(const std::vector<FatObject>& objects, std::vector<Point> points)
{
    std::vector<Candidate> out;
    std::unordered_map<Mask, std::size_t> seen;
    for (auto& p : points) {
        Mask hits = 0;
        for (std::size_t i = 0; i < objects.size(); ++i)
            if (contains(objects[i], p, contain_eps))
                hits |= bit(static_cast<unsigned>(i));
        if (!hits || !seen.emplace(hits, out.size()).second)
            continue;
        out.push_back({std::move(p), hits});
    }
    if (out.size() <= 5000) {
        std::vector<Candidate> kept;
        for (std::size_t i = 0; i < out.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < out.size() && !dominated; ++j)
                dominated = j != i && (out[i].hits & ~out[j].hits) == 0 && out[i].hits != out[j].hits;
            if (!dominated)
                kept.push_back(out[i]);
        }
        out.swap(kept);
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Candidate& a, const Candidate& b) { return count(a.hits) > count(b.hits); });
    return out;
}

std::vector<std::size_t> greedy_cover(const std::vector<Candidate>& cands, Mask universe)
{
    std::vector<std::size_t> chosen;
    Mask covered = 0;
    while (covered != universe) {
        std::size_t best = cands.size();
        unsigned gain = 0;
        for (std::size_t i = 0; i < cands.size(); ++i)
            if (count(cands[i].hits & ~covered) > gain) {
                gain = count(cands[i].hits & ~covered);
                best = i;
            }
        if (best == cands.size())
            break;
        chosen.push_back(best);
        covered |= cands[best].hits;
    }
    return chosen;
}

class CoverSearch {
public:
    CoverSearch(const std::vector<Candidate>& cands, Mask universe, std::vector<std::size_t> incumbent)
        : cands_(cands), universe_(universe), best_(std::move(incumbent))
    {
        for (const auto& c : cands_)
            widest_ = std::max(widest_, count(c.hits));
    }

    // False when the node budget ran out before optimality was proven.
    bool run()
    {
        search(0);
        return nodes_ <= search_budget;
    }

    const std::vector<std::size_t>& best() const { return best_; }

private:
    void search(Mask covered)
    {
        if (++nodes_ > search_budget)
            return;
        if (covered == universe_) {
            if (chosen_.size() < best_.size())
                best_ = chosen_;
            return;
        }
        const unsigned left = count(universe_ & ~covered);
        if (chosen_.size() + (left + widest_ - 1) / widest_ >= best_.size())
            return;
        // Branch on the uncovered object with the fewest candidates.
        unsigned target = 0;
        std::size_t fewest = std::numeric_limits<std::size_t>::max();
        for (Mask m = universe_ & ~covered; m; m &= m - 1) {
            const unsigned e = lowest(m);
            std::size_t k = 0;
            for (const auto& c : cands_)
                k += (c.hits >> e) & 1U;
            if (k < fewest) {
                fewest = k;
                target = e;
            }
        }
        for (std::size_t i = 0; i < cands_.size(); ++i) {
            if (!((cands_[i].hits >> target) & 1U))
                continue;
            chosen_.push_back(i);
            search(covered | cands_[i].hits);
            chosen_.pop_back();
        }
    }

    const std::vector<Candidate>& cands_;
    Mask universe_;
    std::vector<std::size_t> best_;
    std::vector<std::size_t> chosen_;
    unsigned widest_ = 1;
    std::uint64_t nodes_ = 0;
};

void circle_crossings(const Ball& a, const Ball& b, std::vector<Point>& out)
{
    const double dx = b.center[0] - a.center[0];
    const double dy = b.center[1] - a.center[1];
    const double dist = std::hypot(dx, dy);
    if (dist == 0.0 || dist > a.radius + b.radius || dist < std::abs(a.radius - b.radius))
        return;
    const double along = (a.radius * a.radius - b.radius * b.radius + dist * dist) / (2.0 * dist);
    const double h = std::sqrt(std::max(0.0, a.radius * a.radius - along * along));
    const double mx = a.center[0] + along * dx / dist;
    const double my = a.center[1] + along * dy / dist;
    out.push_back({mx + h * dy / dist, my - h * dx / dist});
    out.push_back({mx - h * dy / dist, my + h * dx / dist});
}

template <class A, class B>
void pair_witness(const A& a, const B& b, std::vector<Point>& out)
{
    if (!hit(a, b))
        return;
    if constexpr (std::is_same_v<A, Ball> && std::is_same_v<B, Ball>) {
        const double share = a.radius / (a.radius + b.radius);
        Point p(a.center.size());
        for (std::size_t k = 0; k < p.size(); ++k)
            p[k] = a.center[k] + share * (b.center[k] - a.center[k]);
        out.push_back(std::move(p));
        if (a.center.size() == 2)
            circle_crossings(a, b, out);
    } else if constexpr (std::is_same_v<A, AxisBox> && std::is_same_v<B, AxisBox>) {
        Point p(a.low.size());
        for (std::size_t k = 0; k < p.size(); ++k)
            p[k] = 0.5 * (std::max(a.low[k], b.low[k]) + std::min(a.high[k], b.high[k]));
        out.push_back(std::move(p));
    } else if constexpr (std::is_same_v<A, Ball>) {
        out.push_back(clamp_to(b, a.center));
    } else {
        out.push_back(clamp_to(a, b.center));
    }
}

} // namespace

Piercing min_piercing(const std::vector<FatObject>& objects)
{
    Piercing out;
    if (objects.empty())
        return out;
    const Mask universe = prefix(static_cast<unsigned>(std::min<std::size_t>(objects.size(), 64)));

    const bool all_boxes = std::all_of(objects.begin(), objects.end(),
                                       [](const FatObject& o) { return std::holds_alternative<AxisBox>(o); });
    const bool planar_balls = std::all_of(objects.begin(), objects.end(), [](const FatObject& o) {
        const auto* b = std::get_if<Ball>(&o);
        return b && b->center.size() == 2;
    });

    std::vector<Point> points;
    bool provably_exact = false;
    if (all_boxes && objects.size() <= 64) {
        // Any piercing point can slide down to the largest low corner among the
        // boxes it hits, so the grid of low coordinates is a complete candidate set.
        const std::size_t d = std::get<AxisBox>(objects.front()).low.size();
        std::vector<std::vector<double>> axis(d);
        for (const auto& o : objects)
            for (std::size_t k = 0; k < d; ++k)
                axis[k].push_back(std::get<AxisBox>(o).low[k]);
        for (auto& a : axis) {
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
        }
        std::vector<std::size_t> idx(d, 0);
        while (true) {
            Point p(d);
            for (std::size_t k = 0; k < d; ++k)
                p[k] = axis[k][idx[k]];
            points.push_back(std::move(p));
            std::size_t k = 0;
            while (k < d && ++idx[k] == axis[k].size())
                idx[k++] = 0;
            if (k == d)
                break;
        }
        provably_exact = true;
    } else if (objects.size() <= 12) {
        std::vector<std::vector<Primitive>> prims(objects.size());
        for (std::size_t i = 0; i < objects.size(); ++i)
            for_each_primitive(objects[i], [&](const auto& p) {
                prims[i].emplace_back(p);
                points.push_back(centre_of(p));
            });
        for (std::size_t i = 0; i < objects.size(); ++i)
            for (std::size_t j = i + 1; j < objects.size(); ++j)
                for (const auto& a : prims[i])
                    for (const auto& b : prims[j])
                        std::visit([&](const auto& x, const auto& y) { pair_witness(x, y, points); }, a, b);
        provably_exact = planar_balls;
    }

    if (!points.empty()) {
        const auto cands = reduce_candidates(objects, std::move(points));
        Mask reachable = 0;
        for (const auto& c : cands)
            reachable |= c.hits;
        if (reachable == universe) {
            CoverSearch search(cands, universe, greedy_cover(cands, universe));
            const bool finished = search.run();
            out.count = static_cast<std::uint32_t>(search.best().size());
            for (std::size_t i : search.best())
                out.points.push_back(cands[i].point);
            out.method = !finished ? PiercingMethod::greedy
                         : provably_exact ? PiercingMethod::exact
                                          : PiercingMethod::candidates;
            return out;
        }
    }

    // Greedy fallback: one point per object, reusing earlier points when they hit.
    out.method = PiercingMethod::greedy;
    for (const auto& o : objects) {
        const bool pierced = std::any_of(out.points.begin(), out.points.end(),
                                         [&](const Point& p) { return contains(o, p, contain_eps); });
        if (pierced)
            continue;
        Point p;
        for_each_primitive(o, [&](const auto& prim) {
            if (p.empty())
                p = centre_of(prim);
        });
        out.points.push_back(std::move(p));
    }
    out.count = static_cast<std::uint32_t>(out.points.size());
    return out;
}

namespace {

FatnessSample evaluate_sample(const FatScene& scene, Point center, double size)
{
    AxisBox query{center, center};
    for (std::size_t k = 0; k < center.size(); ++k) {
        query.low[k] -= 0.5 * size;
        query.high[k] += 0.5 * size;
    }
    const FatObject query_obj = query;
    std::vector<FatObject> collected;
    for (const auto& obj : scene.objects)
        if (object_size(obj) >= size && intersects(obj, query_obj))
            collected.push_back(obj);
    const Piercing pierce = min_piercing(collected);
    return {std::move(center), size, static_cast<std::uint32_t>(collected.size()), pierce.count, pierce.method};
}

FatnessEstimate summarise(std::vector<FatnessSample> samples)
{
    FatnessEstimate out;
    for (const auto& s : samples) {
        out.c_estimate = std::max(out.c_estimate, s.piercing);
        out.all_exact = out.all_exact && s.method == PiercingMethod::exact;
    }
    out.samples = std::move(samples);
    return out;
}

} // namespace

FatnessEstimate estimate_fatness(const FatScene& scene, std::uint32_t samples, std::uint64_t seed)
{
    validate_scene(scene);
    if (samples < 1)
        throw input_error("estimate_fatness needs at least one sample");
    if (scene.objects.empty())
        return {};

    AxisBox box = bounds(scene.objects.front());
    std::vector<double> sizes;
    for (const auto& obj : scene.objects) {
        const AxisBox b = bounds(obj);
        for (unsigned k = 0; k < scene.d; ++k) {
            box.low[k] = std::min(box.low[k], b.low[k]);
            box.high[k] = std::max(box.high[k], b.high[k]);
        }
        sizes.push_back(object_size(obj));
    }

    SplitMix64 rng(seed);
    std::vector<FatnessSample> trace;
    trace.reserve(samples);
    for (std::uint32_t s = 0; s < samples; ++s) {
        Point center(scene.d);
        for (unsigned k = 0; k < scene.d; ++k)
            center[k] = rng.uniform(box.low[k], box.high[k]);
        const double size = sizes[rng.below(sizes.size())];
        trace.push_back(evaluate_sample(scene, std::move(center), size));
    }
    return summarise(std::move(trace));
}

FatnessEstimate fatness_on_trace(const FatScene& scene, const std::vector<FatnessSample>& trace)
{
    validate_scene(scene);
    std::vector<FatnessSample> replay;
    replay.reserve(trace.size());
    for (const auto& s : trace)
        replay.push_back(evaluate_sample(scene, s.center, s.size));
    return summarise(std::move(replay));
}

FatScene gen_scene(SceneShape shape, std::uint32_t n, unsigned d, double size_min, double size_max,
                   double area_side, std::uint64_t seed)
{
    if (d < 1)
        throw input_error("scene dimension must be >= 1");
    if (!(size_min > 0.0) || !(size_min <= size_max))
        throw input_error("size range must satisfy 0 < min <= max");
    if (!(area_side >= 0.0))
        throw input_error("area side must be non-negative");

    FatScene scene;
    scene.d = d;
    scene.meta = {"gen_scene", shape == SceneShape::ball ? "ball" : "box", n, size_min, size_max, area_side, seed};
    SplitMix64 rng(seed);
    for (std::uint32_t i = 0; i < n; ++i) {
        Point center(d);
        for (unsigned k = 0; k < d; ++k)
            center[k] = rng.uniform(0.0, area_side);
        const double size = rng.uniform(size_min, size_max);
        if (shape == SceneShape::ball) {
            scene.objects.emplace_back(Ball{std::move(center), 0.5 * size});
        } else {
            AxisBox box{center, center};
            for (unsigned k = 0; k < d; ++k) {
                box.low[k] -= 0.5 * size;
                box.high[k] += 0.5 * size;
            }
            scene.objects.emplace_back(std::move(box));
        }
    }
    return scene;
}

SceneShape parse_shape(const std::string& name)
{
    if (name == "ball")
        return SceneShape::ball;
    if (name == "box")
        return SceneShape::box;
    throw input_error("unknown shape '" + name + "' (expected ball or box)");
}

} // namespace nbcc
