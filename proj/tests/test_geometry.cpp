#include "nbcc/errors.hpp"
#include "nbcc/geometry.hpp"
#include "nbcc/random.hpp"
#include "nbcc/shallow_minor.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace nbcc;

namespace {

FatScene disks(std::vector<Point> centers, double radius = 1.0)
{
    FatScene s;
    s.d = 2;
    for (auto& c : centers)
        s.objects.emplace_back(Ball{std::move(c), radius});
    return s;
}

FatScene unit_boxes(std::vector<Point> lows)
{
    FatScene s;
    s.d = 2;
    for (auto& l : lows) {
        Point h{l[0] + 1.0, l[1] + 1.0};
        s.objects.emplace_back(AxisBox{std::move(l), std::move(h)});
    }
    return s;
}

// Brute-force piercing number for axis boxes: try every subset of the grid of
// low coordinates in increasing size.
unsigned brute_box_piercing(const std::vector<FatObject>& objects)
{
    std::vector<double> xs, ys;
    for (const auto& o : objects) {
        xs.push_back(std::get<AxisBox>(o).low[0]);
        ys.push_back(std::get<AxisBox>(o).low[1]);
    }
    std::vector<std::uint32_t> hits;
    for (double x : xs)
        for (double y : ys) {
            std::uint32_t h = 0;
            for (std::size_t i = 0; i < objects.size(); ++i)
                h |= contains(objects[i], {x, y}) ? 1U << i : 0U;
            hits.push_back(h);
        }
    const std::uint32_t all = (1U << objects.size()) - 1;
    for (unsigned k = 1; k <= objects.size(); ++k) {
        std::vector<std::size_t> pick(k, 0);
        auto rec = [&](auto&& self, std::size_t start, unsigned depth, std::uint32_t acc) -> bool {
            if (depth == k)
                return acc == all;
            for (std::size_t i = start; i < hits.size(); ++i)
                if (self(self, i + 1, depth + 1, acc | hits[i]))
                    return true;
            return false;
        };
        if (rec(rec, 0, 0, 0))
            return k;
    }
    return static_cast<unsigned>(objects.size());
}

} // namespace

TEST_SUITE("geometry")
{
    TEST_CASE("object size")
    {
        CHECK(object_size(Ball{{0, 0}, 1}) == 2.0);
        CHECK(object_size(AxisBox{{0, 0}, {1, 3}}) == 3.0);
        CHECK(object_size(UnionGroup{{Ball{{0, 0}, 1}, Ball{{2, 0}, 1}}}) == 4.0);

        UnionGroup g{{Ball{{0, 0}, 1}}};
        double last = object_size(g);
        for (int i = 1; i < 6; ++i) {
            g.members.emplace_back(Ball{{0.7 * i, -0.3 * i}, 0.5});
            const double now = object_size(g);
            CHECK(now >= last);
            last = now;
        }
    }

    TEST_CASE("validation")
    {
        CHECK_THROWS_AS(validate_object(Ball{{0, 0}, 0}, 2), input_error);
        CHECK_THROWS_AS(validate_object(AxisBox{{1, 0}, {0, 1}}, 2), input_error);
        CHECK_THROWS_AS(validate_object(Ball{{0, 0, 0}, 1}, 2), input_error);
        CHECK_THROWS_AS(validate_object(UnionGroup{}, 2), input_error);
    }

    TEST_CASE("intersection tests")
    {
        CHECK(intersects(Ball{{0, 0}, 1}, Ball{{2, 0}, 1}));
        CHECK_FALSE(intersects(Ball{{0, 0}, 1}, Ball{{2.001, 0}, 1}));
        CHECK_FALSE(intersects(AxisBox{{0, 0}, {1, 1}}, AxisBox{{2, 2}, {3, 3}}));
        CHECK(intersects(AxisBox{{0, 0}, {1, 1}}, AxisBox{{1, 1}, {3, 3}}));
        CHECK(intersects(Ball{{0, 0}, 1}, AxisBox{{0.5, -0.5}, {2, 0.5}}));
        CHECK_FALSE(intersects(Ball{{0, 0}, 1}, AxisBox{{0.8, 0.8}, {2, 2}}));
        CHECK(intersects(UnionGroup{{Ball{{10, 10}, 1}, Ball{{0, 0}, 1}}}, Ball{{1.5, 0}, 1}));
        CHECK_THROWS_AS(intersects(Ball{{0, 0}, 1}, Ball{{0, 0, 0}, 1}), input_error);
    }

    TEST_CASE("intersection graphs")
    {
        CHECK(intersection_graph(disks({{0, 0}, {5, 0}, {10, 0}})).size() == 0);
        CHECK(intersection_graph(disks({{0, 0}, {0, 0}, {0, 0}, {0, 0}})).size() == 6);
        const Graph p3 = intersection_graph(disks({{0, 0}, {1.5, 0}, {3, 0}}));
        CHECK(p3.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
        CHECK(p3.labels() == std::vector<std::string>{"obj0", "obj1", "obj2"});
    }

    TEST_CASE("cluster union")
    {
        const FatScene chain = disks({{0, 0}, {1.5, 0}, {3, 0}});
        const FatScene same = cluster_union(chain, {{0}, {1}, {2}}, 1);
        CHECK(intersection_graph(same).edges() == intersection_graph(chain).edges());

        const FatScene tangent = disks({{0, 0}, {2, 0}});
        const FatScene merged = cluster_union(tangent, {{0, 1}}, 1);
        REQUIRE(merged.objects.size() == 1);
        CHECK(object_size(merged.objects[0]) == 4.0);

        CHECK_NOTHROW(cluster_union(chain, {{0, 1, 2}}, 2));
        CHECK_THROWS_AS(cluster_union(chain, {{0, 1, 2}}, 1), precondition_error);
        CHECK_NOTHROW(cluster_union(chain, {{0, 1, 2}}, 1, ClusterBound::radius));
        CHECK_THROWS_AS(cluster_union(chain, {{0, 2}}, 5), precondition_error);
        CHECK_THROWS_AS(cluster_union(chain, {{0, 1}, {1, 2}}, 2), precondition_error);
    }

    TEST_CASE("cluster union commutes with quotient")
    {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const FatScene scene = gen_scene(SceneShape::ball, 12, 2, 1, 1, 4, seed);
            const Graph g = intersection_graph(scene);
            // Grow radius-1 clusters around vertices in id order.
            std::vector<VertexSet> subsets;
            std::vector<bool> used(g.order(), false);
            for (Vertex v = 0; v < g.order(); ++v) {
                if (used[v])
                    continue;
                VertexSet b{v};
                used[v] = true;
                for (Vertex u : g.neighbors(v))
                    if (!used[u] && b.size() < 3) {
                        b.push_back(u);
                        used[u] = true;
                    }
                std::sort(b.begin(), b.end());
                subsets.push_back(b);
            }
            const FatScene merged = cluster_union(scene, subsets, 2);
            const Graph q = quotient(g, {1, subsets});
            CHECK(intersection_graph(merged).edges() == q.edges());
        }
    }

    TEST_CASE("piercing")
    {
        CHECK(min_piercing({Ball{{3, 3}, 1}}).count == 1);

        const FatScene far = unit_boxes({{0, 0}, {5, 0}, {10, 0}, {0, 5}});
        const auto p = min_piercing(far.objects);
        CHECK(p.count == 4);
        CHECK(p.method == PiercingMethod::exact);

        const FatScene stacked = unit_boxes({{0, 0}, {0.5, 0.5}, {0.9, 0.1}, {3, 3}, {3.5, 3.2}});
        const auto s = min_piercing(stacked.objects);
        CHECK(s.count == 2);
        for (const auto& obj : stacked.objects) {
            bool hit = false;
            for (const auto& pt : s.points)
                hit = hit || contains(obj, pt, 1e-9);
            CHECK(hit);
        }

        // Three unit disks pairwise overlapping with no common point.
        const FatScene tri = disks({{0, 0}, {1.9, 0}, {0.95, 1.65}});
        const auto t = min_piercing(tri.objects);
        CHECK(t.method == PiercingMethod::exact);
        CHECK(t.count == 2);

        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const FatScene rnd = gen_scene(SceneShape::box, 7, 2, 0.5, 2.0, 4.0, seed);
            const auto r = min_piercing(rnd.objects);
            CHECK(r.method == PiercingMethod::exact);
            CHECK(r.count == brute_box_piercing(rnd.objects));
        }
    }

    TEST_CASE("fatness estimate")
    {
        const FatScene one = disks({{1, 1}});
        CHECK(estimate_fatness(one, 20, 1).c_estimate == 1);

        const FatScene far = unit_boxes({{0, 0}, {5, 0}, {10, 0}});
        const auto trace = fatness_on_trace(far, {{{5.5, 0.5}, 1.0, 0, 0, PiercingMethod::exact}});
        CHECK(trace.samples[0].collected == 1);
        const auto wide = fatness_on_trace(far, {{{5.5, 0.5}, 12.0, 0, 0, PiercingMethod::exact}});
        CHECK(wide.samples[0].collected == 0); // no object has size >= 12
        CHECK_THROWS_AS(estimate_fatness(one, 0, 1), input_error);

        const FatScene scene = gen_scene(SceneShape::ball, 50, 2, 1, 1, 10, 3);
        const auto est = estimate_fatness(scene, 200, 9);
        CHECK(est.samples.size() == 200);
        CHECK(est.c_estimate == 3); // golden
        CHECK(est.all_exact);
        const auto again = estimate_fatness(scene, 200, 9);
        CHECK(again.c_estimate == est.c_estimate);

        // Dropping objects never raises the estimate on the same trace.
        FatScene fewer = scene;
        fewer.objects.resize(30);
        const auto replay = fatness_on_trace(fewer, est.samples);
        CHECK(replay.c_estimate <= est.c_estimate);
        for (std::size_t i = 0; i < est.samples.size(); ++i)
            CHECK(replay.samples[i].piercing <= est.samples[i].piercing);
    }

    TEST_CASE("scene generator")
    {
        const FatScene one = gen_scene(SceneShape::ball, 1, 2, 2, 2, 10, 5);
        REQUIRE(one.objects.size() == 1);
        CHECK(std::get<Ball>(one.objects[0]).radius == 1.0);

        const FatScene sparse = gen_scene(SceneShape::box, 20, 3, 0.1, 0.1, 1e6, 8);
        CHECK_NOTHROW(validate_scene(sparse));
        CHECK(sparse.objects.size() == 20);

        // Reference trace: centre coordinates then size, one draw each.
        const FatScene golden = gen_scene(SceneShape::ball, 40, 2, 1, 1, 12, 4);
        SplitMix64 rng(4);
        for (const auto& obj : golden.objects) {
            const auto& b = std::get<Ball>(obj);
            CHECK(b.center[0] == 12.0 * static_cast<double>(rng.next() >> 11) * 0x1.0p-53);
            CHECK(b.center[1] == 12.0 * static_cast<double>(rng.next() >> 11) * 0x1.0p-53);
            rng.next();
            CHECK(b.radius == 0.5);
        }
        CHECK(intersection_graph(golden).size() == 15u);
        CHECK_THROWS_AS(gen_scene(SceneShape::ball, 3, 2, 2, 1, 10, 1), input_error);
        CHECK_THROWS_AS(parse_shape("cone"), input_error);
    }
}
