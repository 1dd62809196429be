#include "nbcc/errors.hpp"
#include "nbcc/families.hpp"
#include "nbcc/graph.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace nbcc;

TEST_SUITE("graph_core")
{
    TEST_CASE("construction")
    {
        const Graph p3(3, {{0, 1}, {1, 2}});
        CHECK(p3.order() == 3);
        CHECK(p3.size() == 2);
        CHECK(p3.degree(1) == 2);

        const Graph k2(2, {{0, 1}, {1, 0}});
        CHECK(k2.size() == 1);
        CHECK(k2.adjacent(1, 0));

        CHECK_THROWS_AS(Graph(2, {{0, 2}}), input_error);
        CHECK_THROWS_AS(Graph(2, {{1, 1}}), input_error);
    }

    TEST_CASE("adjacency invariants hold on generated graphs")
    {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const Graph g = gen_erdos_renyi(9, 0.4, seed);
            for (Vertex u = 0; u < g.order(); ++u) {
                const auto nb = g.neighbors(u);
                CHECK(std::is_sorted(nb.begin(), nb.end()));
                CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
                for (Vertex v : nb) {
                    CHECK(v != u);
                    CHECK(g.adjacent(v, u));
                }
            }
        }
    }

    TEST_CASE("closed neighborhood")
    {
        const Graph c5 = gen_named("cycle", 5);
        CHECK(closed_neighborhood(c5, 0) == VertexSet{0, 1, 4});
        CHECK(closed_neighborhood(gen_named("complete", 4), 2) == VertexSet{0, 1, 2, 3});
        CHECK(closed_neighborhood(gen_named("empty", 3), 1) == VertexSet{1});
        CHECK_THROWS_AS(closed_neighborhood(c5, 5), input_error);

        const Graph g = gen_erdos_renyi(10, 0.5, 3);
        for (Vertex v = 0; v < g.order(); ++v) {
            const auto nv = closed_neighborhood(g, v);
            CHECK(std::binary_search(nv.begin(), nv.end(), v));
            CHECK(nv.size() == g.degree(v) + 1);
        }
    }

    TEST_CASE("induced subgraph")
    {
        const Graph c5 = gen_named("cycle", 5);
        const std::vector<Vertex> s{0, 1, 2};
        const auto sub = induced_subgraph(c5, s);
        CHECK(sub.graph == gen_named("path", 3));
        CHECK(sub.to_host == VertexSet{0, 1, 2});
        CHECK(!sub.from_host[3].has_value());

        const std::vector<Vertex> all{0, 1, 2, 3, 4};
        const auto whole = induced_subgraph(c5, all);
        CHECK(whole.graph == c5);
        CHECK(whole.to_host == all);

        const std::vector<Vertex> pair{1, 3};
        CHECK(induced_subgraph(gen_named("complete", 5), pair).graph == gen_named("complete", 2));

        const std::vector<Vertex> unsorted{2, 1};
        CHECK_THROWS_AS(induced_subgraph(c5, unsorted), input_error);
        const std::vector<Vertex> out_of_range{1, 7};
        CHECK_THROWS_AS(induced_subgraph(c5, out_of_range), input_error);
    }

    TEST_CASE("labels travel through induced subgraphs")
    {
        const Graph g = gen_named("path", 3).with_labels({"a", "b", "c"});
        const std::vector<Vertex> s{1, 2};
        CHECK(induced_subgraph(g, s).graph.labels() == std::vector<std::string>{"b", "c"});
        CHECK_THROWS_AS(gen_named("path", 3).with_labels({"a"}), input_error);
    }

    TEST_CASE("complement")
    {
        CHECK(complement(gen_named("complete", 4)) == gen_named("empty", 4));
        CHECK(complement(gen_named("empty", 4)) == gen_named("complete", 4));
        const Graph c5c = complement(gen_named("cycle", 5));
        CHECK(c5c.size() == 5);
        CHECK(oracle::isomorphic(c5c, gen_named("cycle", 5)));
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const Graph g = gen_erdos_renyi(8, 0.5, seed);
            CHECK(complement(complement(g)) == g);
        }
    }

    TEST_CASE("radius and diameter within a set")
    {
        const Graph p3 = gen_named("path", 3);
        const std::vector<Vertex> all{0, 1, 2};
        CHECK(radius_within(p3, all) == 1u);
        CHECK(diameter_within(p3, all) == 2u);
        const std::vector<Vertex> single{2};
        CHECK(radius_within(p3, single) == 0u);
        const std::vector<Vertex> opposite{0, 2};
        CHECK(!radius_within(gen_named("cycle", 4), opposite).has_value());
        CHECK_THROWS_AS(radius_within(p3, std::vector<Vertex>{}), input_error);

        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const Graph g = gen_erdos_renyi(8, 0.35, seed);
            for (std::uint32_t s = 1; s < 256; s += 7) {
                const VertexSet set = from_mask(s);
                const auto r = radius_within(g, set);
                const int expected = oracle::radius(g, set);
                if (expected < 0) {
                    CHECK(!r.has_value());
                } else {
                    REQUIRE(r.has_value());
                    CHECK(*r == static_cast<unsigned>(expected));
                    CHECK(*r <= set.size() - 1);
                }
            }
        }
    }

    TEST_CASE("degeneracy")
    {
        CHECK(degeneracy(gen_named("complete", 6)).value == 5);
        CHECK(degeneracy(gen_named("star", 5)).value == 1);
        CHECK(degeneracy(gen_named("path", 7)).value == 1);
        for (std::uint32_t n = 3; n <= 7; ++n)
            CHECK(degeneracy(gen_named("cycle", n)).value == 2);

        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const Graph g = gen_erdos_renyi(9, 0.45, seed);
            const auto d = degeneracy(g);
            CHECK(d.value == oracle::degeneracy(g));
            REQUIRE(d.order.size() == g.order());
            std::vector<std::size_t> pos(g.order());
            for (std::size_t i = 0; i < d.order.size(); ++i)
                pos[d.order[i]] = i;
            for (Vertex v = 0; v < g.order(); ++v) {
                std::uint32_t later = 0;
                for (Vertex u : g.neighbors(v))
                    later += pos[u] > pos[v];
                CHECK(later <= d.value);
            }
        }
    }

    TEST_CASE("connected components")
    {
        const Graph k3_plus(4, {{0, 1}, {1, 2}, {0, 2}});
        const auto cc = connected_components(k3_plus);
        REQUIRE(cc.size() == 2);
        CHECK(cc[0] == VertexSet{0, 1, 2});
        CHECK(cc[1] == VertexSet{3});
        CHECK(connected_components(gen_named("cycle", 6)).size() == 1);
        CHECK(connected_components(gen_named("empty", 4)).size() == 4);
    }

    TEST_CASE("dense cache matches adjacency")
    {
        const Graph g = gen_erdos_renyi(12, 0.5, 9);
        REQUIRE(g.dense() != nullptr);
        for (Vertex u = 0; u < 12; ++u)
            for (Vertex v = 0; v < 12; ++v)
                CHECK(g.dense()->adjacent(u, v) == g.adjacent(u, v));
        CHECK(graph_from_dense(*g.dense()) == g);
        CHECK(gen_named("path", 65).dense() == nullptr);
    }
}
