#include "nbcc/errors.hpp"
#include "nbcc/families.hpp"
#include "nbcc/geometry.hpp"
#include "nbcc/separator.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace nbcc;

TEST_SUITE("separator_lab")
{
    TEST_CASE("independent sets")
    {
        CHECK(max_independent_set(gen_named("complete", 6)).alpha == 1);
        CHECK(max_independent_set(gen_named("cycle", 5)).alpha == 2);
        CHECK(max_independent_set(gen_named("empty", 5)).alpha == 5);
        CHECK(max_independent_set(Graph{}).alpha == 0);
        CHECK_THROWS_AS(max_independent_set(gen_named("path", 51)), size_error);

        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const auto n = 10 + static_cast<std::uint32_t>(seed % 9);
            const Graph g = gen_erdos_renyi(n, 0.3, seed);
            const auto mis = max_independent_set(g);
            CHECK(mis.alpha == oracle::max_independent_set(g));
            CHECK(mis.witness.size() == mis.alpha);
            for (Vertex a : mis.witness)
                for (Vertex b : mis.witness)
                    CHECK_FALSE(g.adjacent(a, b));
        }
        CHECK(max_independent_set(gen_named("grid", 7, 7)).alpha == 25);
    }

    TEST_CASE("alpha measure")
    {
        const Graph c5 = gen_named("cycle", 5);
        CHECK(alpha_measure(c5, std::vector<Vertex>{}) == 0);
        CHECK(alpha_measure(c5, std::vector<Vertex>{0, 1, 2, 3, 4}) == 2);
        CHECK(alpha_measure(c5, std::vector<Vertex>{0, 1, 2}) == 2);
    }

    TEST_CASE("strategy names")
    {
        CHECK(parse_strategy("degree-peel") == SeparatorStrategy::degree_peel);
        CHECK(to_string(SeparatorStrategy::neighborhood_peel) == "neighborhood-peel");
        CHECK_THROWS_AS(parse_strategy("magic"), input_error);
    }

    TEST_CASE("degenerate separators")
    {
        // Four disjoint edges: alpha 4, each component alpha 1 <= 2.
        const Graph matching(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
        const auto r = find_alpha_separator(matching, SeparatorStrategy::degree_peel);
        CHECK(r.separator.empty());
        CHECK(r.qualified);
        CHECK(r.alpha_graph == 4);

        const auto k = find_alpha_separator(gen_named("complete", 5), SeparatorStrategy::degree_peel);
        CHECK(k.separator == VertexSet{0, 1, 2, 3, 4});
        CHECK(k.alpha_separator == 1);
        CHECK(k.components.empty());
        CHECK_FALSE(k.exponent().has_value());
    }

    TEST_CASE("grid separator")
    {
        const Graph grid = gen_named("grid", 5, 5);
        for (auto s : {SeparatorStrategy::degree_peel, SeparatorStrategy::neighborhood_peel}) {
            const auto r = find_alpha_separator(grid, s);
            CHECK(r.alpha_graph == 13);
            CHECK(r.qualified);
            CHECK(r.alpha_separator < r.alpha_graph);
            CHECK(separator_bookkeeping_holds(grid, r));
        }
    }

    TEST_CASE("bookkeeping on random graphs")
    {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const Graph g = gen_erdos_renyi(14, 0.2, seed);
            for (auto s : {SeparatorStrategy::degree_peel, SeparatorStrategy::neighborhood_peel}) {
                const auto r = find_alpha_separator(g, s);
                CHECK(separator_bookkeeping_holds(g, r));
                if (r.qualified)
                    for (auto a : r.component_alphas)
                        CHECK(2 * a <= r.alpha_graph);
            }
        }
    }

    TEST_CASE("geometric cut")
    {
        FatScene two;
        two.d = 2;
        for (double x : {0.0, 0.5, 1.0, 20.0, 20.5, 21.0})
            two.objects.emplace_back(Ball{{x, 0.0}, 0.5});
        const auto r = geometric_cut_separator(two, 0, 8);
        CHECK(r.separator.empty());
        CHECK(r.qualified);
        CHECK(r.components.size() == 2);

        FatScene one;
        one.d = 2;
        one.objects.emplace_back(Ball{{0, 0}, 1});
        const auto s = geometric_cut_separator(one, 0, 8);
        CHECK(s.separator.empty());

        const FatScene scene = gen_scene(SceneShape::ball, 40, 2, 1, 1, 12, 4);
        const auto a = geometric_cut_separator(scene, 0, 16);
        const auto b = geometric_cut_separator(scene, 0, 16);
        CHECK(a.separator == b.separator);
        CHECK(a.separator == VertexSet{0, 17, 23, 24, 26, 30, 32, 37}); // golden
        CHECK(a.alpha_graph == 30);
        CHECK(a.alpha_separator == 6);
        CHECK(a.qualified);
        CHECK(separator_bookkeeping_holds(intersection_graph(scene), a));
        CHECK_THROWS_AS(geometric_cut_separator(scene, 2, 16), input_error);
    }

    TEST_CASE("conjecture report")
    {
        const auto empty = conjecture_report({}, 0, {SeparatorStrategy::degree_peel});
        CHECK(empty.csv == std::string(conjecture_csv_header) + "\n");

        std::vector<ReportInstance> batch{{"k4", "complete", gen_named("complete", 4)},
                                          {"grid", "grid", gen_named("grid", 4, 4)},
                                          {"c7", "cycle", gen_named("cycle", 7)}};
        const auto rep = conjecture_report(
            batch, 1, {SeparatorStrategy::degree_peel, SeparatorStrategy::neighborhood_peel});
        std::size_t lines = 0;
        for (char c : rep.csv)
            lines += c == '\n';
        CHECK(lines == 1 + 2 * 2);
        REQUIRE(rep.log.size() == 1);
        CHECK(rep.log[0].find("k4") != std::string::npos);
        CHECK(rep.csv.find("grid,grid,16,1,degree-peel,8,") != std::string::npos);
    }
}
