#include "nbcc/io.hpp"

#include "nbcc/errors.hpp"

#include <sstream>

namespace nbcc {

json parse_json(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw input_error(std::string("malformed JSON: ") + e.what());
    }
}

namespace {

template <class T>
T field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw input_error(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw input_error(std::string("bad field '") + key + "': " + e.what());
    }
}

} // namespace

json graph_to_json(const Graph& g)
{
    json j;
    j["n"] = g.order();
    json edges = json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (!g.labels().empty())
        j["labels"] = g.labels();
    return j;
}

Graph graph_from_json(const json& j)
try {
    const auto n = field<Vertex>(j, "n");
    std::vector<Edge> edges;
    for (const auto& e : field<json>(j, "edges")) {
        if (!e.is_array() || e.size() != 2)
            throw input_error("each edge must be a pair [u, v]");
        edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    Graph g(n, edges);
    if (j.contains("labels") && !j["labels"].is_null())
        g = g.with_labels(field<std::vector<std::string>>(j, "labels"));
    return g;
} catch (const json::exception& e) {
    throw input_error(std::string("bad graph JSON: ") + e.what());
}

std::string write_dimacs(const Graph& g)
{
    std::ostringstream out;
    out << "p edge " << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

Graph read_dimacs(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    Vertex n = 0;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c")
            continue;
        if (tag == "p") {
            std::string format;
            std::size_t m = 0;
            if (have_header || !(ls >> format >> n >> m))
                throw input_error("DIMACS line " + std::to_string(line_no) + ": bad problem line");
            have_header = true;
        } else if (tag == "e") {
            long long u = 0;
            long long v = 0;
            if (!have_header || !(ls >> u >> v) || u < 1 || v < 1)
                throw input_error("DIMACS line " + std::to_string(line_no) + ": bad edge line");
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            throw input_error("DIMACS line " + std::to_string(line_no) + ": unknown tag '" + tag + "'");
        }
    }
    if (!have_header)
        throw input_error("DIMACS input has no 'p edge' line");
    return Graph(n, edges);
}

Graph parse_graph(const std::string& text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return graph_from_json(parse_json(text));
    return read_dimacs(text);
}

json poset_to_json(const PosetInstance& p)
{
    json relation = json::array();
    for (const auto& [a, b] : p.relation)
        relation.push_back({a, b});
    return {{"n", p.n}, {"relation", std::move(relation)}};
}

PosetInstance poset_from_json(const json& j)
try {
    const auto n = field<std::uint32_t>(j, "n");
    std::vector<Edge> relation;
    for (const auto& e : field<json>(j, "relation")) {
        if (!e.is_array() || e.size() != 2)
            throw input_error("each relation entry must be a pair [a, b]");
        relation.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    return make_poset(n, std::move(relation));
} catch (const json::exception& e) {
    throw input_error(std::string("bad poset JSON: ") + e.what());
}

json model_to_json(const MinorModel& m)
{
    return {{"t", m.t}, {"branch_sets", m.branch_sets}};
}

MinorModel model_from_json(const json& j)
{
    return {field<std::uint32_t>(j, "t"), field<std::vector<VertexSet>>(j, "branch_sets")};
}

json cover_to_json(const CliqueCover& c)
{
    return json(c.blocks);
}

CliqueCover cover_from_json(const json& j)
{
    try {
        return {j.get<std::vector<VertexSet>>()};
    } catch (const json::exception& e) {
        throw input_error(std::string("bad clique cover: ") + e.what());
    }
}

namespace {

json primitive_to_json(const Primitive& p)
{
    if (const auto* b = std::get_if<Ball>(&p))
        return {{"kind", "ball"}, {"center", b->center}, {"radius", b->radius}};
    const auto& box = std::get<AxisBox>(p);
    return {{"kind", "box"}, {"low", box.low}, {"high", box.high}};
}

Primitive primitive_from_json(const json& j)
{
    const auto kind = field<std::string>(j, "kind");
    if (kind == "ball")
        return Ball{field<Point>(j, "center"), field<double>(j, "radius")};
    if (kind == "box")
        return AxisBox{field<Point>(j, "low"), field<Point>(j, "high")};
    throw input_error("unknown primitive kind '" + kind + "'");
}

} // namespace

json scene_to_json(const FatScene& s)
{
    json objects = json::array();
    for (const auto& obj : s.objects) {
        if (const auto* g = std::get_if<UnionGroup>(&obj)) {
            json members = json::array();
            for (const auto& m : g->members)
                members.push_back(primitive_to_json(m));
            objects.push_back({{"kind", "group"}, {"members", std::move(members)}});
        } else if (const auto* b = std::get_if<Ball>(&obj)) {
            objects.push_back(primitive_to_json(*b));
        } else {
            objects.push_back(primitive_to_json(std::get<AxisBox>(obj)));
        }
    }
    json meta = json::object();
    if (!s.meta.generator.empty()) {
        meta["generator"] = s.meta.generator;
        meta["shape"] = s.meta.shape;
        meta["n"] = s.meta.n;
        meta["size_min"] = s.meta.size_min;
        meta["size_max"] = s.meta.size_max;
        meta["area_side"] = s.meta.area_side;
        meta["seed"] = s.meta.seed;
    }
    return {{"d", s.d}, {"objects", std::move(objects)}, {"meta", std::move(meta)}};
}

FatScene scene_from_json(const json& j)
{
    FatScene s;
    s.d = field<unsigned>(j, "d");
    for (const auto& o : field<json>(j, "objects")) {
        if (field<std::string>(o, "kind") == "group") {
            UnionGroup g;
            for (const auto& m : field<json>(o, "members"))
                g.members.push_back(primitive_from_json(m));
            s.objects.emplace_back(std::move(g));
        } else {
            auto p = primitive_from_json(o);
            if (auto* b = std::get_if<Ball>(&p))
                s.objects.emplace_back(std::move(*b));
            else
                s.objects.emplace_back(std::get<AxisBox>(std::move(p)));
        }
    }
    if (j.contains("meta") && j["meta"].contains("generator")) {
        const auto& m = j["meta"];
        s.meta = {field<std::string>(m, "generator"), field<std::string>(m, "shape"), field<std::uint32_t>(m, "n"),
                  field<double>(m, "size_min"), field<double>(m, "size_max"), field<double>(m, "area_side"),
                  field<std::uint64_t>(m, "seed")};
    }
    validate_scene(s);
    return s;
}

} // namespace nbcc
