#include "nbcc/nbcc.h"

#include "nbcc/errors.hpp"
#include "nbcc/families.hpp"
#include "nbcc/geometry.hpp"
#include "nbcc/io.hpp"
#include "nbcc/separator.hpp"
#include "nbcc/shallow_minor.hpp"
#include "nbcc/theorems.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct nbcc_graph {
    nbcc::Graph value;
};

struct nbcc_scene {
    nbcc::FatScene value;
};

namespace {

thread_local std::string last_error;

template <class F>
nbcc_status guarded(F&& body) noexcept
{
    try {
        last_error.clear();
        body();
        return NBCC_OK;
    } catch (const nbcc::input_error& e) {
        last_error = e.what();
        return NBCC_E_INPUT;
    } catch (const nbcc::size_error& e) {
        last_error = e.what();
        return NBCC_E_SIZE;
    } catch (const nbcc::model_error& e) {
        last_error = e.what();
        return NBCC_E_MODEL;
    } catch (const nbcc::precondition_error& e) {
        last_error = e.what();
        return NBCC_E_PRECONDITION;
    } catch (const std::exception& e) {
        last_error = e.what();
        return NBCC_E_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return NBCC_E_INTERNAL;
    }
}

char* dup(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void* p, const char* what)
{
    if (!p)
        throw nbcc::input_error(std::string(what) + " must not be null");
}

nbcc::Caps to_caps(const nbcc_caps* c)
{
    nbcc::Caps caps;
    if (c)
        caps = {c->exact_cover, c->enum_vertices, c->max_t, c->mis};
    return caps;
}

using nbcc::json;

json compute(const nbcc::Graph& g, const std::string& q, std::uint32_t t, bool greedy, const nbcc::Caps& caps)
{
    using namespace nbcc;
    const auto mode = greedy ? CoverMode::greedy : CoverMode::exact;
    json out = {{"quantity", q}};
    if (q == "beta") {
        const auto cover = greedy ? greedy_clique_cover(g) : exact_clique_cover(g, caps.exact_cover);
        out["value"] = std::to_string(cover.size());
        out["mode"] = greedy ? "greedy" : "exact";
        out["cover"] = cover_to_json(cover);
    } else if (q == "beta-tilde") {
        const auto bt = beta_tilde(g, mode, caps.exact_cover);
        out["value"] = std::to_string(bt.value);
        out["mode"] = greedy ? "greedy" : "exact";
        out["vertex"] = bt.witness;
        out["cover"] = cover_to_json(bt.cover);
    } else if (q == "beta-hat") {
        const auto bh = beta_hat(g, t, mode, caps);
        out["value"] = std::to_string(bh.value);
        out["t"] = t;
        out["mode"] = greedy ? "greedy" : "exact";
        out["model"] = model_to_json(bh.witness);
        out["vertex"] = bh.vertex;
        out["cover"] = cover_to_json(bh.cover);
    } else if (q == "grad") {
        const auto r = nbcc::grad(g, t, caps);
        out["value"] = r.value.str();
        out["t"] = t;
        out["model"] = model_to_json(r.witness);
    } else if (q == "grad-hat" || q == "clique-minor" || q == "star-minor") {
        std::uint32_t value = 0;
        MinorModel model;
        if (q == "grad-hat") {
            auto r = grad_hat(g, t, caps);
            value = r.value;
            model = std::move(r.witness);
        } else {
            auto r = q == "clique-minor" ? largest_clique_minor(g, t, caps) : largest_star_minor(g, t, caps);
            value = r.value;
            model = std::move(r.witness);
        }
        out["value"] = std::to_string(value);
        out["t"] = t;
        out["model"] = model_to_json(model);
    } else if (q == "degeneracy") {
        const auto d = degeneracy(g);
        out["value"] = std::to_string(d.value);
        out["order"] = d.order;
    } else if (q == "alpha") {
        const auto a = max_independent_set(g, caps);
        out["value"] = std::to_string(a.alpha);
        out["witness"] = a.witness;
    } else if (q == "is-chordal") {
        const auto c = is_chordal(g);
        out["value"] = c.chordal ? "true" : "false";
        if (c.chordal) {
            out["elimination_order"] = c.elimination_order;
        } else {
            out["vertex"] = c.violating_vertex;
            out["non_adjacent"] = {c.violation->first, c.violation->second};
            out["chordless_cycle"] = c.chordless_cycle;
        }
    } else {
        throw input_error("unknown quantity '" + q + "'");
    }
    return out;
}

json separator_to_json(const nbcc::SeparatorResult& r)
{
    json out = {{"strategy", nbcc::to_string(r.strategy)},
                {"separator", r.separator},
                {"alpha_G", r.alpha_graph},
                {"alpha_S", r.alpha_separator},
                {"components", r.components},
                {"component_alphas", r.component_alphas},
                {"max_component_alpha", r.max_component_alpha()},
                {"qualified", r.qualified}};
    if (auto e = r.exponent())
        out["exponent"] = *e;
    else
        out["exponent"] = nullptr;
    return out;
}

} // namespace

extern "C" {

const char* nbcc_version(void) { return "0.1.0"; }

const char* nbcc_last_error(void) { return last_error.c_str(); }

void nbcc_string_free(char* s) { std::free(s); }

void nbcc_caps_default(nbcc_caps* caps)
{
    if (caps)
        *caps = {nbcc::Caps::default_exact_cover, nbcc::Caps::default_enum_vertices, nbcc::Caps::default_max_t,
                 nbcc::Caps::default_mis};
}

void nbcc_caps_hard(nbcc_caps* caps)
{
    if (caps)
        *caps = {nbcc::Caps::hard_exact_cover, nbcc::Caps::hard_enum_vertices, nbcc::Caps::default_max_t,
                 nbcc::Caps::hard_mis};
}

nbcc_status nbcc_graph_create(uint32_t n, const uint32_t* edge_pairs, size_t edge_count, nbcc_graph** out)
{
    return guarded([&] {
        require(out, "out");
        if (edge_count)
            require(edge_pairs, "edge_pairs");
        std::vector<nbcc::Edge> edges;
        for (size_t i = 0; i < edge_count; ++i)
            edges.emplace_back(edge_pairs[2 * i], edge_pairs[2 * i + 1]);
        *out = new nbcc_graph{nbcc::Graph(n, edges)};
    });
}

nbcc_status nbcc_graph_parse(const char* text, nbcc_graph** out)
{
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new nbcc_graph{nbcc::parse_graph(text)};
    });
}

nbcc_status nbcc_graph_write(const nbcc_graph* g, nbcc_format format, char** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = dup(format == NBCC_FORMAT_DIMACS ? nbcc::write_dimacs(g->value)
                                                : nbcc::graph_to_json(g->value).dump() + "\n");
    });
}

uint32_t nbcc_graph_order(const nbcc_graph* g) { return g ? g->value.order() : 0; }

size_t nbcc_graph_size(const nbcc_graph* g) { return g ? g->value.size() : 0; }

void nbcc_graph_destroy(nbcc_graph* g) { delete g; }

nbcc_status nbcc_generate(const nbcc_family_params* params, nbcc_graph** out, char** poset_json)
{
    return guarded([&] {
        require(params, "params");
        require(params->family, "family");
        require(out, "out");
        nbcc::FamilyParams fp{params->family, params->n, params->b, params->p, params->seed, params->attach_max};
        if (fp.family == "poset") {
            const auto poset = nbcc::gen_poset_incomparability(fp.n, fp.seed, fp.p);
            auto graph = std::make_unique<nbcc_graph>(nbcc_graph{poset.incomparability});
            if (poset_json)
                *poset_json = dup(nbcc::poset_to_json(poset).dump() + "\n");
            *out = graph.release();
            return;
        }
        if (!nbcc::is_known_family(fp.family))
            throw nbcc::input_error("unknown graph family '" + fp.family + "'");
        *out = new nbcc_graph{nbcc::generate(fp)};
        if (poset_json)
            *poset_json = nullptr;
    });
}

nbcc_status nbcc_compute(const nbcc_graph* g, const char* quantity, uint32_t t, int greedy, const nbcc_caps* caps,
                         char** result_json)
{
    return guarded([&] {
        require(g, "graph");
        require(quantity, "quantity");
        require(result_json, "result_json");
        *result_json = dup(compute(g->value, quantity, t, greedy != 0, to_caps(caps)).dump() + "\n");
    });
}

nbcc_status nbcc_verify(const nbcc_verify_config* config, char** jsonl, char** csv, nbcc_verify_summary* summary)
{
    return guarded([&] {
        require(config, "config");
        require(config->check, "check");
        nbcc::VerifyConfig vc;
        vc.check = config->check;
        vc.family = config->family ? config->family : "";
        vc.trials = config->trials;
        vc.n = config->n;
        if (config->t >= 0)
            vc.t = static_cast<std::uint32_t>(config->t);
        if (config->p >= 0.0)
            vc.p = config->p;
        vc.seed = config->seed;
        vc.attach_max = config->attach_max ? config->attach_max : 3;
        vc.jobs = config->jobs;
        vc.caps = to_caps(&config->caps);
        const auto reports = nbcc::run_verify(vc);
        nbcc_verify_summary s{static_cast<uint32_t>(reports.size()), 0, 0, 0};
        for (const auto& r : reports) {
            s.passed += r.verdict == nbcc::Verdict::pass;
            s.failed += r.verdict == nbcc::Verdict::fail;
            s.stronger_form_failed += r.verdict == nbcc::Verdict::stronger_form_fail;
        }
        if (summary)
            *summary = s;
        if (jsonl)
            *jsonl = dup(nbcc::reports_to_jsonl(reports));
        if (csv)
            *csv = dup(nbcc::reports_to_csv(reports));
    });
}

nbcc_status nbcc_scene_generate(const char* shape, uint32_t n, uint32_t d, double size_min, double size_max,
                                double area_side, uint64_t seed, nbcc_scene** out)
{
    return guarded([&] {
        require(shape, "shape");
        require(out, "out");
        *out = new nbcc_scene{
            nbcc::gen_scene(nbcc::parse_shape(shape), n, d, size_min, size_max, area_side, seed)};
    });
}

nbcc_status nbcc_scene_parse(const char* json_text, nbcc_scene** out)
{
    return guarded([&] {
        require(json_text, "json_text");
        require(out, "out");
        *out = new nbcc_scene{nbcc::scene_from_json(nbcc::parse_json(json_text))};
    });
}

nbcc_status nbcc_scene_write(const nbcc_scene* s, char** out)
{
    return guarded([&] {
        require(s, "scene");
        require(out, "out");
        *out = dup(nbcc::scene_to_json(s->value).dump() + "\n");
    });
}

uint32_t nbcc_scene_object_count(const nbcc_scene* s)
{
    return s ? static_cast<uint32_t>(s->value.objects.size()) : 0;
}

void nbcc_scene_destroy(nbcc_scene* s) { delete s; }

nbcc_status nbcc_scene_graph(const nbcc_scene* s, nbcc_graph** out)
{
    return guarded([&] {
        require(s, "scene");
        require(out, "out");
        *out = new nbcc_graph{nbcc::intersection_graph(s->value)};
    });
}

nbcc_status nbcc_scene_fatness(const nbcc_scene* s, uint32_t samples, uint64_t seed, char** result_json)
{
    return guarded([&] {
        require(s, "scene");
        require(result_json, "result_json");
        const auto est = nbcc::estimate_fatness(s->value, samples, seed);
        json log = json::array();
        for (const auto& sample : est.samples)
            log.push_back({{"center", sample.center},
                           {"size", sample.size},
                           {"collected", sample.collected},
                           {"piercing", sample.piercing},
                           {"method", nbcc::to_string(sample.method)}});
        const json out = {{"c_estimate", est.c_estimate},
                          {"all_exact", est.all_exact},
                          {"samples", samples},
                          {"seed", seed},
                          {"log", std::move(log)}};
        *result_json = dup(out.dump() + "\n");
    });
}

nbcc_status nbcc_scene_cluster(const nbcc_scene* s, const char* subsets_json, uint32_t t, int use_radius,
                               nbcc_scene** out)
{
    return guarded([&] {
        require(s, "scene");
        require(subsets_json, "subsets_json");
        require(out, "out");
        std::vector<nbcc::VertexSet> subsets;
        try {
            subsets = nbcc::parse_json(subsets_json).get<std::vector<nbcc::VertexSet>>();
        } catch (const json::exception& e) {
            throw nbcc::input_error(std::string("subsets must be a list of id lists: ") + e.what());
        }
        *out = new nbcc_scene{nbcc::cluster_union(
            s->value, subsets, t, use_radius ? nbcc::ClusterBound::radius : nbcc::ClusterBound::diameter)};
    });
}

nbcc_status nbcc_separator_find(const nbcc_graph* g, const char* strategy, const nbcc_caps* caps, char** result_json)
{
    return guarded([&] {
        require(g, "graph");
        require(strategy, "strategy");
        require(result_json, "result_json");
        const auto r = nbcc::find_alpha_separator(g->value, nbcc::parse_strategy(strategy), to_caps(caps));
        *result_json = dup(separator_to_json(r).dump() + "\n");
    });
}

nbcc_status nbcc_separator_geometric(const nbcc_scene* s, uint32_t axis, uint32_t steps, const nbcc_caps* caps,
                                     char** result_json)
{
    return guarded([&] {
        require(s, "scene");
        require(result_json, "result_json");
        const auto r = nbcc::geometric_cut_separator(s->value, axis, steps, to_caps(caps));
        *result_json = dup(separator_to_json(r).dump() + "\n");
    });
}

nbcc_status nbcc_conjecture_report(const nbcc_graph* const* graphs, const char* const* ids,
                                   const char* const* families, size_t count, uint32_t t, const char* strategy,
                                   const nbcc_caps* caps, char** csv, char** log)
{
    return guarded([&] {
        require(csv, "csv");
        if (count) {
            require(graphs, "graphs");
            require(ids, "ids");
        }
        std::vector<nbcc::ReportInstance> instances;
        for (size_t i = 0; i < count; ++i) {
            require(graphs[i], "graph");
            instances.push_back({ids[i] ? ids[i] : std::to_string(i),
                                 families && families[i] ? families[i] : "unknown", graphs[i]->value});
        }
        std::vector<nbcc::SeparatorStrategy> strategies;
        if (!strategy || std::string(strategy) == "all")
            strategies = {nbcc::SeparatorStrategy::degree_peel, nbcc::SeparatorStrategy::neighborhood_peel};
        else
            strategies = {nbcc::parse_strategy(strategy)};
        const auto report = nbcc::conjecture_report(instances, t, strategies, to_caps(caps));
        std::string lines;
        for (const auto& l : report.log)
            lines += l + "\n";
        *csv = dup(report.csv);
        if (log)
            *log = dup(lines);
    });
}

} // extern "C"
