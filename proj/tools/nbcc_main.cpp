// nbcc command-line front end. Talks to the library only through nbcc.h.
#include "nbcc/nbcc.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_theorem_fail = 1;
constexpr int exit_error = 2;

struct cli_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Str {
    char* p = nullptr;
    ~Str() { nbcc_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

struct GraphDeleter {
    void operator()(nbcc_graph* g) const { nbcc_graph_destroy(g); }
};
struct SceneDeleter {
    void operator()(nbcc_scene* s) const { nbcc_scene_destroy(s); }
};
using GraphPtr = std::unique_ptr<nbcc_graph, GraphDeleter>;
using ScenePtr = std::unique_ptr<nbcc_scene, SceneDeleter>;

void check(nbcc_status st)
{
    if (st == NBCC_OK)
        return;
    std::string msg = nbcc_last_error();
    if (st == NBCC_E_SIZE)
        msg += " (raise the matching --cap-* option up to its hard limit, or use --mode greedy where offered)";
    throw cli_failure(msg);
}

std::string read_input(const std::string& path)
{
    if (path.empty() || path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw cli_failure("cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw cli_failure("cannot write '" + path + "'");
}

GraphPtr load_graph(const std::string& path)
{
    const auto text = read_input(path);
    nbcc_graph* g = nullptr;
    check(nbcc_graph_parse(text.c_str(), &g));
    return GraphPtr(g);
}

ScenePtr load_scene(const std::string& path)
{
    const auto text = read_input(path);
    nbcc_scene* s = nullptr;
    check(nbcc_scene_parse(text.c_str(), &s));
    return ScenePtr(s);
}

std::string graph_text(const nbcc_graph* g, const std::string& format)
{
    Str out;
    check(nbcc_graph_write(g, format == "dimacs" ? NBCC_FORMAT_DIMACS : NBCC_FORMAT_JSON, &out.p));
    return out.str();
}

struct CapOptions {
    nbcc_caps caps{};

    void add(CLI::App* cmd)
    {
        nbcc_caps_default(&caps);
        cmd->add_option("--cap-exact-cover", caps.exact_cover, "Max vertices for exact clique cover");
        cmd->add_option("--cap-enum", caps.enum_vertices, "Max host vertices for minor enumeration");
        cmd->add_option("--cap-max-t", caps.max_t, "Max depth for minor enumeration");
        cmd->add_option("--cap-mis", caps.mis, "Max vertices for exact independent set");
    }

    void warn() const
    {
        nbcc_caps d;
        nbcc_caps_default(&d);
        if (caps.exact_cover > d.exact_cover || caps.enum_vertices > d.enum_vertices || caps.max_t > d.max_t ||
            caps.mis > d.mis)
            std::cerr << "warning: caps raised above defaults; exact runs may take a long time\n";
    }
};

// --seed wins; otherwise NBCC_SEED; otherwise the command default.
std::uint64_t master_seed(const std::optional<std::uint64_t>& flag, std::uint64_t fallback)
{
    if (flag)
        return *flag;
    if (const char* env = std::getenv("NBCC_SEED")) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used == std::string(env).size())
                return v;
        } catch (const std::exception&) {
        }
        throw cli_failure(std::string("NBCC_SEED is not an unsigned integer: '") + env + "'");
    }
    return fallback;
}

// gen ----------------------------------------------------------------------

struct GenArgs {
    std::string family;
    std::uint32_t n = 0;
    std::uint32_t b = 0;
    double p = 0.5;
    std::optional<std::uint64_t> seed;
    std::uint32_t attach_max = 3;
    std::string format = "json";
    std::string output;
    std::string poset_out;
};

int run_gen(const GenArgs& a)
{
    const auto seed = master_seed(a.seed, 0);
    const nbcc_family_params params{a.family.c_str(), a.n, a.b, a.p, seed, a.attach_max};
    nbcc_graph* raw = nullptr;
    Str poset;
    check(nbcc_generate(&params, &raw, a.poset_out.empty() ? nullptr : &poset.p));
    GraphPtr g(raw);
    write_output(a.output, graph_text(g.get(), a.format));
    if (!a.poset_out.empty())
        write_output(a.poset_out, poset.str());
    std::cerr << a.family << ": n=" << nbcc_graph_order(g.get()) << " m=" << nbcc_graph_size(g.get()) << "\n";
    return exit_ok;
}

// compute ------------------------------------------------------------------

struct ComputeArgs {
    std::string quantity;
    std::string input;
    std::uint32_t t = 0;
    std::string mode = "exact";
    std::string format = "text";
    CapOptions caps;
};

int run_compute(const ComputeArgs& a)
{
    a.caps.warn();
    auto g = load_graph(a.input);
    Str out;
    check(nbcc_compute(g.get(), a.quantity.c_str(), a.t, a.mode == "greedy", &a.caps.caps, &out.p));
    if (a.format == "json") {
        std::cout << out.str();
    } else {
        const auto j = json::parse(out.str());
        std::cout << j.at("value").get<std::string>() << "\n";
    }
    return exit_ok;
}

// verify -------------------------------------------------------------------

struct VerifyArgs {
    std::string check;
    std::string family;
    std::uint32_t trials = 0;
    std::uint32_t n = 0;
    std::optional<std::uint32_t> t;
    std::optional<double> p;
    std::optional<std::uint64_t> seed;
    std::uint32_t attach_max = 3;
    std::uint32_t jobs = 1;
    std::string csv;
    std::string jsonl;
    CapOptions caps;
};

int run_verify(const VerifyArgs& a)
{
    a.caps.warn();
    nbcc_verify_config cfg{};
    cfg.check = a.check.c_str();
    cfg.family = a.family.empty() ? nullptr : a.family.c_str();
    cfg.trials = a.trials;
    cfg.n = a.n;
    cfg.t = a.t ? static_cast<std::int32_t>(*a.t) : -1;
    cfg.p = a.p ? *a.p : -1.0;
    cfg.seed = master_seed(a.seed, 1);
    cfg.attach_max = a.attach_max;
    cfg.jobs = a.jobs;
    cfg.caps = a.caps.caps;
    Str jsonl, csv;
    nbcc_verify_summary s{};
    check(nbcc_verify(&cfg, &jsonl.p, &csv.p, &s));
    if (!a.jsonl.empty())
        write_output(a.jsonl, jsonl.str());
    if (!a.csv.empty())
        write_output(a.csv, csv.str());
    if (a.jsonl != "-" && a.csv != "-")
        std::cout << a.check << ": instances=" << s.instances << " pass=" << s.passed << " fail=" << s.failed
                  << " stronger-form-fail=" << s.stronger_form_failed << "\n";
    if (s.failed > 0)
        return exit_theorem_fail;
    if (s.stronger_form_failed > 0)
        std::cerr << "warning: " << s.stronger_form_failed << " instance(s) failed only the stronger form\n";
    return exit_ok;
}

// geom ---------------------------------------------------------------------

struct GeomGenArgs {
    std::string shape = "ball";
    std::uint32_t n = 0;
    std::uint32_t d = 2;
    double size_min = 1.0;
    double size_max = 1.0;
    double area = 10.0;
    std::optional<std::uint64_t> seed;
    std::string output;
};

int run_geom_gen(const GeomGenArgs& a)
{
    nbcc_scene* raw = nullptr;
    check(nbcc_scene_generate(a.shape.c_str(), a.n, a.d, a.size_min, a.size_max, a.area, master_seed(a.seed, 0),
                              &raw));
    ScenePtr s(raw);
    Str out;
    check(nbcc_scene_write(s.get(), &out.p));
    write_output(a.output, out.str());
    return exit_ok;
}

struct GeomGraphArgs {
    std::string input;
    std::string format = "json";
    std::string output;
};

int run_geom_graph(const GeomGraphArgs& a)
{
    auto s = load_scene(a.input);
    nbcc_graph* raw = nullptr;
    check(nbcc_scene_graph(s.get(), &raw));
    GraphPtr g(raw);
    write_output(a.output, graph_text(g.get(), a.format));
    std::cerr << "intersection graph: n=" << nbcc_graph_order(g.get()) << " m=" << nbcc_graph_size(g.get()) << "\n";
    return exit_ok;
}

struct GeomFatnessArgs {
    std::string input;
    std::uint32_t samples = 100;
    std::optional<std::uint64_t> seed;
    std::string format = "json";
};

std::string fmt_double(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

int run_geom_fatness(const GeomFatnessArgs& a)
{
    auto s = load_scene(a.input);
    Str out;
    check(nbcc_scene_fatness(s.get(), a.samples, master_seed(a.seed, 0), &out.p));
    if (a.format == "json") {
        std::cout << out.str();
        return exit_ok;
    }
    const auto j = json::parse(out.str());
    std::cout << "sample,center,size,collected,piercing,method\n";
    std::size_t i = 0;
    for (const auto& row : j.at("log")) {
        std::string center;
        for (const auto& c : row.at("center"))
            center += (center.empty() ? "" : " ") + fmt_double(c.get<double>());
        std::cout << i++ << "," << center << "," << fmt_double(row.at("size").get<double>()) << ","
                  << row.at("collected").get<std::size_t>() << "," << row.at("piercing").get<std::size_t>() << ","
                  << row.at("method").get<std::string>() << "\n";
    }
    std::cout << "# c_estimate=" << j.at("c_estimate").get<std::size_t>()
              << " all_exact=" << (j.at("all_exact").get<bool>() ? "true" : "false") << "\n";
    return exit_ok;
}

struct GeomClusterArgs {
    std::string input;
    std::string subsets;
    std::uint32_t t = 1;
    bool radius = false;
    std::string output;
};

int run_geom_cluster(const GeomClusterArgs& a)
{
    auto s = load_scene(a.input);
    std::string subsets = a.subsets;
    if (!subsets.empty() && subsets.front() != '[')
        subsets = read_input(subsets);
    nbcc_scene* raw = nullptr;
    check(nbcc_scene_cluster(s.get(), subsets.c_str(), a.t, a.radius ? 1 : 0, &raw));
    ScenePtr out_scene(raw);
    Str out;
    check(nbcc_scene_write(out_scene.get(), &out.p));
    write_output(a.output, out.str());
    return exit_ok;
}

// sep ----------------------------------------------------------------------

struct SepFindArgs {
    std::string input;
    std::string strategy = "degree-peel";
    std::uint32_t axis = 0;
    std::uint32_t steps = 16;
    CapOptions caps;
};

int run_sep_find(const SepFindArgs& a)
{
    a.caps.warn();
    Str out;
    if (a.strategy == "geometric-cut") {
        auto s = load_scene(a.input);
        check(nbcc_separator_geometric(s.get(), a.axis, a.steps, &a.caps.caps, &out.p));
    } else {
        auto g = load_graph(a.input);
        check(nbcc_separator_find(g.get(), a.strategy.c_str(), &a.caps.caps, &out.p));
    }
    std::cout << out.str();
    return exit_ok;
}

struct SepReportArgs {
    std::string strategy = "all";
    std::vector<std::string> inputs;
    std::uint32_t t = 0;
    std::string output;
    CapOptions caps;
};

struct BatchItem {
    std::string id;
    std::string family;
    GraphPtr graph;
};

// Graph files become instances directly; scene files go through their
// intersection graph. JSON may carry a "family" string used as the tag.
BatchItem load_batch_item(const fs::path& path)
{
    const auto text = read_input(path.string());
    BatchItem item{path.stem().string(), "graph", nullptr};
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw cli_failure(path.string() + ": " + e.what());
        }
        if (j.contains("family") && j["family"].is_string())
            item.family = j["family"].get<std::string>();
        if (j.contains("objects")) {
            nbcc_scene* raw = nullptr;
            check(nbcc_scene_parse(text.c_str(), &raw));
            ScenePtr s(raw);
            nbcc_graph* g = nullptr;
            check(nbcc_scene_graph(s.get(), &g));
            item.graph.reset(g);
            if (item.family == "graph") {
                item.family = "scene";
                if (j.contains("meta") && j["meta"].contains("generator"))
                    item.family = j["meta"]["generator"].get<std::string>();
            }
            return item;
        }
    }
    nbcc_graph* g = nullptr;
    check(nbcc_graph_parse(text.c_str(), &g));
    item.graph.reset(g);
    return item;
}

int run_sep_report(const SepReportArgs& a)
{
    a.caps.warn();
    std::vector<fs::path> files;
    for (const auto& in : a.inputs) {
        if (fs::is_directory(in)) {
            for (const auto& entry : fs::directory_iterator(in)) {
                const auto ext = entry.path().extension();
                if (entry.is_regular_file() && (ext == ".json" || ext == ".dimacs" || ext == ".col"))
                    files.push_back(entry.path());
            }
        } else if (fs::exists(in)) {
            files.emplace_back(in);
        } else {
            throw cli_failure("no such file or directory '" + in + "'");
        }
    }
    std::sort(files.begin(), files.end());

    std::vector<BatchItem> items;
    std::string load_log;
    for (const auto& f : files) {
        try {
            items.push_back(load_batch_item(f));
        } catch (const cli_failure& e) {
            load_log += f.filename().string() + ": skipped: " + e.what() + "\n";
        }
    }
    std::vector<const nbcc_graph*> graphs;
    std::vector<const char*> ids, families;
    for (const auto& it : items) {
        graphs.push_back(it.graph.get());
        ids.push_back(it.id.c_str());
        families.push_back(it.family.c_str());
    }
    Str csv, log;
    check(nbcc_conjecture_report(graphs.data(), ids.data(), families.data(), items.size(), a.t,
                                 a.strategy.c_str(), &a.caps.caps, &csv.p, &log.p));
    write_output(a.output, csv.str());
    std::cerr << load_log << log.str();
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"nbcc: clique-cover parameters of shallow minors"};
    app.set_version_flag("--version", std::string(nbcc_version()));
    app.require_subcommand(1);

    int code = exit_ok;
    const std::vector<std::string> graph_formats{"json", "dimacs"};

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph from a named or random family");
    gen_cmd->add_option("--family", gen.family, "complete|cycle|path|star|grid|empty|er|chordal|interval|poset")
        ->required();
    gen_cmd->add_option("--n", gen.n, "Vertex count (leaves for star, rows for grid)")->required();
    gen_cmd->add_option("--b", gen.b, "Grid columns");
    gen_cmd->add_option("--p", gen.p, "Edge / relation probability");
    gen_cmd->add_option("--seed", gen.seed, "Master seed");
    gen_cmd->add_option("--attach-max", gen.attach_max, "Chordal generator attachment bound");
    gen_cmd->add_option("--format", gen.format)->check(CLI::IsMember(graph_formats));
    gen_cmd->add_option("-o,--output", gen.output, "Output path (default stdout)");
    gen_cmd->add_option("--poset-out", gen.poset_out, "Write the poset relation (poset family)");
    gen_cmd->callback([&] { code = run_gen(gen); });

    ComputeArgs comp;
    auto* comp_cmd = app.add_subcommand("compute", "Compute a graph parameter with its witness");
    comp_cmd
        ->add_option("quantity", comp.quantity,
                     "beta|beta-tilde|beta-hat|grad|grad-hat|degeneracy|alpha|clique-minor|star-minor|is-chordal")
        ->required();
    comp_cmd->add_option("input", comp.input, "Graph file (JSON or DIMACS, - for stdin)");
    comp_cmd->add_option("--t", comp.t, "Minor depth");
    comp_cmd->add_option("--mode", comp.mode)->check(CLI::IsMember({"exact", "greedy"}));
    comp_cmd->add_option("--format", comp.format)->check(CLI::IsMember({"text", "json"}));
    comp.caps.add(comp_cmd);
    comp_cmd->callback([&] { code = run_compute(comp); });

    VerifyArgs ver;
    auto* ver_cmd = app.add_subcommand("verify", "Run a theorem check over generated instances");
    ver_cmd->add_option("check", ver.check, "thm1-chordal|thm1-incomp|thm2|thm3|peel")->required();
    ver_cmd->add_option("--family", ver.family, "Instance family (default depends on the check)");
    ver_cmd->add_option("--trials", ver.trials, "Instance count");
    ver_cmd->add_option("--n", ver.n, "Vertex count (default cycles 4..8)");
    ver_cmd->add_option("--t", ver.t, "Minor depth (default 0 and 1)");
    ver_cmd->add_option("--p", ver.p, "Probability (default cycles 0.3, 0.5, 0.7)");
    ver_cmd->add_option("--seed", ver.seed, "Master seed");
    ver_cmd->add_option("--attach-max", ver.attach_max);
    ver_cmd->add_option("--jobs", ver.jobs, "Worker threads");
    ver_cmd->add_option("--csv", ver.csv, "CSV report path (- for stdout)");
    ver_cmd->add_option("--jsonl", ver.jsonl, "JSONL report path (- for stdout)");
    ver.caps.add(ver_cmd);
    ver_cmd->callback([&] { code = run_verify(ver); });

    auto* geom_cmd = app.add_subcommand("geom", "Fat-object scenes");
    geom_cmd->require_subcommand(1);

    GeomGenArgs ggen;
    auto* ggen_cmd = geom_cmd->add_subcommand("gen", "Generate a random scene");
    ggen_cmd->add_option("--shape", ggen.shape)->check(CLI::IsMember({"ball", "box"}));
    ggen_cmd->add_option("--n", ggen.n, "Object count")->required();
    ggen_cmd->add_option("--d", ggen.d, "Dimension");
    ggen_cmd->add_option("--size-min", ggen.size_min);
    ggen_cmd->add_option("--size-max", ggen.size_max);
    ggen_cmd->add_option("--area", ggen.area, "Side of the placement cube");
    ggen_cmd->add_option("--seed", ggen.seed, "Master seed");
    ggen_cmd->add_option("-o,--output", ggen.output);
    ggen_cmd->callback([&] { code = run_geom_gen(ggen); });

    GeomGraphArgs ggraph;
    auto* ggraph_cmd = geom_cmd->add_subcommand("graph", "Intersection graph of a scene");
    ggraph_cmd->add_option("input", ggraph.input, "Scene file (- for stdin)");
    ggraph_cmd->add_option("--format", ggraph.format)->check(CLI::IsMember(graph_formats));
    ggraph_cmd->add_option("-o,--output", ggraph.output);
    ggraph_cmd->callback([&] { code = run_geom_graph(ggraph); });

    GeomFatnessArgs gfat;
    auto* gfat_cmd = geom_cmd->add_subcommand("fatness", "Sampled fatness estimate");
    gfat_cmd->add_option("input", gfat.input, "Scene file (- for stdin)");
    gfat_cmd->add_option("--samples", gfat.samples);
    gfat_cmd->add_option("--seed", gfat.seed, "Master seed");
    gfat_cmd->add_option("--format", gfat.format)->check(CLI::IsMember({"json", "csv"}));
    gfat_cmd->callback([&] { code = run_geom_fatness(gfat); });

    GeomClusterArgs gcl;
    auto* gcl_cmd = geom_cmd->add_subcommand("cluster", "Replace clusters of objects by their unions");
    gcl_cmd->add_option("input", gcl.input, "Scene file (- for stdin)");
    gcl_cmd->add_option("--subsets", gcl.subsets, "JSON list of id lists, or a file holding one")->required();
    gcl_cmd->add_option("--t", gcl.t);
    gcl_cmd->add_flag("--radius", gcl.radius, "Bound cluster radius instead of diameter");
    gcl_cmd->add_option("-o,--output", gcl.output);
    gcl_cmd->callback([&] { code = run_geom_cluster(gcl); });

    auto* sep_cmd = app.add_subcommand("sep", "Independent-set separators");
    sep_cmd->require_subcommand(1);

    SepFindArgs sfind;
    auto* sfind_cmd = sep_cmd->add_subcommand("find", "Search one separator");
    sfind_cmd->add_option("input", sfind.input, "Graph file, or scene file for geometric-cut");
    sfind_cmd->add_option("--strategy", sfind.strategy)
        ->check(CLI::IsMember({"degree-peel", "neighborhood-peel", "geometric-cut"}));
    sfind_cmd->add_option("--axis", sfind.axis);
    sfind_cmd->add_option("--steps", sfind.steps);
    sfind.caps.add(sfind_cmd);
    sfind_cmd->callback([&] { code = run_sep_find(sfind); });

    SepReportArgs srep;
    auto* srep_cmd = sep_cmd->add_subcommand("report", "Separator CSV over a batch of graphs or scenes");
    srep_cmd->add_option("--strategy", srep.strategy)
        ->check(CLI::IsMember({"all", "degree-peel", "neighborhood-peel"}));
    srep_cmd->add_option("--in", srep.inputs, "Directories or files")->required();
    srep_cmd->add_option("--t", srep.t);
    srep_cmd->add_option("-o,--output", srep.output);
    srep.caps.add(srep_cmd);
    srep_cmd->callback([&] { code = run_sep_report(srep); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_error;
    } catch (const cli_failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
    return code;
}
