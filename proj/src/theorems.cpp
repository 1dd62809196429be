#include "nbcc/theorems.hpp"

#include "nbcc/errors.hpp"
#include "nbcc/io.hpp"
#include "nbcc/random.hpp"
#include "nbcc/separator.hpp"
#include "nbcc/shallow_minor.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace nbcc {

PeelResult peel_clique_cover(const Graph& g, CoverMode mode, std::uint32_t cap)
{
    if (g.empty())
        throw input_error("peeling needs a non-empty graph");
    PeelResult out;
    std::vector<char> alive(g.order(), 1);
    std::uint32_t remaining = g.order();
    while (remaining > 0) {
        bool have = false;
        PeelStep best;
        for (Vertex x = 0; x < g.order(); ++x) {
            if (!alive[x])
                continue;
            VertexSet nb;
            for (Vertex v : closed_neighborhood(g, x))
                if (alive[v])
                    nb.push_back(v);
            const auto sub = induced_subgraph(g, nb);
            CliqueCover local =
                mode == CoverMode::exact ? exact_clique_cover(sub.graph, cap) : greedy_clique_cover(sub.graph);
            if (have && local.size() >= best.beta)
                continue;
            for (auto& block : local.blocks)
                for (auto& v : block)
                    v = sub.to_host[v];
            best = {x, static_cast<std::uint32_t>(local.size()), std::move(local), remaining};
            have = true;
            if (best.beta == 1)
                break;
        }
        for (const auto& block : best.cover.blocks)
            for (Vertex v : block) {
                alive[v] = 0;
                --remaining;
            }
        out.independent.push_back(best.vertex);
        out.cover.blocks.insert(out.cover.blocks.end(), best.cover.blocks.begin(), best.cover.blocks.end());
        out.log.push_back(std::move(best));
    }
    std::sort(out.independent.begin(), out.independent.end());
    return out;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::fail:
        return "fail";
    case Verdict::stronger_form_fail:
        return "stronger-form-fail";
    }
    return "fail";
}

std::string InstanceDescriptor::params() const
{
    std::ostringstream s;
    if (family.family == "er" || family.family == "poset")
        s << "p=" << family.p;
    else if (family.family == "chordal")
        s << "attach_max=" << family.attach_max;
    else if (family.family == "grid")
        s << "b=" << family.b;
    return s.str();
}

const std::string& CheckReport::quantity(const std::string& name) const
{
    for (const auto& q : quantities)
        if (q.name == name)
            return q.value;
    throw std::out_of_range("report has no quantity '" + name + "'");
}

namespace {

CheckReport start(const char* check, const InstanceDescriptor& input)
{
    CheckReport r;
    r.check = check;
    r.input = input;
    r.witness = json::object();
    return r;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

json beta_hat_witness(const BetaHatResult& b)
{
    return {{"model", model_to_json(b.witness)}, {"vertex", b.vertex}, {"cover", cover_to_json(b.cover)}};
}

} // namespace

CheckReport check_thm1_chordal(const Graph& g, const InstanceDescriptor& input, const Caps& caps)
{
    if (!is_chordal(g).chordal)
        throw precondition_error("check_thm1_chordal needs a chordal graph");
    auto r = start("thm1-chordal", input);

    std::unordered_set<std::uint64_t> seen;
    std::size_t unkeyed = 0;
    std::size_t models = 0;
    std::size_t non_chordal = 0;
    std::uint32_t beta_hat_value = 0;
    json beta_witness;
    json failure;
    const DenseGraph& host = *g.dense();
    for_each_minor_model(g, input.t, caps, [&](std::span<const Mask> sets) {
        ++models;
        const DenseGraph h = quotient_dense(host, sets);
        if (const auto key = canonical_key(h); !key)
            ++unkeyed;
        else if (!seen.insert(*key).second)
            return;
        if (!is_chordal(h)) {
            if (non_chordal++ == 0)
                failure["non_chordal_quotient"] = {{"model", model_to_json(model_from_masks(input.t, sets))},
                                                   {"quotient", graph_to_json(graph_from_dense(h))}};
        }
        const auto bt = beta_tilde(h, CoverMode::exact);
        if (bt.value > beta_hat_value) {
            beta_hat_value = bt.value;
            beta_witness = {{"model", model_to_json(model_from_masks(input.t, sets))},
                            {"vertex", bt.witness},
                            {"cover", cover_to_json(cover_from_masks(bt.cover))}};
        }
    });

    r.quantities = {{"beta_hat", std::to_string(beta_hat_value)},
                    {"models", std::to_string(models)},
                    {"distinct_quotients", std::to_string(seen.size() + unkeyed)},
                    {"non_chordal_quotients", std::to_string(non_chordal)}};
    r.verdict = beta_hat_value == 1 && non_chordal == 0 ? Verdict::pass : Verdict::fail;
    r.witness["beta_hat"] = beta_witness;
    if (!failure.is_null())
        r.witness.update(failure);
    return r;
}

CheckReport check_thm1_incomparability(const PosetInstance& poset, const InstanceDescriptor& input, const Caps& caps)
{
    validate_poset(poset);
    auto r = start("thm1-incomp", input);
    const auto profile = minor_profile(poset.incomparability, input.t, CoverMode::exact, caps);
    const std::uint32_t s = profile.star.value;
    const std::uint32_t b = profile.beta_hat.value;
    const bool implied = b <= s + 1;
    const bool stronger = b <= s;
    r.quantities = {{"s_t", std::to_string(s)},
                    {"beta_hat", std::to_string(b)},
                    {"implied_bound", std::to_string(s + 1)},
                    {"implied_holds", yes_no(implied)},
                    {"stronger_holds", yes_no(stronger)}};
    r.verdict = !implied ? Verdict::fail : !stronger ? Verdict::stronger_form_fail : Verdict::pass;
    r.witness["poset"] = poset_to_json(poset);
    r.witness["beta_hat"] = beta_hat_witness(profile.beta_hat);
    r.witness["star_minor"] = model_to_json(profile.star.witness);
    return r;
}

CheckReport check_thm2(const Graph& g, const InstanceDescriptor& input, const Caps& caps)
{
    auto r = start("thm2", input);
    const auto profile = minor_profile(g, input.t, CoverMode::exact, caps);
    const Rational beta(profile.beta_hat.value);
    const Rational grad = profile.grad.value;
    const Rational grad_hat(profile.grad_hat.value);
    const Rational p(profile.clique.value);

    const bool lower = beta / Rational(2) <= grad;
    const bool upper = grad <= p * beta;
    const bool hat_lower = grad <= grad_hat;
    const bool hat_upper = grad_hat <= Rational(2) * grad;
    r.quantities = {{"beta_hat", std::to_string(profile.beta_hat.value)},
                    {"grad", grad.str()},
                    {"grad_hat", std::to_string(profile.grad_hat.value)},
                    {"p", std::to_string(profile.clique.value)},
                    {"half_beta_le_grad", yes_no(lower)},
                    {"grad_le_p_beta", yes_no(upper)},
                    {"grad_le_grad_hat", yes_no(hat_lower)},
                    {"grad_hat_le_2grad", yes_no(hat_upper)}};
    r.verdict = lower && upper && hat_lower && hat_upper ? Verdict::pass : Verdict::fail;
    r.witness["beta_hat"] = beta_hat_witness(profile.beta_hat);
    r.witness["grad"] = model_to_json(profile.grad.witness);
    r.witness["grad_hat"] = model_to_json(profile.grad_hat.witness);
    r.witness["clique_minor"] = model_to_json(profile.clique.witness);
    return r;
}

CheckReport check_thm3(const Graph& g, const InstanceDescriptor& input, const Caps& caps)
{
    auto r = start("thm3", input);
    const auto bh = beta_hat(g, input.t, CoverMode::exact, caps);
    const Rational bound(bh.value);

    std::unordered_set<std::uint64_t> seen;
    std::size_t unkeyed = 0;
    Rational worst(0);
    json worst_witness;
    std::size_t ratio_violations = 0;
    std::size_t peel_violations = 0;
    json first_violation;
    const DenseGraph& host = *g.dense();
    for_each_minor_model(g, input.t, caps, [&](std::span<const Mask> sets) {
        const DenseGraph h = quotient_dense(host, sets);
        if (const auto key = canonical_key(h); !key)
            ++unkeyed;
        else if (!seen.insert(*key).second)
            return;
        const auto beta = static_cast<std::int64_t>(min_clique_partition(h, h.all()).size());
        const auto alpha = static_cast<std::int64_t>(count(max_independent_set(h, h.all())));
        const Rational ratio(beta, alpha);
        const auto peel = peel_clique_cover(graph_from_dense(h));
        const bool ratio_ok = ratio <= bound;
        const bool peel_ok = static_cast<std::int64_t>(peel.cover.size()) <= alpha * bh.value;
        if (ratio > worst || worst_witness.is_null()) {
            worst = ratio;
            worst_witness = {{"model", model_to_json(model_from_masks(input.t, sets))},
                             {"beta", beta},
                             {"alpha", alpha}};
        }
        ratio_violations += ratio_ok ? 0 : 1;
        peel_violations += peel_ok ? 0 : 1;
        if ((!ratio_ok || !peel_ok) && first_violation.is_null())
            first_violation = {{"model", model_to_json(model_from_masks(input.t, sets))},
                               {"beta", beta},
                               {"alpha", alpha},
                               {"peel_cover", peel.cover.size()}};
    });

    r.quantities = {{"beta_hat", std::to_string(bh.value)},
                    {"max_ratio", worst.str()},
                    {"distinct_quotients", std::to_string(seen.size() + unkeyed)},
                    {"ratio_violations", std::to_string(ratio_violations)},
                    {"peel_violations", std::to_string(peel_violations)}};
    r.verdict = ratio_violations == 0 && peel_violations == 0 ? Verdict::pass : Verdict::fail;
    r.witness["max_ratio"] = worst_witness;
    r.witness["beta_hat"] = beta_hat_witness(bh);
    if (!first_violation.is_null())
        r.witness["violation"] = first_violation;
    return r;
}

CheckReport check_peel(const Graph& g, const InstanceDescriptor& input, const Caps& caps)
{
    auto r = start("peel", input);
    const auto peel = peel_clique_cover(g, CoverMode::exact, caps.exact_cover);

    bool independent = true;
    for (std::size_t i = 0; i < peel.independent.size(); ++i)
        for (std::size_t j = i + 1; j < peel.independent.size(); ++j)
            independent = independent && !g.adjacent(peel.independent[i], peel.independent[j]);
    const auto cover_check = verify_cover(g, peel.cover);

    // Each logged step against an independent beta_tilde of the graph left at that point.
    bool steps_optimal = true;
    std::vector<char> alive(g.order(), 1);
    for (const auto& step : peel.log) {
        VertexSet left;
        for (Vertex v = 0; v < g.order(); ++v)
            if (alive[v])
                left.push_back(v);
        const auto sub = induced_subgraph(g, left);
        steps_optimal = steps_optimal && beta_tilde(sub.graph, CoverMode::exact, caps.exact_cover).value == step.beta &&
                        step.cover.size() == step.beta;
        for (const auto& block : step.cover.blocks)
            for (Vertex v : block)
                alive[v] = 0;
    }

    const auto bh0 = beta_hat(g, 0, CoverMode::exact, caps);
    const bool bounded = peel.cover.size() <= peel.independent.size() * bh0.value;

    json trace = json::array();
    for (const auto& step : peel.log)
        trace.push_back({{"vertex", step.vertex}, {"beta", step.beta}, {"cover", cover_to_json(step.cover)}});
    r.quantities = {{"independent", std::to_string(peel.independent.size())},
                    {"cover", std::to_string(peel.cover.size())},
                    {"beta_hat_0", std::to_string(bh0.value)},
                    {"s_independent", yes_no(independent)},
                    {"cover_valid", yes_no(cover_check.ok)},
                    {"steps_optimal", yes_no(steps_optimal)},
                    {"bound_holds", yes_no(bounded)}};
    r.verdict = independent && cover_check.ok && steps_optimal && bounded ? Verdict::pass : Verdict::fail;
    r.witness["independent"] = peel.independent;
    r.witness["trace"] = std::move(trace);
    if (!cover_check.ok)
        r.witness["cover_violation"] = cover_check.violation;
    return r;
}

json report_to_json(const CheckReport& r)
{
    json input = {{"family", r.input.family.family},
                  {"n", r.input.family.n},
                  {"params", r.input.params()},
                  {"seed", r.input.family.seed},
                  {"t", r.input.t}};
    json quantities = json::object();
    for (const auto& q : r.quantities)
        quantities[q.name] = q.value;
    return {{"check", r.check},
            {"input", std::move(input)},
            {"quantities", std::move(quantities)},
            {"verdict", to_string(r.verdict)},
            {"witness", r.witness}};
}

std::string reports_to_jsonl(const std::vector<CheckReport>& reports)
{
    std::string out;
    for (const auto& r : reports)
        out += report_to_json(r).dump() + "\n";
    return out;
}

std::string reports_to_csv(const std::vector<CheckReport>& reports)
{
    std::ostringstream out;
    out << "check,family,n,params,seed,t";
    if (!reports.empty())
        for (const auto& q : reports.front().quantities)
            out << ',' << q.name;
    out << ",verdict\n";
    for (const auto& r : reports) {
        out << r.check << ',' << r.input.family.family << ',' << r.input.family.n << ',' << r.input.params() << ','
            << r.input.family.seed << ',' << r.input.t;
        for (const auto& q : r.quantities)
            out << ',' << q.value;
        out << ',' << to_string(r.verdict) << '\n';
    }
    return out.str();
}

namespace {

std::string default_family(const std::string& check)
{
    if (check == "thm1-chordal")
        return "chordal";
    if (check == "thm1-incomp")
        return "poset";
    return "er";
}

} // namespace

std::vector<InstanceDescriptor> plan_instances(const VerifyConfig& config)
{
    if (std::find(std::begin(check_names), std::end(check_names), config.check) == std::end(check_names))
        throw input_error("unknown check '" + config.check + "'");
    const std::string family = config.family.empty() ? default_family(config.check) : config.family;
    if (!is_known_family(family))
        throw input_error("unknown graph family '" + family + "'");
    if (config.check == "thm1-incomp" && family != "poset")
        throw input_error("thm1-incomp runs on the poset family only");

    const bool random = is_random_family(family);
    const std::uint32_t trials = config.trials ? config.trials : (random ? 100 : 1);
    std::vector<std::uint32_t> depths;
    if (config.check == "peel")
        depths = {0};
    else if (config.t)
        depths = {*config.t};
    else
        depths = {0, 1};
    static constexpr double probabilities[] = {0.3, 0.5, 0.7};

    std::vector<InstanceDescriptor> plan;
    SplitMix64 seeds(config.seed);
    for (std::uint32_t i = 0; i < trials; ++i) {
        FamilyParams params;
        params.family = family;
        params.n = config.n ? config.n : 4 + i % 5;
        params.b = params.n;
        params.p = config.p ? *config.p : probabilities[i % 3];
        params.seed = random ? seeds.next() : 0;
        params.attach_max = config.attach_max;
        for (auto t : depths)
            plan.push_back({params, t});
    }
    return plan;
}

CheckReport run_check(const std::string& check, const InstanceDescriptor& input, const Caps& caps)
{
    if (check == "thm1-incomp") {
        const auto poset = gen_poset_incomparability(input.family.n, input.family.seed, input.family.p);
        return check_thm1_incomparability(poset, input, caps);
    }
    const Graph g = generate(input.family);
    if (check == "thm1-chordal")
        return check_thm1_chordal(g, input, caps);
    if (check == "thm2")
        return check_thm2(g, input, caps);
    if (check == "thm3")
        return check_thm3(g, input, caps);
    if (check == "peel")
        return check_peel(g, input, caps);
    throw input_error("unknown check '" + check + "'");
}

std::vector<CheckReport> run_verify(const VerifyConfig& config)
{
    const auto plan = plan_instances(config);
    std::vector<CheckReport> reports(plan.size());
    std::vector<std::exception_ptr> errors(plan.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < plan.size(); i = next++) {
            try {
                reports[i] = run_check(config.check, plan[i], config.caps);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned jobs = std::max(1U, config.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return reports;
}

} // namespace nbcc
