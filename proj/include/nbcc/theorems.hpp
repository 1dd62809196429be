#pragma once

#include "caps.hpp"
#include "clique_cover.hpp"
#include "families.hpp"
#include "graph.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace nbcc {

struct PeelStep {
    Vertex vertex = 0;          // x_i, host id
    std::uint32_t beta = 0;     // beta of the remaining graph's N[x_i]
    CliqueCover cover;          // B_i, host ids
    std::uint32_t remaining = 0; // vertices left before this step
};

struct PeelResult {
    VertexSet independent; // sorted; picks in order are in `log`
    CliqueCover cover;     // concatenation of every B_i
    std::vector<PeelStep> log;
};

// Repeatedly pick, in what is left of g, a vertex whose closed neighbourhood
// has the smallest clique cover number (lowest id on ties), record an optimal
// cover of that neighbourhood and delete it.
PeelResult peel_clique_cover(const Graph& g, CoverMode mode = CoverMode::exact,
                             std::uint32_t cap = Caps::default_exact_cover);

enum class Verdict { pass, fail, stronger_form_fail };
std::string to_string(Verdict v);

struct InstanceDescriptor {
    FamilyParams family;
    std::uint32_t t = 0;

    std::string params() const; // "p=0.5", "attach_max=3", ...
};

struct Quantity {
    std::string name;
    std::string value;
};

struct CheckReport {
    std::string check;
    InstanceDescriptor input;
    std::vector<Quantity> quantities;
    Verdict verdict = Verdict::pass;
    nlohmann::ordered_json witness;

    const std::string& quantity(const std::string& name) const;
};

// beta_hat_t(G) = 1 and every enumerated quotient is chordal.
// Throws precondition_error for a non-chordal graph.
CheckReport check_thm1_chordal(const Graph& g, const InstanceDescriptor& input, const Caps& caps = {});

// beta_hat_t <= s_t + 1 decides the verdict; beta_hat_t <= s_t is tracked as
// the stronger form.
CheckReport check_thm1_incomparability(const PosetInstance& poset, const InstanceDescriptor& input,
                                       const Caps& caps = {});

// beta_hat/2 <= grad <= p * beta_hat and grad <= grad_hat <= 2 grad.
CheckReport check_thm2(const Graph& g, const InstanceDescriptor& input, const Caps& caps = {});

// beta(H)/alpha(H) <= beta_hat_t(G) for every t-minor H, plus the peeling
// bound |peel cover of H| <= alpha(H) * beta_hat_t(G).
CheckReport check_thm3(const Graph& g, const InstanceDescriptor& input, const Caps& caps = {});

// Peeling output: S independent, cover valid, |B_i| = beta_tilde(H^i) and
// |cover| <= |S| * beta_hat_0(G).
CheckReport check_peel(const Graph& g, const InstanceDescriptor& input, const Caps& caps = {});

nlohmann::ordered_json report_to_json(const CheckReport& r);
std::string reports_to_jsonl(const std::vector<CheckReport>& reports);
// Columns: check, family, n, params, seed, t, <quantities...>, verdict.
std::string reports_to_csv(const std::vector<CheckReport>& reports);

inline constexpr const char* check_names[] = {"thm1-chordal", "thm1-incomp", "thm2", "thm3", "peel"};

struct VerifyConfig {
    std::string check;
    std::string family;                 // empty: the check's default family
    std::uint32_t trials = 0;           // 0: 100 for random families, 1 otherwise
    std::uint32_t n = 0;                // 0: cycle through 4..8
    std::optional<std::uint32_t> t;     // unset: both 0 and 1
    std::optional<double> p;            // unset: cycle through 0.3, 0.5, 0.7
    std::uint64_t seed = 1;             // master seed
    std::uint32_t attach_max = 3;
    unsigned jobs = 1;
    Caps caps;
};

// The instances a verify run will check, in report order.
std::vector<InstanceDescriptor> plan_instances(const VerifyConfig& config);

// Regenerates the instance from its descriptor and runs one check.
CheckReport run_check(const std::string& check, const InstanceDescriptor& input, const Caps& caps = {});

// Runs every planned instance; output order does not depend on `jobs`.
std::vector<CheckReport> run_verify(const VerifyConfig& config);

} // namespace nbcc
