#include "stabred/pipeline.hpp"

#include <algorithm>

#include "stabred/errors.hpp"

namespace stabred {

namespace {

std::string plan_to_string(const SplittingPlan& plan) {
    if (plan.overrides.empty()) return "{default}";
    std::string out = "{";
    for (const auto& [id, c] : plan.overrides) {
        if (out.size() > 1) out += ", ";
        out += id + ": " + c.str();
    }
    return out + "}";
}

}  // namespace

PipelineReport run(const FiberGraph& g, const std::optional<SplittingPlan>& plan) {
    ValidationReport input_checks = validate(g);
    if (!input_checks.ok()) {
        std::string why;
        for (const auto& c : input_checks.checks)
            if (c.required && !c.passed) why += (why.empty() ? "" : "; ") + c.name;
        throw DomainError(Err::InvariantError, "input graph is not a valid fiber: " + why);
    }

    PipelineReport report;
    report.input_genus = genus(g);

    SaitoReport saito = saito_check(g);
    if (!saito.satisfied)
        throw DomainError(Err::SaitoViolated,
                          "Saito's criterion fails; no tame extension realizes stable reduction");
    assert_chain_structure(g);

    PrincipalSet principal = minimal_degree(g);  // enforces genus >= 2
    report.degree_n = principal.minimal_degree;
    report.principal_ids = principal.ids;

    Stage input_stage{"input", g, {}};
    input_stage.checks["validate"] = "pass";
    input_stage.checks["saito"] = "satisfied";
    input_stage.checks["genus"] = report.input_genus.str();
    report.stages.push_back(std::move(input_stage));

    // Base change + normalization + minimal desingularization, fused: the
    // transformed graph is the fiber of X'_md.
    std::vector<std::pair<SplittingPlan, FiberGraph>> survivors;
    if (plan) {
        survivors.emplace_back(*plan, transform(g, report.degree_n, *plan));
    } else {
        survivors = search_splittings(g, report.degree_n);
    }

    struct Outcome {
        SplittingPlan plan;
        FiberGraph resolved;
        FiberGraph semistable;
        ContractionTrace trace;
        ReducedGraph stable;
    };
    std::vector<Outcome> outcomes;
    for (auto& [p, resolved] : survivors) {
        report.plans_considered.push_back(p);
        if (genus(resolved) != report.input_genus)
            throw DomainError(Err::InconsistentSplitting,
                              "genus not conserved by base change under plan " +
                                  plan_to_string(p));
        auto [semistable, trace] = contract_chains(resolved);
        ReducedGraph reduced = to_reduced(semistable);
        if (reduced_pa(reduced) != report.input_genus)
            throw DomainError(Err::InvariantError,
                              "genus not conserved by chain contraction under plan " +
                                  plan_to_string(p));
        ReducedGraph stable = stabilize(reduced);
        if (reduced_pa(stable) != report.input_genus)
            throw DomainError(Err::InvariantError, "p_a not conserved by stabilization");
        outcomes.push_back({std::move(p), std::move(resolved), std::move(semistable),
                            std::move(trace), std::move(stable)});
    }

    // Distinct stable graphs up to isomorphism. More than one means the
    // dual graph does not determine the answer; refuse to pick.
    std::vector<std::size_t> representatives;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        bool fresh = true;
        for (std::size_t r : representatives)
            if (isomorphic(outcomes[i].stable, outcomes[r].stable)) {
                fresh = false;
                break;
            }
        if (fresh) representatives.push_back(i);
    }
    if (representatives.size() > 1) {
        std::string plans;
        for (std::size_t r : representatives)
            plans += (plans.empty() ? "" : " vs ") + plan_to_string(outcomes[r].plan);
        throw DomainError(Err::AmbiguousSplitting,
                          std::to_string(representatives.size()) +
                              " non-isomorphic stable graphs survive the search (" + plans +
                              "); the dual graph does not determine the splitting");
    }

    const Outcome& chosen = outcomes.front();

    Stage resolved_stage{"resolved", chosen.resolved, {}};
    resolved_stage.checks["validate"] = validate(chosen.resolved).ok() ? "pass" : "fail";
    resolved_stage.checks["genus"] = genus(chosen.resolved).str();
    resolved_stage.checks["plan"] = plan_to_string(chosen.plan);
    report.stages.push_back(std::move(resolved_stage));

    Stage semi_stage{"semi-stable", chosen.semistable, {}};
    bool all_reduced = true;
    for (const Component& c : chosen.semistable.components())
        if (c.mult != 1) all_reduced = false;
    semi_stage.checks["all-multiplicities-1"] = all_reduced ? "pass" : "fail";
    semi_stage.checks["nodal"] = chosen.semistable.has_self_loops() ? "yes" : "no";
    semi_stage.checks["genus"] = reduced_pa(to_reduced(chosen.semistable)).str();
    semi_stage.checks["contractions"] = std::to_string(chosen.trace.steps.size());
    report.stages.push_back(std::move(semi_stage));

    Stage stable_stage{"stable", chosen.stable, {}};
    stable_stage.checks["pa"] = reduced_pa(chosen.stable).str();
    bool stable_ok = true;
    for (const auto& [id, gv] : chosen.stable.components) {
        if (gv != 0) continue;
        std::size_t val = 0;
        for (const auto& [a, b] : chosen.stable.edges) {
            if (a == id) ++val;
            if (b == id) ++val;
        }
        if (val < 3) stable_ok = false;
    }
    stable_stage.checks["stable"] = stable_ok ? "pass" : "fail";
    report.stages.push_back(std::move(stable_stage));

    report.trace = chosen.trace;
    report.stable_graph = chosen.stable;
    return report;
}

std::vector<DivisorProbe> probe_minimality(const FiberGraph& g) {
    PrincipalSet principal = minimal_degree(g);
    const Int& n = principal.minimal_degree;

    std::vector<DivisorProbe> out;
    for (const Int& d : divisors(n)) {
        if (d == n) continue;
        // d divides n and p never divides n, so every probe degree is tame.
        DivisorProbe probe{d, false, ""};
        try {
            auto survivors = search_splittings(g, d);
            for (auto& [plan, resolved] : survivors) {
                try {
                    auto [semistable, trace] = contract_chains(resolved);
                    (void)semistable;
                    (void)trace;
                    probe.semi_stable = true;
                    probe.detail = "degree " + d.str() + " reaches a reduced fiber under plan " +
                                   plan_to_string(plan);
                    break;
                } catch (const DomainError& e) {
                    probe.detail = e.what();
                }
            }
        } catch (const DomainError& e) {
            probe.detail = e.what();
        }
        out.push_back(std::move(probe));
    }
    return out;
}

}  // namespace stabred
