#ifndef STABRED_PIPELINE_HPP
#define STABRED_PIPELINE_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stabred/basechange.hpp"
#include "stabred/contract.hpp"
#include "stabred/fibergraph.hpp"
#include "stabred/saito.hpp"

namespace stabred {

struct Stage {
    std::string name;
    std::variant<FiberGraph, ReducedGraph> graph;
    std::map<std::string, std::string> checks;  // check name -> result
};

/// Staged record of one full run: input, resolved model after base change,
/// semi-stable model, stable model, with the invariant checks evaluated at
/// each stage. Deterministic for identical inputs.
struct PipelineReport {
    Int input_genus;
    Int degree_n;
    std::vector<std::string> principal_ids;
    std::vector<Stage> stages;                 // for the first surviving plan
    std::vector<SplittingPlan> plans_considered;  // surviving plans, in search order
    ContractionTrace trace;
    ReducedGraph stable_graph;
};

/// Full computation: validate, Saito check, minimal degree, base change
/// (with the given plan, or searching all consistent plans), chain
/// contraction, stabilization. All stages must conserve the fiber genus.
/// Throws AmbiguousSplitting when surviving plans give non-isomorphic
/// stable graphs; the dual graph genuinely underdetermines the answer then.
PipelineReport run(const FiberGraph& g, const std::optional<SplittingPlan>& plan = {});

struct DivisorProbe {
    Int divisor;
    bool semi_stable;  // must be false for every proper divisor (minimality)
    std::string detail;
};

/// Executable check of minimality: for every proper divisor d of the
/// minimal degree, base change of degree d followed by chain contraction
/// must fail to reach a reduced fiber, under every splitting plan.
std::vector<DivisorProbe> probe_minimality(const FiberGraph& g);

}  // namespace stabred

#endif
