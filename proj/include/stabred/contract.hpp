#ifndef STABRED_CONTRACT_HPP
#define STABRED_CONTRACT_HPP

#include <string>
#include <utility>
#include <vector>

#include "stabred/fibergraph.hpp"

namespace stabred {

struct ContractionStep {
    std::string id;
    Int mult;               // multiplicity at the moment of contraction
    Int self_intersection;  // always -1: only (-1)-curves are contracted
};

struct ContractionTrace {
    std::vector<ContractionStep> steps;
};

/// Contracts a rational (-1)-component with at most two contact points.
/// Its two attachment points merge into a new node; when both edges go to
/// the same neighbour the node lands on that component, producing a
/// self-loop (the graph is then nodal and only fit for the reduced stage).
FiberGraph contract_component(const FiberGraph& g, const std::string& id);

/// Contraction to semi-stability: repeatedly contracts, within the chains
/// of non-reduced components, a component of maximal multiplicity (always a
/// (-1)-curve, always strictly above its neighbours), until the fiber is
/// reduced. Requires every non-reduced component to be a rational chain
/// member whose maximal chain is bounded by reduced components.
std::pair<FiberGraph, ContractionTrace> contract_chains(const FiberGraph& g);

/// Forgets multiplicities of an everywhere-reduced fiber.
ReducedGraph to_reduced(const FiberGraph& g);

/// Stable dual graph of an everywhere-reduced fiber of genus >= 2:
/// iteratively removes rational vertices of valence <= 2 (valence-2 removal
/// merges the two incident edges, possibly into a self-loop) until every
/// rational vertex has valence >= 3. Preserves p_a throughout.
ReducedGraph to_stable(const FiberGraph& g);

/// Same stabilization, starting from reduced-curve data.
ReducedGraph stabilize(ReducedGraph g);

}  // namespace stabred

#endif
