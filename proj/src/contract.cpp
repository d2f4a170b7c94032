#include "stabred/contract.hpp"

#include <algorithm>

#include "stabred/errors.hpp"

namespace stabred {

FiberGraph contract_component(const FiberGraph& g, const std::string& id) {
    std::size_t i = g.index_of(id);
    const Component& c = g.component(i);
    for (const auto& [u, v] : g.edges())
        if (u == i && v == i)
            throw DomainError(Err::NotContractible, "'" + id + "' carries a node (self-loop)");
    if (c.genus > 0)
        throw DomainError(Err::NotContractible, "'" + id + "' has genus " + c.genus.str());
    std::size_t val = g.valence(i);
    if (val == 0 || val > 2)
        throw DomainError(Err::NotContractible,
                          "'" + id + "' meets the fiber in " + std::to_string(val) +
                              " points; only chain members and leaves contract");
    if (g.weighted_degree(i) != c.mult)
        throw DomainError(Err::NotContractible,
                          "'" + id + "' has self-intersection != -1 and cannot be contracted "
                          "while keeping the surface regular");

    std::vector<Component> comps;
    for (std::size_t j = 0; j < g.size(); ++j)
        if (j != i) comps.push_back(g.component(j));

    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::size_t> attach;
    for (const auto& [u, v] : g.edges()) {
        if (u == i || v == i) {
            attach.push_back(u == i ? v : u);
        } else {
            edges.emplace_back(g.component(u).id, g.component(v).id);
        }
    }
    // Two attachment points merge into one new node; one attachment point
    // (the leaf case) just disappears.
    if (attach.size() == 2)
        edges.emplace_back(g.component(attach[0]).id, g.component(attach[1]).id);

    return FiberGraph(g.residue_char(), std::move(comps), edges,
                      FiberGraph::EdgePolicy::allow_loops);
}

namespace {

// The non-reduced components must sit in chains of rational valence-2
// components whose maximal runs are bounded by reduced components on both
// sides (a run closing into a cycle has no reduced end and is rejected).
void check_contraction_preconditions(const FiberGraph& g) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Component& c = g.component(i);
        if (c.mult <= 1) continue;
        if (c.genus > 0)
            throw DomainError(Err::PreconditionViolated,
                              "non-reduced component '" + c.id + "' has positive genus");
        if (g.valence(i) != 2)
            throw DomainError(Err::PreconditionViolated,
                              "non-reduced component '" + c.id + "' meets the fiber in " +
                                  std::to_string(g.valence(i)) + " points, not 2");
        auto nb = g.adjacent(i);
        for (std::size_t dir = 0; dir < 2; ++dir) {
            std::size_t prev = i, cur = nb[dir];
            while (g.component(cur).mult > 1) {
                if (cur == i)
                    throw DomainError(Err::PreconditionViolated,
                                      "non-reduced components around '" + c.id +
                                          "' close into a loop with no reduced end");
                if (g.component(cur).genus > 0 || g.valence(cur) != 2)
                    throw DomainError(Err::PreconditionViolated,
                                      "non-reduced component '" + g.component(cur).id +
                                          "' is not a chain member");
                auto next_nb = g.adjacent(cur);
                std::size_t next = (next_nb[0] == prev) ? next_nb[1] : next_nb[0];
                prev = cur;
                cur = next;
            }
        }
    }
}

}  // namespace

std::pair<FiberGraph, ContractionTrace> contract_chains(const FiberGraph& g) {
    check_contraction_preconditions(g);

    FiberGraph cur = g;
    ContractionTrace trace;
    while (true) {
        // maximal multiplicity > 1, smallest id breaking ties
        std::size_t pick = SIZE_MAX;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            const Component& c = cur.component(i);
            if (c.mult <= 1) continue;
            if (pick == SIZE_MAX || c.mult > cur.component(pick).mult) pick = i;
        }
        if (pick == SIZE_MAX) break;

        const Component& c = cur.component(pick);
        if (c.genus > 0 || cur.valence(pick) != 2)
            throw DomainError(Err::PreconditionViolated,
                              "'" + c.id + "' became non-contractible during chain contraction");
        // A maximal multiplicity strictly exceeds both neighbours, which
        // forces self-intersection -1.
        for (std::size_t j : cur.adjacent(pick)) {
            if (cur.component(j).mult >= c.mult)
                throw DomainError(Err::PreconditionViolated,
                                  "maximal multiplicity " + c.mult.str() + " at '" + c.id +
                                      "' does not exceed its neighbour '" +
                                      cur.component(j).id + "'");
        }
        if (cur.weighted_degree(pick) != c.mult)
            throw DomainError(Err::PreconditionViolated,
                              "'" + c.id + "' is not a (-1)-curve");

        trace.steps.push_back({c.id, c.mult, -1});
        cur = contract_component(cur, c.id);
    }
    return {std::move(cur), std::move(trace)};
}

ReducedGraph to_reduced(const FiberGraph& g) {
    ReducedGraph out;
    for (const Component& c : g.components()) {
        if (c.mult != 1)
            throw DomainError(Err::PreconditionViolated,
                              "fiber is not reduced at '" + c.id + "' (mult " + c.mult.str() +
                                  ")");
        out.components.emplace_back(c.id, c.genus);
    }
    for (const auto& [u, v] : g.edges())
        out.edges.emplace_back(g.component(u).id, g.component(v).id);
    out.normalize();
    return out;
}

ReducedGraph stabilize(ReducedGraph g) {
    Int pa = reduced_pa(g);
    while (true) {
        std::size_t n = g.components.size();
        std::size_t victim = SIZE_MAX;
        std::vector<std::string> ends;
        for (std::size_t i = 0; i < n && victim == SIZE_MAX; ++i) {
            const auto& [id, genus] = g.components[i];
            if (genus != 0) continue;
            std::size_t val = 0;
            std::vector<std::string> attach;
            for (const auto& [a, b] : g.edges) {
                if (a == id) {
                    ++val;
                    attach.push_back(b);
                }
                if (b == id) {
                    ++val;
                    if (a != id) attach.push_back(a);
                }
            }
            if (val > 2) continue;
            if (val == 2 && attach.size() < 2)
                throw DomainError(Err::PreconditionViolated,
                                  "isolated rational vertex with a self-loop cannot be "
                                  "stabilized (p_a = 1 input)");
            if (val == 0)
                throw DomainError(Err::PreconditionViolated,
                                  "isolated rational vertex cannot appear in a connected "
                                  "stable reduction");
            victim = i;
            ends = std::move(attach);
        }
        if (victim == SIZE_MAX) break;

        std::string id = g.components[victim].first;
        g.components.erase(g.components.begin() + victim);
        std::vector<std::pair<std::string, std::string>> rest;
        for (const auto& e : g.edges)
            if (e.first != id && e.second != id) rest.push_back(e);
        if (ends.size() == 2) rest.emplace_back(ends[0], ends[1]);
        g.edges = std::move(rest);
        g.normalize();

        if (reduced_pa(g) != pa)
            throw DomainError(Err::InvariantError,
                              "p_a changed during stabilization; this is a bug");
    }
    return g;
}

ReducedGraph to_stable(const FiberGraph& g) {
    ReducedGraph reduced = to_reduced(g);
    Int pa = reduced_pa(reduced);
    if (pa < 2)
        throw DomainError(Err::GenusTooSmall,
                          "arithmetic genus " + pa.str() + " < 2; stability is undefined");
    return stabilize(std::move(reduced));
}

}  // namespace stabred
