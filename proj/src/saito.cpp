#include "stabred/saito.hpp"

#include <algorithm>
#include <map>

#include "stabred/errors.hpp"

namespace stabred {

bool is_principal(const FiberGraph& g, const std::string& id) {
    std::size_t i = g.index_of(id);
    return g.component(i).genus > 0 || g.valence(i) > 2;
}

const char* to_string(SaitoViolationKind kind) {
    switch (kind) {
        case SaitoViolationKind::not_rational: return "not-rational";
        case SaitoViolationKind::wrong_contact_count: return "wrong-contact-count";
        case SaitoViolationKind::p_divisible_neighbor: return "p-divisible-neighbor";
    }
    return "?";
}

SaitoReport saito_check(const FiberGraph& g) {
    SaitoReport report;
    const Int& p = g.residue_char();
    if (p == 0) return report;  // every divisibility condition is vacuous

    for (std::size_t i = 0; i < g.size(); ++i) {
        const Component& c = g.component(i);
        if (c.mult % p != 0) continue;
        if (c.genus > 0) {
            report.violations.push_back({c.id, SaitoViolationKind::not_rational,
                                         "genus " + c.genus.str() + " > 0"});
        }
        std::size_t contacts = g.valence(i);
        if (contacts != 2) {
            report.violations.push_back({c.id, SaitoViolationKind::wrong_contact_count,
                                         "meets the rest of the fiber in " +
                                             std::to_string(contacts) + " points, not 2"});
        }
        for (std::size_t j : g.adjacent(i)) {
            if (g.component(j).mult % p == 0) {
                report.violations.push_back({c.id, SaitoViolationKind::p_divisible_neighbor,
                                             "neighbour '" + g.component(j).id +
                                                 "' has p-divisible multiplicity " +
                                                 g.component(j).mult.str()});
            }
        }
    }
    report.satisfied = report.violations.empty();
    return report;
}

PrincipalSet minimal_degree(const FiberGraph& g) {
    SaitoReport saito = saito_check(g);
    if (!saito.satisfied)
        throw DomainError(Err::SaitoViolated,
                          "Saito's criterion fails at " + std::to_string(saito.violations.size()) +
                              " component(s); the minimal extension is not tame");
    Int gen = genus(g);
    if (gen < 2)
        throw DomainError(Err::NoPrincipalComponents,
                          "fiber genus " + gen.str() + " < 2; stable reduction needs genus >= 2");

    PrincipalSet out;
    out.minimal_degree = 1;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Component& c = g.component(i);
        if (is_principal(g, c.id)) {
            out.ids.push_back(c.id);
            out.minimal_degree = lcm(out.minimal_degree, c.mult);
        }
    }
    if (out.ids.empty())
        throw DomainError(Err::NoPrincipalComponents,
                          "no principal components found; the graph is not a valid genus >= 2 "
                          "fiber");
    return out;
}

std::vector<Chain> chain_decomposition(const FiberGraph& g) {
    std::size_t n = g.size();
    std::vector<char> principal(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        principal[i] = is_principal(g, g.component(i).id) ? 1 : 0;

    // Adjacency restricted to non-principal components; each such component
    // has at most two edge endpoints in total, so pieces are paths or
    // cycles.
    std::vector<std::vector<std::size_t>> internal(n), external(n);
    for (const auto& [a, b] : g.edges()) {
        if (!principal[a] && !principal[b]) {
            internal[a].push_back(b);
            internal[b].push_back(a);
        } else if (!principal[a]) {
            external[a].push_back(b);
        } else if (!principal[b]) {
            external[b].push_back(a);
        }
    }

    std::vector<Chain> chains;
    std::vector<char> seen(n, 0);
    for (std::size_t start = 0; start < n; ++start) {
        if (principal[start] || seen[start]) continue;
        if (internal[start].size() >= 2) continue;  // not an end; handled from an end or as loop

        Chain chain;
        std::size_t prev = SIZE_MAX, cur = start;
        while (true) {
            seen[cur] = 1;
            chain.members.push_back(g.component(cur).id);
            std::size_t next = SIZE_MAX;
            for (std::size_t cand : internal[cur]) {
                if (cand != prev) {
                    next = cand;
                    break;
                }
            }
            if (next == SIZE_MAX) break;
            prev = cur;
            cur = next;
        }
        std::size_t front = g.index_of(chain.members.front());
        std::size_t back = g.index_of(chain.members.back());
        if (chain.members.size() == 1) {
            // One member: its external attachments fill front then back.
            if (!external[front].empty())
                chain.outer_front = g.component(external[front][0]).id;
            if (external[front].size() > 1)
                chain.outer_back = g.component(external[front][1]).id;
        } else {
            if (!external[front].empty())
                chain.outer_front = g.component(external[front][0]).id;
            if (!external[back].empty()) chain.outer_back = g.component(external[back][0]).id;
        }
        chains.push_back(std::move(chain));
    }

    // Remaining unseen non-principal components sit on cycles.
    for (std::size_t start = 0; start < n; ++start) {
        if (principal[start] || seen[start]) continue;
        Chain chain;
        chain.loop = true;
        std::size_t prev = SIZE_MAX, cur = start;
        while (!seen[cur]) {
            seen[cur] = 1;
            chain.members.push_back(g.component(cur).id);
            std::size_t next = SIZE_MAX;
            for (std::size_t cand : internal[cur]) {
                if (cand != prev && !seen[cand]) {
                    next = cand;
                    break;
                }
            }
            if (next == SIZE_MAX) break;
            prev = cur;
            cur = next;
        }
        chains.push_back(std::move(chain));
    }
    return chains;
}

void assert_chain_structure(const FiberGraph& g) {
    for (const Chain& chain : chain_decomposition(g)) {
        if (chain.loop)
            throw DomainError(Err::PreconditionViolated,
                              "maximal chain through '" + chain.members.front() +
                                  "' is a loop; such a fiber has arithmetic genus 1");
        if (!chain.outer_front && !chain.outer_back)
            throw DomainError(Err::PreconditionViolated,
                              "maximal chain through '" + chain.members.front() +
                                  "' meets no principal component");
    }
}

}  // namespace stabred
