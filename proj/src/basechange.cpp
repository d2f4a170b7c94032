#include "stabred/basechange.hpp"

#include <algorithm>
#include <set>

#include "stabred/errors.hpp"
#include "stabred/localmodel.hpp"
#include "stabred/saito.hpp"

namespace stabred {

Int chain_split_count(const std::vector<Int>& chain_mults, const Int& n) {
    if (n < 1) throw DomainError(Err::InvalidParams, "base-change degree must be >= 1");
    if (chain_mults.size() < 2)
        throw DomainError(Err::InvalidParams, "a chain needs at least two multiplicities");
    Int d = gcd(gcd(chain_mults[0], chain_mults[1]), n);
    for (std::size_t i = 1; i + 1 < chain_mults.size(); ++i) {
        Int di = gcd(gcd(chain_mults[i], chain_mults[i + 1]), n);
        if (di != d)
            throw DomainError(Err::InconsistentChain,
                              "gcd(a_i, a_{i+1}, n) is not constant along the chain (" + d.str() +
                                  " vs " + di.str() + "); the fiber relation is violated");
    }
    return d;
}

Int cover_genus(const Int& g_F, const Int& m, const Int& n, const Int& c,
                const std::vector<std::pair<Int, Int>>& node_data) {
    if (g_F < 0 || m < 1 || n < 1 || c < 1)
        throw DomainError(Err::InvalidParams, "cover_genus arguments out of range");
    Int gamma = gcd(m, n);
    if (gamma % c != 0)
        throw DomainError(Err::InconsistentSplitting,
                          "split count " + c.str() + " does not divide gcd(mult, n) = " +
                              gamma.str());
    Int delta = gamma / c;
    Int rhs = delta * (2 * g_F - 2);
    for (const auto& [a_x, b_x] : node_data) {
        Int d_x = gcd(gcd(a_x, b_x), n);
        if (d_x % c != 0)
            throw DomainError(Err::InconsistentSplitting,
                              "split count " + c.str() +
                                  " does not divide the point count gcd(a, b, n) = " + d_x.str() +
                                  " above a node");
        rhs += (d_x / c) * (gamma / d_x - 1);
    }
    Int twice_genus = rhs + 2;
    if (twice_genus % 2 != 0 || twice_genus < 0)
        throw DomainError(Err::InconsistentSplitting,
                          "Riemann-Hurwitz gives 2g' = " + twice_genus.str() +
                              "; the splitting is geometrically impossible");
    return twice_genus / 2;
}

namespace {

struct ComponentCover {
    Int copies;
    Int copy_mult;
    Int copy_genus;
};

std::vector<std::pair<Int, Int>> node_data_of(const FiberGraph& g, std::size_t i) {
    std::vector<std::pair<Int, Int>> nodes;
    const Int& m = g.component(i).mult;
    for (std::size_t j : g.adjacent(i)) nodes.emplace_back(m, g.component(j).mult);
    return nodes;
}

/// Forced number of components above a non-principal (chain) component:
/// the common gcd(a_i, a_{i+1}, n) at its nodes; gcd(m, n) sheets split
/// completely when it has no node at all.
Int forced_split(const FiberGraph& g, std::size_t i, const Int& n) {
    const Int& m = g.component(i).mult;
    auto others = g.adjacent(i);
    if (others.empty()) return gcd(m, n);
    Int d = gcd(gcd(m, g.component(others[0]).mult), n);
    for (std::size_t j : others) {
        Int dj = gcd(gcd(m, g.component(j).mult), n);
        if (dj != d)
            throw DomainError(Err::InconsistentChain,
                              "gcd(a_i, a_{i+1}, n) differs between the nodes of '" +
                                  g.component(i).id + "'");
    }
    return d;
}

std::vector<ComponentCover> plan_covers(const FiberGraph& g, const Int& n,
                                        const SplittingPlan& plan) {
    for (const auto& [id, c] : plan.overrides) {
        if (!g.has_component(id))
            throw DomainError(Err::InconsistentSplitting,
                              "splitting plan names unknown component '" + id + "'");
        if (!is_principal(g, id))
            throw DomainError(Err::InconsistentSplitting,
                              "splitting plan names '" + id +
                                  "', but splitting over chain components is determined by the "
                                  "fiber");
        if (c < 1)
            throw DomainError(Err::InconsistentSplitting,
                              "splitting plan assigns '" + id + "' a count < 1");
    }

    std::vector<ComponentCover> covers(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Component& comp = g.component(i);
        Int c;
        if (is_principal(g, comp.id)) {
            c = plan.copies_for(comp.id);
            if (gcd(comp.mult, n) % c != 0)
                throw DomainError(Err::InconsistentSplitting,
                                  "split count " + c.str() + " over '" + comp.id +
                                      "' does not divide gcd(mult, n)");
            for (std::size_t j : g.adjacent(i)) {
                Int d_x = gcd(gcd(comp.mult, g.component(j).mult), n);
                if (d_x % c != 0)
                    throw DomainError(Err::InconsistentSplitting,
                                      "split count " + c.str() + " over '" + comp.id +
                                          "' does not divide the point count above the node "
                                          "with '" +
                                          g.component(j).id + "'");
            }
        } else {
            c = forced_split(g, i, n);
        }
        covers[i].copies = c;
        covers[i].copy_mult = one_branch(comp.mult, n).b_prime;
        covers[i].copy_genus = cover_genus(comp.genus, comp.mult, n, c, node_data_of(g, i));
    }
    return covers;
}

}  // namespace

std::vector<CoverData> cover_table(const FiberGraph& g, const Int& n, const SplittingPlan& plan) {
    std::vector<ComponentCover> covers = plan_covers(g, n, plan);
    std::vector<CoverData> out;
    out.reserve(covers.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Component& comp = g.component(i);
        out.push_back({comp.id, covers[i].copies, covers[i].copy_mult, covers[i].copy_genus,
                       gcd(comp.mult, n) / covers[i].copies});
    }
    return out;
}

FiberGraph transform(const FiberGraph& g, const Int& n, const SplittingPlan& plan) {
    if (n < 1) throw DomainError(Err::InvalidParams, "base-change degree must be >= 1");
    const Int& p = g.residue_char();
    if (p > 0 && n % p == 0)
        throw DomainError(Err::WildDegree,
                          "degree " + n.str() + " is divisible by the residue characteristic " +
                              p.str() + "; only tame base change is supported");
    if (g.has_self_loops())
        throw DomainError(Err::InvariantError, "cannot base-change a nodal graph");
    if (!g.connected())
        throw DomainError(Err::InvariantError, "input fiber is not connected");
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.size() >= 2 && g.weighted_degree(i) % g.component(i).mult != 0)
            throw DomainError(Err::InvariantError,
                              "input violates self-intersection integrality at '" +
                                  g.component(i).id + "'");

    std::vector<ComponentCover> covers = plan_covers(g, n, plan);

    // Copy names: F' when the cover stays connected, F'0, F'1, ... when it
    // splits. Synthesized names are disambiguated against user ids.
    std::set<std::string> taken;
    for (const Component& c : g.components()) taken.insert(c.id);
    auto claim = [&taken](std::string name) {
        while (taken.count(name)) name += "_";
        taken.insert(name);
        return name;
    };

    std::vector<std::vector<std::string>> copy_names(g.size());
    std::vector<Component> out_comps;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Component& comp = g.component(i);
        Int c = covers[i].copies;
        for (Int k = 0; k < c; ++k) {
            std::string name = comp.id + "'";
            if (c > 1) name += k.str();
            name = claim(name);
            copy_names[i].push_back(name);
            out_comps.push_back({name, covers[i].copy_genus, covers[i].copy_mult});
        }
    }

    std::vector<std::pair<std::string, std::string>> out_edges;
    const auto& edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        // a-side = lexicographically smaller id: a fixed convention; the
        // opposite choice replaces r by its inverse and reverses the chain,
        // giving the same graph.
        std::size_t ai = u, bi = v;
        if (g.component(bi).id < g.component(ai).id) std::swap(ai, bi);
        const Int& a = g.component(ai).mult;
        const Int& b = g.component(bi).mult;
        QuotientSingularityParams params = node_params(a, b, n, p);

        ResolutionChain chain;  // the same above every point of this node
        if (!params.regular())
            chain = resolve_node(params, covers[ai].copy_mult, covers[bi].copy_mult);

        std::size_t ca = copy_names[ai].size(), cb = copy_names[bi].size();
        Int q = params.point_count;
        for (Int k = 0; k < q; ++k) {
            const std::string& acopy = copy_names[ai][static_cast<std::size_t>(k % ca)];
            const std::string& bcopy = copy_names[bi][static_cast<std::size_t>(k % cb)];
            if (params.regular()) {
                out_edges.emplace_back(acopy, bcopy);
                continue;
            }
            std::string prev = bcopy;  // E_1 touches the b-side
            for (std::size_t j = 0; j < chain.entries.size(); ++j) {
                std::string name = claim(g.component(ai).id + "~" + g.component(bi).id + ":" +
                                         std::to_string(e) + ":" + k.str() + ":" +
                                         std::to_string(j + 1));
                out_comps.push_back({name, 0, chain.entries[j].mu});
                out_edges.emplace_back(prev, name);
                prev = name;
            }
            out_edges.emplace_back(prev, acopy);
        }
    }

    FiberGraph out(p, std::move(out_comps), out_edges);
    if (!out.connected())
        throw DomainError(Err::DisconnectedResult,
                          "the plan produces a disconnected fiber, which is geometrically "
                          "impossible; reject the plan");
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out.size() >= 2 && out.weighted_degree(i) % out.component(i).mult != 0)
            throw DomainError(Err::InconsistentSplitting,
                              "output violates self-intersection integrality at '" +
                                  out.component(i).id + "'");
    if (genus(out) != genus(g))
        throw DomainError(Err::InconsistentSplitting,
                          "fiber genus changed under base change (" + genus(g).str() + " -> " +
                              genus(out).str() + "); the plan is inconsistent");
    return out;
}

std::vector<std::pair<SplittingPlan, FiberGraph>> search_splittings(const FiberGraph& g,
                                                                    const Int& n) {
    // Candidate split counts per principal component: divisors of
    // gcd(mult, n) that also divide every point count above its nodes.
    std::vector<std::string> principal_ids;
    std::vector<std::vector<Int>> candidates;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Component& comp = g.component(i);
        if (!is_principal(g, comp.id)) continue;
        Int cap = gcd(comp.mult, n);
        for (std::size_t j : g.adjacent(i))
            cap = gcd(cap, gcd(gcd(comp.mult, g.component(j).mult), n));
        principal_ids.push_back(comp.id);
        candidates.push_back(divisors(cap));
    }

    std::vector<std::pair<SplittingPlan, FiberGraph>> survivors;
    std::vector<std::size_t> pick(principal_ids.size(), 0);
    auto advance = [&]() {
        for (std::size_t pos = pick.size(); pos-- > 0;) {
            if (++pick[pos] < candidates[pos].size()) return true;
            pick[pos] = 0;
        }
        return false;
    };
    while (true) {
        SplittingPlan plan;
        for (std::size_t i = 0; i < principal_ids.size(); ++i)
            if (candidates[i][pick[i]] != 1)
                plan.overrides[principal_ids[i]] = candidates[i][pick[i]];
        try {
            FiberGraph out = transform(g, n, plan);
            survivors.emplace_back(std::move(plan), std::move(out));
        } catch (const DomainError&) {
            // inconsistent plan; skip
        }
        if (!advance()) break;
    }

    if (survivors.empty())
        throw DomainError(Err::EmptyResult,
                          "no consistent splitting plan at degree " + n.str() +
                              "; the input graph is not a valid fiber");
    return survivors;
}

}  // namespace stabred
