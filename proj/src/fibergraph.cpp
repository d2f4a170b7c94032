#include "stabred/fibergraph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>

#include "stabred/errors.hpp"

namespace stabred {

FiberGraph::FiberGraph(Int residue_char, std::vector<Component> components,
                       const std::vector<std::pair<std::string, std::string>>& edges,
                       EdgePolicy policy)
    : residue_char_(std::move(residue_char)) {
    if (residue_char_ < 0 || (residue_char_ > 0 && !is_prime(residue_char_)))
        throw DomainError(Err::InvariantError, "residue characteristic must be 0 or prime");

    std::sort(components.begin(), components.end(),
              [](const Component& a, const Component& b) { return a.id < b.id; });
    components_ = std::move(components);
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const Component& c = components_[i];
        if (c.genus < 0)
            throw DomainError(Err::InvariantError, "component '" + c.id + "' has negative genus");
        if (c.mult < 1)
            throw DomainError(Err::InvariantError, "component '" + c.id + "' has multiplicity < 1");
        if (!index_.emplace(c.id, i).second)
            throw DomainError(Err::InvariantError, "duplicate component id '" + c.id + "'");
    }

    edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        std::size_t i = index_of(a), j = index_of(b);
        if (i == j && policy == EdgePolicy::strict)
            throw DomainError(Err::InvariantError,
                              "self-loop at '" + a + "' (SNC components are smooth)");
        edges_.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(edges_.begin(), edges_.end());
}

const Component& FiberGraph::component(const std::string& id) const {
    return components_[index_of(id)];
}

std::size_t FiberGraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw DomainError(Err::UnknownComponent, "no component with id '" + id + "'");
    return it->second;
}

std::size_t FiberGraph::valence(std::size_t i) const {
    std::size_t v = 0;
    for (const auto& [a, b] : edges_) {
        if (a == i) ++v;
        if (b == i) ++v;
    }
    return v;
}

Int FiberGraph::weighted_degree(std::size_t i) const {
    Int sum = 0;
    for (const auto& [a, b] : edges_) {
        if (a == i) sum += components_[b].mult;
        if (b == i && a != b) sum += components_[a].mult;
    }
    return sum;
}

std::vector<std::size_t> FiberGraph::adjacent(std::size_t i) const {
    std::vector<std::size_t> out;
    for (const auto& [a, b] : edges_) {
        if (a == i) out.push_back(b);
        else if (b == i) out.push_back(a);
    }
    return out;
}

bool FiberGraph::connected() const {
    if (components_.empty()) return false;
    std::vector<char> seen(components_.size(), 0);
    std::vector<std::size_t> stack = {0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (const auto& [a, b] : edges_) {
            std::size_t other;
            if (a == v) other = b;
            else if (b == v) other = a;
            else continue;
            if (!seen[other]) {
                seen[other] = 1;
                ++count;
                stack.push_back(other);
            }
        }
    }
    return count == components_.size();
}

bool FiberGraph::has_self_loops() const {
    for (const auto& [a, b] : edges_)
        if (a == b) return true;
    return false;
}

void ReducedGraph::normalize() {
    std::sort(components.begin(), components.end());
    for (auto& [a, b] : edges)
        if (b < a) std::swap(a, b);
    std::sort(edges.begin(), edges.end());
}

bool ValidationReport::ok() const {
    for (const auto& c : checks)
        if (c.required && !c.passed) return false;
    return true;
}

Int self_intersection(const FiberGraph& g, const std::string& id) {
    std::size_t i = g.index_of(id);
    if (g.has_self_loops())
        throw DomainError(Err::InvariantError,
                          "self-intersection is undefined on a nodal (self-loop) graph");
    if (g.size() < 2)
        throw DomainError(Err::UndefinedSelfIntersection,
                          "single-component fiber: self-intersection is 0, not determined by "
                          "the fiber relation");
    Int wdeg = g.weighted_degree(i);
    const Int& m = g.component(i).mult;
    if (wdeg % m != 0)
        throw DomainError(Err::NonIntegralSelfIntersection,
                          "mult(" + id + ") does not divide the neighbour multiplicity sum");
    return -wdeg / m;
}

Int genus(const FiberGraph& g) {
    if (g.size() == 0)
        throw DomainError(Err::InvariantError, "genus of the empty graph is undefined");
    if (g.has_self_loops())
        throw DomainError(Err::InvariantError, "genus is undefined on a nodal (self-loop) graph");
    // 1 + (1/2) sum m_i (2 g_i - 2 - C_i^2); the product m_i C_i^2 equals
    // -weighted_degree(i) exactly, so the sum below is already integral.
    Int s = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Component& c = g.component(i);
        s += c.mult * (2 * c.genus - 2) + g.weighted_degree(i);
    }
    if (s % 2 != 0)
        throw DomainError(Err::NonIntegralGenus, "fiber genus is not an integer");
    Int result = 1 + s / 2;
    if (result < 0)
        throw DomainError(Err::NegativeGenus,
                          "fiber genus " + result.str() + " is negative; the graph is not the "
                          "dual graph of a fiber");
    return result;
}

Int reduced_pa(const ReducedGraph& g) {
    Int total = 0;
    for (const auto& [id, genus] : g.components) total += genus;
    return total + Int(g.edges.size()) - Int(g.components.size()) + 1;
}

ValidationReport validate(const FiberGraph& g) {
    ValidationReport report;
    auto add = [&](const std::string& name, bool passed, bool required,
                   const std::string& detail) {
        report.checks.push_back({name, passed, required, detail});
    };

    add("connected", g.connected(), true, g.connected() ? "" : "special fibers are connected");

    bool loops = g.has_self_loops();
    add("no-self-loops", !loops, true, loops ? "SNC components never meet themselves" : "");

    bool integral = true;
    std::string bad;
    if (g.size() >= 2) {
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g.weighted_degree(i) % g.component(i).mult != 0) {
                integral = false;
                if (!bad.empty()) bad += ", ";
                bad += g.component(i).id;
            }
        }
    }
    add("self-intersection-integrality", integral, true,
        integral ? "" : "mult does not divide the neighbour sum at: " + bad);

    bool tame = true;
    std::string wild_edges;
    if (g.residue_char() > 0) {
        const Int& p = g.residue_char();
        for (const auto& [a, b] : g.edges()) {
            if (g.component(a).mult % p == 0 && g.component(b).mult % p == 0) {
                tame = false;
                if (!wild_edges.empty()) wild_edges += ", ";
                wild_edges += "{" + g.component(a).id + "," + g.component(b).id + "}";
            }
        }
    }
    add("tame-intersections", tame, true,
        tame ? "" : "both endpoint multiplicities divisible by p at: " + wild_edges);

    if (!loops) {
        try {
            Int gen = genus(g);
            report.fiber_genus = gen;
            add("genus-non-negative", true, true, "");
            add("genus-at-least-2", gen >= 2, false,
                gen >= 2 ? "" : "fiber genus " + gen.str() + " < 2; the pipeline requires >= 2");
        } catch (const DomainError& e) {
            add("genus-non-negative", false, true, e.what());
            add("genus-at-least-2", false, false, "genus not computable");
        }
    } else {
        add("genus-non-negative", false, true, "genus not computable on a nodal graph");
        add("genus-at-least-2", false, false, "genus not computable on a nodal graph");
    }

    // Necessary condition for minimality of the SNC model: no rational
    // (-1)-component meeting the rest in at most two points. The dual graph
    // cannot certify minimality outright, so this only warns.
    bool minimal_ok = true;
    std::string contractible;
    if (integral && !loops && g.size() >= 2) {
        for (std::size_t i = 0; i < g.size(); ++i) {
            const Component& c = g.component(i);
            if (c.genus == 0 && g.valence(i) <= 2 && g.weighted_degree(i) == c.mult) {
                minimal_ok = false;
                if (!contractible.empty()) contractible += ", ";
                contractible += c.id;
            }
        }
    }
    add("minimal-model-necessary-condition", minimal_ok, false,
        minimal_ok ? ""
                   : "rational (-1)-components with at most two contact points: " + contractible +
                         "; the model may not be minimal");

    return report;
}

namespace {

std::string fresh_id(const FiberGraph& g, const std::string& prefix) {
    for (std::size_t k = 1;; ++k) {
        std::string candidate = prefix + std::to_string(k);
        if (!g.has_component(candidate)) return candidate;
    }
}

}  // namespace

FiberGraph blow_up_edge(const FiberGraph& g, const std::string& a, const std::string& b) {
    std::size_t i = g.index_of(a), j = g.index_of(b);
    std::vector<Component> comps = g.components();
    std::vector<std::pair<std::string, std::string>> edges;
    bool removed = false;
    for (const auto& [u, v] : g.edges()) {
        if (!removed && ((u == i && v == j) || (u == j && v == i))) {
            removed = true;
            continue;
        }
        edges.emplace_back(g.component(u).id, g.component(v).id);
    }
    if (!removed)
        throw DomainError(Err::UnknownComponent, "no edge {" + a + "," + b + "} to blow up");
    std::string x = fresh_id(g, "x");
    comps.push_back({x, 0, g.component(i).mult + g.component(j).mult});
    edges.emplace_back(x, a);
    edges.emplace_back(x, b);
    return FiberGraph(g.residue_char(), std::move(comps), edges);
}

FiberGraph blow_up_point(const FiberGraph& g, const std::string& c) {
    std::size_t i = g.index_of(c);
    std::vector<Component> comps = g.components();
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [u, v] : g.edges())
        edges.emplace_back(g.component(u).id, g.component(v).id);
    std::string x = fresh_id(g, "x");
    comps.push_back({x, 0, g.component(i).mult});
    edges.emplace_back(x, c);
    return FiberGraph(g.residue_char(), std::move(comps), edges);
}

namespace {

// Decorated multigraph stripped to what isomorphism sees: a vertex label
// and an adjacency multiset (self-loops kept separately).
struct Skeleton {
    std::vector<std::string> label;
    std::vector<std::map<std::size_t, std::size_t>> adj;  // neighbour -> edge count
    std::vector<std::size_t> loops;
};

Skeleton skeleton_of(const FiberGraph& g) {
    Skeleton s;
    s.label.resize(g.size());
    s.adj.resize(g.size());
    s.loops.assign(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i)
        s.label[i] = g.component(i).genus.str() + ":" + g.component(i).mult.str();
    for (const auto& [a, b] : g.edges()) {
        if (a == b) {
            ++s.loops[a];
        } else {
            ++s.adj[a][b];
            ++s.adj[b][a];
        }
    }
    return s;
}

Skeleton skeleton_of(const ReducedGraph& g) {
    Skeleton s;
    std::map<std::string, std::size_t> index;
    s.label.resize(g.components.size());
    s.adj.resize(g.components.size());
    s.loops.assign(g.components.size(), 0);
    for (std::size_t i = 0; i < g.components.size(); ++i) {
        index[g.components[i].first] = i;
        s.label[i] = g.components[i].second.str();
    }
    for (const auto& [a, b] : g.edges) {
        std::size_t i = index.at(a), j = index.at(b);
        if (i == j) {
            ++s.loops[i];
        } else {
            ++s.adj[i][j];
            ++s.adj[j][i];
        }
    }
    return s;
}

// Colour refinement over both graphs simultaneously, then backtracking on
// colour classes.
bool skeleton_isomorphic(const Skeleton& A, const Skeleton& B) {
    std::size_t n = A.label.size();
    if (B.label.size() != n) return false;

    std::vector<std::size_t> ca(n), cb(n);
    {
        std::map<std::string, std::size_t> palette;
        auto init = [&](const Skeleton& s, std::vector<std::size_t>& colour) {
            for (std::size_t i = 0; i < n; ++i) {
                std::string key = s.label[i] + "|" + std::to_string(s.loops[i]);
                auto [it, _] = palette.emplace(key, palette.size());
                colour[i] = it->second;
            }
        };
        init(A, ca);
        init(B, cb);
    }

    for (std::size_t round = 0; round < n; ++round) {
        std::map<std::string, std::size_t> palette;
        auto refine = [&](const Skeleton& s, const std::vector<std::size_t>& colour,
                          std::vector<std::size_t>& next) {
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<std::pair<std::size_t, std::size_t>> sig;
                for (const auto& [j, count] : s.adj[i]) sig.emplace_back(colour[j], count);
                std::sort(sig.begin(), sig.end());
                std::ostringstream key;
                key << colour[i];
                for (const auto& [c, k] : sig) key << "," << c << "x" << k;
                auto [it, _] = palette.emplace(key.str(), palette.size());
                next[i] = it->second;
            }
        };
        std::vector<std::size_t> na(n), nb(n);
        refine(A, ca, na);
        refine(B, cb, nb);
        bool changed = (na != ca) || (nb != cb);
        ca = std::move(na);
        cb = std::move(nb);
        if (!changed) break;
    }

    std::vector<std::size_t> histA(ca), histB(cb);
    std::sort(histA.begin(), histA.end());
    std::sort(histB.begin(), histB.end());
    if (histA != histB) return false;

    // Backtracking assignment, most-constrained colour classes first.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::map<std::size_t, std::size_t> class_size;
    for (std::size_t c : ca) ++class_size[c];
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (class_size[ca[x]] != class_size[ca[y]]) return class_size[ca[x]] < class_size[ca[y]];
        return x < y;
    });

    std::vector<std::size_t> image(n, SIZE_MAX);
    std::vector<char> used(n, 0);

    auto compatible = [&](std::size_t a, std::size_t b) {
        if (ca[a] != cb[b]) return false;
        if (A.loops[a] != B.loops[b]) return false;
        for (const auto& [j, count] : A.adj[a]) {
            if (image[j] == SIZE_MAX) continue;
            auto it = B.adj[b].find(image[j]);
            if (it == B.adj[b].end() || it->second != count) return false;
        }
        return true;
    };

    // No extra edges on the B side: mapped preimages of b's neighbours must
    // carry the same counts towards a.
    auto reverse_ok = [&](std::size_t a, std::size_t b) {
        for (const auto& [jb, count] : B.adj[b]) {
            for (std::size_t ja = 0; ja < n; ++ja) {
                if (image[ja] == jb) {
                    auto it = A.adj[a].find(ja);
                    if (it == A.adj[a].end() || it->second != count) return false;
                }
            }
        }
        return true;
    };

    std::function<bool(std::size_t)> place = [&](std::size_t pos) -> bool {
        if (pos == n) return true;
        std::size_t a = order[pos];
        for (std::size_t b = 0; b < n; ++b) {
            if (used[b] || !compatible(a, b)) continue;
            image[a] = b;
            if (reverse_ok(a, b)) {
                used[b] = 1;
                if (place(pos + 1)) return true;
                used[b] = 0;
            }
            image[a] = SIZE_MAX;
        }
        return false;
    };
    return place(0);
}

}  // namespace

bool isomorphic(const FiberGraph& a, const FiberGraph& b) {
    if (a.residue_char() != b.residue_char()) return false;
    if (a.edges().size() != b.edges().size()) return false;
    return skeleton_isomorphic(skeleton_of(a), skeleton_of(b));
}

bool isomorphic(const ReducedGraph& a, const ReducedGraph& b) {
    if (a.edges.size() != b.edges.size()) return false;
    return skeleton_isomorphic(skeleton_of(a), skeleton_of(b));
}

}  // namespace stabred
