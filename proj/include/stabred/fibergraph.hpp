#ifndef STABRED_FIBERGRAPH_HPP
#define STABRED_FIBERGRAPH_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabred/numeric.hpp"

namespace stabred {

/// One irreducible component of an SNC special fiber: arithmetic genus and
/// multiplicity in the fiber divisor. Components are smooth by assumption,
/// so the dual graph carries no further local data.
struct Component {
    std::string id;
    Int genus;  // >= 0
    Int mult;   // >= 1
};

/// Weighted dual graph of an SNC special fiber. Vertices are components,
/// each edge is one transverse intersection point (parallel edges allowed).
///
/// Self-intersections are never stored: the fiber relation E_i . X_k = 0
/// determines them, so every rewriting operation stays coherent by
/// construction. Self-loops are forbidden for SNC fibers; the loop case of
/// chain contraction produces a graph tagged nodal, which is only ever
/// handed on to the reduced/stable stage.
class FiberGraph {
public:
    enum class EdgePolicy { strict, allow_loops };

    FiberGraph(Int residue_char, std::vector<Component> components,
               const std::vector<std::pair<std::string, std::string>>& edges,
               EdgePolicy policy = EdgePolicy::strict);

    const Int& residue_char() const { return residue_char_; }
    std::size_t size() const { return components_.size(); }
    const std::vector<Component>& components() const { return components_; }
    const Component& component(std::size_t i) const { return components_[i]; }
    const Component& component(const std::string& id) const;
    std::size_t index_of(const std::string& id) const;
    bool has_component(const std::string& id) const { return index_.count(id) > 0; }

    /// Edges as index pairs (i <= j), sorted; i == j only in nodal graphs.
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

    /// Number of edge endpoints at i; a self-loop counts twice.
    std::size_t valence(std::size_t i) const;
    /// Sum of the other endpoint's multiplicity over the edges at i.
    Int weighted_degree(std::size_t i) const;
    /// Indices of the other endpoints of the edges at i, one per edge.
    std::vector<std::size_t> adjacent(std::size_t i) const;

    bool connected() const;
    bool has_self_loops() const;

private:
    Int residue_char_;
    std::vector<Component> components_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Reduced nodal curve combinatorics: genus-labelled vertices, edges are
/// nodes, self-loops are nodes of an irreducible component.
struct ReducedGraph {
    std::vector<std::pair<std::string, Int>> components;  // (id, genus), sorted by id
    std::vector<std::pair<std::string, std::string>> edges;

    void normalize();
};

struct ValidationCheck {
    std::string name;
    bool passed;
    bool required;  // false = advisory (warnings, pipeline-only requirements)
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    std::optional<Int> fiber_genus;  // absent when the graph is too broken to compute

    bool ok() const;  // all required checks passed
};

/// Checks the SNC assumptions expressible on the dual graph: connectivity,
/// self-intersection integrality, the standing tameness assumption that no
/// node joins two components with p-divisible multiplicity, plus advisory
/// flags (genus >= 2 needed by the pipeline, a necessary minimality
/// condition that is warned about rather than enforced).
ValidationReport validate(const FiberGraph& g);

/// Derived self-intersection from the fiber relation:
/// mult(c) * c^2 + (sum of neighbour multiplicities) = 0.
Int self_intersection(const FiberGraph& g, const std::string& id);

/// Arithmetic genus of the fiber, 1 + (1/2) sum mult_i (2 g_i - 2 - C_i^2),
/// which equals the genus of the generic fiber for a model's special fiber.
Int genus(const FiberGraph& g);

/// p_a of a reduced nodal curve: total genus plus cycle rank.
Int reduced_pa(const ReducedGraph& g);

/// Blows up the intersection point e = {a, b}: replaces one copy of the
/// edge by a rational component of multiplicity mult(a) + mult(b).
FiberGraph blow_up_edge(const FiberGraph& g, const std::string& a, const std::string& b);

/// Blows up a free point of c: attaches a rational leaf of multiplicity
/// mult(c).
FiberGraph blow_up_point(const FiberGraph& g, const std::string& c);

/// Isomorphism of decorated graphs (genus, mult, adjacency with edge
/// multiplicities). Canonical colour refinement plus backtracking; inputs
/// here are small.
bool isomorphic(const FiberGraph& a, const FiberGraph& b);
bool isomorphic(const ReducedGraph& a, const ReducedGraph& b);

}  // namespace stabred

#endif
