#ifndef STABRED_BASECHANGE_HPP
#define STABRED_BASECHANGE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stabred/fibergraph.hpp"

namespace stabred {

/// How many connected components lie above each principal component after
/// base change. The dual graph determines this for chain components but not
/// for principal ones (it depends on the cover's monodromy), so it is an
/// explicit, searchable input. Default is 1 (connected cover).
struct SplittingPlan {
    std::map<std::string, Int> overrides;

    Int copies_for(const std::string& id) const {
        auto it = overrides.find(id);
        return it == overrides.end() ? Int(1) : it->second;
    }
};

/// Preimage data of one component under degree-n base change.
struct CoverData {
    std::string base_id;
    Int copies;       // connected components above it
    Int copy_mult;    // mult / gcd(mult, n)
    Int copy_genus;   // from Riemann-Hurwitz
    Int copy_degree;  // gcd(mult, n) / copies
};

/// Common value d = gcd(a_i, a_{i+1}, n) along a chain given with its outer
/// multiplicities; the fiber relation forces all the d_i equal.
Int chain_split_count(const std::vector<Int>& chain_mults, const Int& n);

/// Genus of each of the c components above a component of genus g_F and
/// multiplicity m, via Riemann-Hurwitz:
///   2g' - 2 = delta (2 g_F - 2) + sum_x (d_x / c)(gcd(m,n)/d_x - 1),
/// delta = gcd(m,n)/c, d_x = gcd(a_x, b_x, n) per node x on the component.
Int cover_genus(const Int& g_F, const Int& m, const Int& n, const Int& c,
                const std::vector<std::pair<Int, Int>>& node_data);

/// Per-component preimage data for the given plan (chain components get
/// their forced split count, principal ones the plan's).
std::vector<CoverData> cover_table(const FiberGraph& g, const Int& n, const SplittingPlan& plan);

/// Dual graph of the minimal desingularization of the normalized pullback
/// under tame base change of degree n: component copies with adjusted
/// multiplicity and genus, node preimages distributed round-robin, and a
/// Jung-Hirzebruch chain inserted wherever a point is a tame cyclic
/// quotient singularity. Conserves the fiber genus.
FiberGraph transform(const FiberGraph& g, const Int& n, const SplittingPlan& plan = {});

/// All consistent splitting plans at degree n, each with its transformed
/// graph, in deterministic order.
std::vector<std::pair<SplittingPlan, FiberGraph>> search_splittings(const FiberGraph& g,
                                                                    const Int& n);

}  // namespace stabred

#endif
