#ifndef STABRED_LOCALMODEL_HPP
#define STABRED_LOCALMODEL_HPP

#include <vector>

#include "stabred/numeric.hpp"

namespace stabred {

/// Local data of degree-n base change at a point on a single component of
/// multiplicity b. The point stays regular; the component picks up
/// gcd(b, n) sheets, each of multiplicity b' = b / gcd(b, n).
struct OneBranchLocal {
    Int b;
    Int n;
    Int b_prime;
    Int sheet_count;
};

OneBranchLocal one_branch(const Int& b, const Int& n);

/// Invariants of the normalized pullback at a node where components of
/// multiplicities a and b cross, under degree-n base change:
///   a'' = a/gcd(a,n),  b'' = b/gcd(b,n),
///   n'' = n gcd(a,b,n) / (gcd(a,n) gcd(b,n)),
///   r in (Z/n'')^* with r b'' + a'' = 0 mod n''.
/// n'' = 1 means every point above the node is a regular crossing; n'' > 1
/// means each is a tame cyclic quotient singularity of type (n'', r).
/// gcd(a, b, n) points lie above the node.
struct QuotientSingularityParams {
    Int a, b, n;  // the node data these were derived from
    Int a_dd, b_dd, n_dd;
    Int r;  // meaningful only when n_dd > 1
    Int point_count;

    bool regular() const { return n_dd == 1; }
};

QuotientSingularityParams node_params(const Int& a, const Int& b, const Int& n, const Int& p);

/// Jung-Hirzebruch expansion n/r = b_1 - 1/(b_2 - 1/(... - 1/b_lambda)),
/// all terms >= 2. Requires n >= 2, 1 <= r < n, gcd(n, r) = 1.
std::vector<Int> jung_hirzebruch(const Int& n, const Int& r);

/// Unique solution of mu_{j-1} + mu_{j+1} - b_j mu_j = 0 with boundary
/// mu_0 = m2, mu_{lambda+1} = m1, solved exactly as a tridiagonal system.
/// Every mu_j must come out a positive integer; anything else signals wrong
/// parameters or a violated orientation convention.
std::vector<Int> chain_multiplicities(const std::vector<Int>& bs, const Int& m2, const Int& m1);

struct ChainEntry {
    Int b;   // self-intersection is -b, b >= 2
    Int mu;  // multiplicity in the fiber
};

/// Exceptional chain of the minimal resolution of one tame cyclic quotient
/// singularity, ordered from E_1 (touching the branch of multiplicity m2,
/// the b-side) to E_lambda (touching the m1 branch, the a-side).
struct ResolutionChain {
    std::vector<ChainEntry> entries;
    Int m2;  // b-side boundary multiplicity
    Int m1;  // a-side boundary multiplicity
};

/// Resolution chain for a singular point with the given parameters.
/// mult_a_side / mult_b_side are the multiplicities of the two branches
/// through the point in the normalized model, i.e. a/gcd(a,n) and
/// b/gcd(b,n). E_1 is attached on the b-side; this orientation realizes
/// the defining congruence m1 = -r m2 mod n''.
ResolutionChain resolve_node(const QuotientSingularityParams& params, const Int& mult_a_side,
                             const Int& mult_b_side);

}  // namespace stabred

#endif
