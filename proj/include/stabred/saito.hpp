#ifndef STABRED_SAITO_HPP
#define STABRED_SAITO_HPP

#include <optional>
#include <string>
#include <vector>

#include "stabred/fibergraph.hpp"

namespace stabred {

/// A component is principal when it is not a chain member: positive genus,
/// or more than two contact points with the rest of the fiber (parallel
/// edges count separately).
bool is_principal(const FiberGraph& g, const std::string& id);

enum class SaitoViolationKind { not_rational, wrong_contact_count, p_divisible_neighbor };

const char* to_string(SaitoViolationKind kind);

struct SaitoViolation {
    std::string component;
    SaitoViolationKind reason;
    std::string detail;
};

/// Verdict of condition (*): every component with p-divisible multiplicity
/// must be rational, meet the rest of the fiber in exactly two points, and
/// both neighbours must have multiplicity prime to p.
struct SaitoReport {
    bool satisfied = true;
    std::vector<SaitoViolation> violations;
};

SaitoReport saito_check(const FiberGraph& g);

/// The principal components and the lcm of their multiplicities: the degree
/// of the minimal tame extension realizing stable reduction.
struct PrincipalSet {
    std::vector<std::string> ids;
    Int minimal_degree;
};

PrincipalSet minimal_degree(const FiberGraph& g);

/// A maximal chain of non-principal components, with its outer principal
/// attachments when present. An end may also be free (a rational tail) or
/// the chain may close into a loop.
struct Chain {
    std::vector<std::string> members;          // in path order
    std::optional<std::string> outer_front;    // principal component at members.front()
    std::optional<std::string> outer_back;     // principal component at members.back()
    bool loop = false;
};

std::vector<Chain> chain_decomposition(const FiberGraph& g);

/// Structural sanity required before running the pipeline: no maximal chain
/// is a loop, and every maximal chain meets a principal component at one
/// end at least. Holds automatically for valid fibers of genus >= 2; throws
/// PreconditionViolated otherwise.
void assert_chain_structure(const FiberGraph& g);

}  // namespace stabred

#endif
