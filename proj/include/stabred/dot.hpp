#ifndef STABRED_DOT_HPP
#define STABRED_DOT_HPP

#include <string>

#include "stabred/fibergraph.hpp"

namespace stabred {

/// Deterministic DOT rendering. Fiber vertices are labelled
/// "id g=<genus> m=<mult> s=<self-intersection>" (s omitted when not
/// defined), reduced vertices "id g=<genus>"; parallel edges and self-loops
/// appear as separate edge statements.
std::string emit_dot(const FiberGraph& g);
std::string emit_dot(const ReducedGraph& g);

}  // namespace stabred

#endif
