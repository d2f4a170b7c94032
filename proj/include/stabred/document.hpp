#ifndef STABRED_DOCUMENT_HPP
#define STABRED_DOCUMENT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "stabred/basechange.hpp"
#include "stabred/contract.hpp"
#include "stabred/fibergraph.hpp"
#include "stabred/localmodel.hpp"
#include "stabred/pipeline.hpp"
#include "stabred/saito.hpp"

namespace stabred {

using json = nlohmann::json;

/// Integers round-trip as JSON numbers while they fit in 64 bits and as
/// decimal strings beyond that.
json int_to_json(const Int& v);
Int json_to_int(const json& v, const std::string& where);

struct ParsedDocument {
    FiberGraph graph;
    std::optional<SplittingPlan> splitting;
};

/// Parses a GraphDocument: {"residue_char": p, "components": [{"id",
/// "genus", "mult"}], "edges": [["a","b"], ...], "splitting": {...}?}.
/// Unknown fields, malformed values and violated invariants are rejected
/// with a field-precise diagnostic.
ParsedDocument parse_document(const std::string& text);

json to_json(const FiberGraph& g);
json to_json(const ReducedGraph& g);
json to_json(const ValidationReport& report);
json to_json(const SaitoReport& report);
json to_json(const PrincipalSet& set);
json to_json(const OneBranchLocal& local);
json to_json(const QuotientSingularityParams& params);
json to_json(const ResolutionChain& chain);
json to_json(const SplittingPlan& plan);
json to_json(const CoverData& cover);
json to_json(const ContractionTrace& trace);
json to_json(const PipelineReport& report);
json to_json(const std::vector<DivisorProbe>& probes);

/// Canonical GraphDocument text; parse(serialize(g)) reproduces g.
std::string serialize(const FiberGraph& g);

}  // namespace stabred

#endif
