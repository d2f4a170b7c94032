#include "stabred/document.hpp"

#include <limits>

#include "stabred/errors.hpp"

namespace stabred {

json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Int json_to_int(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Int(v.get<std::int64_t>());
    if (v.is_number_unsigned()) return Int(v.get<std::uint64_t>());
    if (v.is_string()) {
        const std::string& s = v.get_ref<const std::string&>();
        try {
            return Int(s);
        } catch (const std::exception&) {
            throw DomainError(Err::SchemaError, where + ": '" + s + "' is not an integer");
        }
    }
    throw DomainError(Err::SchemaError, where + ": expected an integer, got " +
                                            std::string(v.type_name()));
}

namespace {

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) throw DomainError(Err::SchemaError, where + ": unknown field '" + key + "'");
    }
}

}  // namespace

ParsedDocument parse_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(Err::ParseError, e.what());
    }
    if (!doc.is_object())
        throw DomainError(Err::SchemaError, "document root must be an object");
    reject_unknown_keys(doc, {"residue_char", "components", "edges", "splitting"}, "document");

    if (!doc.contains("residue_char"))
        throw DomainError(Err::SchemaError, "missing field 'residue_char'");
    Int p = json_to_int(doc["residue_char"], "residue_char");
    if (p < 0) throw DomainError(Err::SchemaError, "residue_char must be >= 0");
    if (p > 0 && !is_prime(p))
        throw DomainError(Err::SchemaError, "residue_char " + p.str() + " is neither 0 nor prime");

    if (!doc.contains("components") || !doc["components"].is_array())
        throw DomainError(Err::SchemaError, "'components' must be an array");
    std::vector<Component> comps;
    std::size_t ci = 0;
    for (const json& entry : doc["components"]) {
        std::string where = "components[" + std::to_string(ci++) + "]";
        if (!entry.is_object())
            throw DomainError(Err::SchemaError, where + " must be an object");
        reject_unknown_keys(entry, {"id", "genus", "mult"}, where);
        if (!entry.contains("id") || !entry["id"].is_string() ||
            entry["id"].get_ref<const std::string&>().empty())
            throw DomainError(Err::SchemaError, where + ".id must be a non-empty string");
        if (!entry.contains("genus") || !entry.contains("mult"))
            throw DomainError(Err::SchemaError, where + " needs 'genus' and 'mult'");
        Component c;
        c.id = entry["id"].get<std::string>();
        c.genus = json_to_int(entry["genus"], where + ".genus");
        c.mult = json_to_int(entry["mult"], where + ".mult");
        if (c.genus < 0) throw DomainError(Err::SchemaError, where + ".genus must be >= 0");
        if (c.mult < 1) throw DomainError(Err::SchemaError, where + ".mult must be >= 1");
        comps.push_back(std::move(c));
    }

    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw DomainError(Err::SchemaError, "'edges' must be an array");
    std::vector<std::pair<std::string, std::string>> edges;
    std::size_t ei = 0;
    for (const json& entry : doc["edges"]) {
        std::string where = "edges[" + std::to_string(ei++) + "]";
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
            !entry[1].is_string())
            throw DomainError(Err::SchemaError, where + " must be a pair of component ids");
        std::string a = entry[0].get<std::string>(), b = entry[1].get<std::string>();
        bool a_known = false, b_known = false;
        for (const Component& c : comps) {
            if (c.id == a) a_known = true;
            if (c.id == b) b_known = true;
        }
        if (!a_known || !b_known)
            throw DomainError(Err::InvariantError,
                              where + ": unknown component '" + (a_known ? b : a) + "'");
        if (a == b)
            throw DomainError(Err::InvariantError,
                              where + ": a component never meets itself (self-loop at '" + a +
                                  "')");
        edges.emplace_back(std::move(a), std::move(b));
    }

    ParsedDocument out{FiberGraph(p, std::move(comps), edges), std::nullopt};

    if (doc.contains("splitting")) {
        if (!doc["splitting"].is_object())
            throw DomainError(Err::SchemaError, "'splitting' must be an object");
        SplittingPlan plan;
        for (const auto& [id, value] : doc["splitting"].items()) {
            if (!out.graph.has_component(id))
                throw DomainError(Err::InvariantError,
                                  "splitting: unknown component '" + id + "'");
            Int c = json_to_int(value, "splitting." + id);
            if (c < 1)
                throw DomainError(Err::SchemaError, "splitting." + id + " must be >= 1");
            plan.overrides[id] = c;
        }
        out.splitting = std::move(plan);
    }
    return out;
}

json to_json(const FiberGraph& g) {
    json comps = json::array();
    for (const Component& c : g.components())
        comps.push_back({{"id", c.id}, {"genus", int_to_json(c.genus)},
                         {"mult", int_to_json(c.mult)}});
    json edges = json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back(json::array({g.component(u).id, g.component(v).id}));
    return {{"residue_char", int_to_json(g.residue_char())},
            {"components", comps},
            {"edges", edges}};
}

json to_json(const ReducedGraph& g) {
    json comps = json::array();
    for (const auto& [id, genus] : g.components)
        comps.push_back({{"id", id}, {"genus", int_to_json(genus)}});
    json edges = json::array();
    for (const auto& [a, b] : g.edges) edges.push_back(json::array({a, b}));
    return {{"components", comps}, {"edges", edges}};
}

json to_json(const ValidationReport& report) {
    json checks = json::array();
    for (const ValidationCheck& c : report.checks) {
        json entry = {{"name", c.name}, {"passed", c.passed}, {"required", c.required}};
        if (!c.detail.empty()) entry["detail"] = c.detail;
        checks.push_back(std::move(entry));
    }
    json out = {{"checks", checks}, {"ok", report.ok()}};
    out["genus"] = report.fiber_genus ? int_to_json(*report.fiber_genus) : json();
    return out;
}

json to_json(const SaitoReport& report) {
    json violations = json::array();
    for (const SaitoViolation& v : report.violations)
        violations.push_back({{"component", v.component},
                              {"reason", to_string(v.reason)},
                              {"detail", v.detail}});
    return {{"satisfied", report.satisfied}, {"violations", violations}};
}

json to_json(const PrincipalSet& set) {
    return {{"principal", set.ids}, {"minimal_degree", int_to_json(set.minimal_degree)}};
}

json to_json(const OneBranchLocal& local) {
    return {{"b", int_to_json(local.b)},
            {"n", int_to_json(local.n)},
            {"b_prime", int_to_json(local.b_prime)},
            {"sheet_count", int_to_json(local.sheet_count)}};
}

json to_json(const QuotientSingularityParams& params) {
    json out = {{"a", int_to_json(params.a)},       {"b", int_to_json(params.b)},
                {"n", int_to_json(params.n)},       {"a_dd", int_to_json(params.a_dd)},
                {"b_dd", int_to_json(params.b_dd)}, {"n_dd", int_to_json(params.n_dd)},
                {"point_count", int_to_json(params.point_count)},
                {"regular", params.regular()}};
    if (!params.regular()) out["r"] = int_to_json(params.r);
    return out;
}

json to_json(const ResolutionChain& chain) {
    json entries = json::array();
    for (const ChainEntry& e : chain.entries)
        entries.push_back({{"b", int_to_json(e.b)}, {"mu", int_to_json(e.mu)}});
    return {{"entries", entries},
            {"m2", int_to_json(chain.m2)},
            {"m1", int_to_json(chain.m1)}};
}

json to_json(const SplittingPlan& plan) {
    json out = json::object();
    for (const auto& [id, c] : plan.overrides) out[id] = int_to_json(c);
    return out;
}

json to_json(const CoverData& cover) {
    return {{"base_id", cover.base_id},
            {"copies", int_to_json(cover.copies)},
            {"copy_mult", int_to_json(cover.copy_mult)},
            {"copy_genus", int_to_json(cover.copy_genus)},
            {"copy_degree", int_to_json(cover.copy_degree)}};
}

json to_json(const ContractionTrace& trace) {
    json steps = json::array();
    for (const ContractionStep& s : trace.steps)
        steps.push_back({{"id", s.id},
                         {"mult", int_to_json(s.mult)},
                         {"self_intersection", int_to_json(s.self_intersection)}});
    return steps;
}

json to_json(const PipelineReport& report) {
    json stages = json::array();
    for (const Stage& stage : report.stages) {
        json graph = std::holds_alternative<FiberGraph>(stage.graph)
                         ? to_json(std::get<FiberGraph>(stage.graph))
                         : to_json(std::get<ReducedGraph>(stage.graph));
        json checks = json::object();
        for (const auto& [k, v] : stage.checks) checks[k] = v;
        stages.push_back({{"stage", stage.name}, {"graph", graph}, {"checks", checks}});
    }
    json plans = json::array();
    for (const SplittingPlan& p : report.plans_considered) plans.push_back(to_json(p));
    return {{"input_genus", int_to_json(report.input_genus)},
            {"degree_n", int_to_json(report.degree_n)},
            {"principal", report.principal_ids},
            {"stages", stages},
            {"plans_considered", plans},
            {"trace", to_json(report.trace)},
            {"stable_graph", to_json(report.stable_graph)}};
}

json to_json(const std::vector<DivisorProbe>& probes) {
    json out = json::array();
    for (const DivisorProbe& p : probes)
        out.push_back({{"divisor", int_to_json(p.divisor)},
                       {"semi_stable", p.semi_stable},
                       {"detail", p.detail}});
    return out;
}

std::string serialize(const FiberGraph& g) {
    return to_json(g).dump(2) + "\n";
}

}  // namespace stabred
