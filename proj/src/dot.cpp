#include "stabred/dot.hpp"

#include <optional>
#include <sstream>

#include "stabred/errors.hpp"

namespace stabred {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::optional<Int> try_self_intersection(const FiberGraph& g, std::size_t i) {
    if (g.has_self_loops()) return std::nullopt;
    if (g.size() < 2) return Int(0);  // the fiber relation reads m C^2 = 0
    Int wdeg = g.weighted_degree(i);
    const Int& m = g.component(i).mult;
    if (wdeg % m != 0) return std::nullopt;
    return -wdeg / m;
}

}  // namespace

std::string emit_dot(const FiberGraph& g) {
    std::ostringstream out;
    out << "graph fiber {\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Component& c = g.component(i);
        out << "  " << quoted(c.id) << " [label=\"" << c.id << " g=" << c.genus.str()
            << " m=" << c.mult.str();
        if (auto s = try_self_intersection(g, i)) out << " s=" << s->str();
        out << "\"];\n";
    }
    for (const auto& [u, v] : g.edges())
        out << "  " << quoted(g.component(u).id) << " -- " << quoted(g.component(v).id) << ";\n";
    out << "}\n";
    return out.str();
}

std::string emit_dot(const ReducedGraph& g) {
    ReducedGraph copy = g;
    copy.normalize();
    std::ostringstream out;
    out << "graph reduced {\n";
    for (const auto& [id, genus] : copy.components)
        out << "  " << quoted(id) << " [label=\"" << id << " g=" << genus.str() << "\"];\n";
    for (const auto& [a, b] : copy.edges)
        out << "  " << quoted(a) << " -- " << quoted(b) << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace stabred
