#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stabred/document.hpp"
#include "stabred/dot.hpp"
#include "stabred/errors.hpp"
#include "testutil.hpp"

using namespace stabred;
using namespace testutil;

static const char* FE_DOC = R"({
  "residue_char": 0,
  "components": [
    {"id": "F", "genus": 1, "mult": 2},
    {"id": "E", "genus": 0, "mult": 1}
  ],
  "edges": [["F", "E"], ["F", "E"]]
})";

TEST_CASE("parse: the F/E document") {
    ParsedDocument doc = parse_document(FE_DOC);
    CHECK(doc.graph.size() == 2);
    CHECK(doc.graph.edges().size() == 2);
    CHECK(doc.graph.component("F").mult == 2);
    CHECK_FALSE(doc.splitting.has_value());
}

TEST_CASE("parse: splitting plans ride along") {
    std::string text = R"({
      "residue_char": 0,
      "components": [{"id": "F", "genus": 2, "mult": 2}],
      "edges": [],
      "splitting": {"F": 2}
    })";
    ParsedDocument doc = parse_document(text);
    REQUIRE(doc.splitting.has_value());
    CHECK(doc.splitting->copies_for("F") == 2);
    CHECK(doc.splitting->copies_for("anything-else") == 1);
}

TEST_CASE("parse: malformed documents carry precise diagnostics") {
    CHECK_THROWS_AS(parse_document("{"), DomainError);
    CHECK_THROWS_AS(parse_document("[]"), DomainError);

    // self-loop
    std::string loop = R"({"residue_char": 0,
      "components": [{"id": "F", "genus": 1, "mult": 1}],
      "edges": [["F", "F"]]})";
    CHECK_THROWS_WITH_AS(parse_document(loop), doctest::Contains("self-loop"), DomainError);

    // zero multiplicity
    std::string mult0 = R"({"residue_char": 0,
      "components": [{"id": "F", "genus": 1, "mult": 0}], "edges": []})";
    CHECK_THROWS_WITH_AS(parse_document(mult0), doctest::Contains("mult"), DomainError);

    // unknown component in an edge
    std::string unknown = R"({"residue_char": 0,
      "components": [{"id": "F", "genus": 1, "mult": 1}],
      "edges": [["F", "Q"]]})";
    CHECK_THROWS_WITH_AS(parse_document(unknown), doctest::Contains("edges[0]"), DomainError);

    // stray field
    std::string stray = R"({"residue_char": 0, "components": [], "edges": [], "oops": 1})";
    CHECK_THROWS_WITH_AS(parse_document(stray), doctest::Contains("oops"), DomainError);

    // composite residue characteristic
    std::string composite = R"({"residue_char": 6, "components": [], "edges": []})";
    CHECK_THROWS_WITH_AS(parse_document(composite), doctest::Contains("prime"), DomainError);
}

TEST_CASE("error codes distinguish schema from invariant failures") {
    try {
        parse_document(R"({"residue_char": 0,
          "components": [{"id": "F", "genus": 1, "mult": 0}], "edges": []})");
        FAIL("expected a throw");
    } catch (const DomainError& e) {
        CHECK(e.code() == Err::SchemaError);
    }
    try {
        parse_document(R"({"residue_char": 0,
          "components": [{"id": "F", "genus": 1, "mult": 1}], "edges": [["F", "F"]]})");
        FAIL("expected a throw");
    } catch (const DomainError& e) {
        CHECK(e.code() == Err::InvariantError);
    }
}

TEST_CASE("parse after serialize is the identity") {
    std::mt19937_64 rng(777111);
    for (int trial = 0; trial < 40; ++trial) {
        FiberGraph g = random_valid_graph(rng);
        ParsedDocument back = parse_document(serialize(g));
        CHECK(to_json(back.graph) == to_json(g));
        CHECK(serialize(back.graph) == serialize(g));
    }
}

TEST_CASE("big integers survive the round trip as strings") {
    Int big("123456789012345678901234567890123456789");
    json encoded = int_to_json(big);
    CHECK(encoded.is_string());
    CHECK(json_to_int(encoded, "x") == big);
    json small = int_to_json(Int(42));
    CHECK(small.is_number_integer());
}

TEST_CASE("emit_dot: single vertex") {
    std::string dot = emit_dot(single_component(2));
    CHECK(dot == "graph fiber {\n  \"A\" [label=\"A g=2 m=1 s=0\"];\n}\n");
}

TEST_CASE("emit_dot: F/E fixture is deterministic with parallel edges") {
    std::string dot = emit_dot(fe_fixture());
    CHECK(dot ==
          "graph fiber {\n"
          "  \"E\" [label=\"E g=0 m=1 s=-4\"];\n"
          "  \"F\" [label=\"F g=1 m=2 s=-1\"];\n"
          "  \"E\" -- \"F\";\n"
          "  \"E\" -- \"F\";\n"
          "}\n");
    CHECK(emit_dot(fe_fixture()) == dot);
}

TEST_CASE("emit_dot: reduced graph with a self-loop") {
    ReducedGraph g{{{"F'", 2}}, {{"F'", "F'"}}};
    std::string dot = emit_dot(g);
    CHECK(dot ==
          "graph reduced {\n"
          "  \"F'\" [label=\"F' g=2\"];\n"
          "  \"F'\" -- \"F'\";\n"
          "}\n");
}

TEST_CASE("emit_dot output fits the DOT grammar") {
    // minimal structural scan: brace balance, one statement per line, all
    // statements terminated
    std::mt19937_64 rng(424241);
    for (int trial = 0; trial < 20; ++trial) {
        FiberGraph g = random_valid_graph(rng);
        std::string dot = emit_dot(g);
        CHECK(dot.substr(0, 12) == "graph fiber ");
        CHECK(dot.back() == '\n');
        std::size_t opens = 0, closes = 0, quotes = 0;
        for (char c : dot) {
            if (c == '{') ++opens;
            if (c == '}') ++closes;
            if (c == '"') ++quotes;
        }
        CHECK(opens == 1);
        CHECK(closes == 1);
        CHECK(quotes % 2 == 0);
    }
}
