#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stabred/document.hpp"
#include "stabred/errors.hpp"
#include "stabred/pipeline.hpp"
#include "testutil.hpp"

using namespace stabred;
using namespace testutil;

TEST_CASE("run: F/E fixture end to end") {
    for (Int p : {Int(0), Int(3)}) {
        PipelineReport report = run(fe_fixture(p));
        CHECK(report.input_genus == 3);
        CHECK(report.degree_n == 2);
        CHECK(report.principal_ids == std::vector<std::string>{"F"});
        REQUIRE(report.stages.size() == 4);
        CHECK(report.stages[0].name == "input");
        CHECK(report.stages[1].name == "resolved");
        CHECK(report.stages[2].name == "semi-stable");
        CHECK(report.stages[3].name == "stable");

        const FiberGraph& resolved = std::get<FiberGraph>(report.stages[1].graph);
        CHECK(isomorphic(resolved, make_graph(p, {{"F", 2, 1}, {"E", 0, 1}},
                                              {{"F", "E"}, {"F", "E"}})));

        // stable graph: one genus-2 vertex with a single self-loop
        CHECK(reduced_pa(report.stable_graph) == 3);
        REQUIRE(report.stable_graph.components.size() == 1);
        CHECK(report.stable_graph.components[0].second == 2);
        REQUIRE(report.stable_graph.edges.size() == 1);
        CHECK(report.stable_graph.edges[0].first == report.stable_graph.edges[0].second);
    }
}

TEST_CASE("run: single smooth component is already stable") {
    PipelineReport report = run(single_component(2));
    CHECK(report.degree_n == 1);
    CHECK(report.input_genus == 2);
    CHECK(report.trace.steps.empty());
    CHECK(reduced_pa(report.stable_graph) == 2);
    CHECK(report.stable_graph.components.size() == 1);
    CHECK(report.stable_graph.edges.empty());
}

TEST_CASE("run: characteristic-zero chain fixture follows the classical procedure") {
    // [1,2,1] chain between principal components: degree 1, one contraction
    PipelineReport report = run(chain_121());
    CHECK(report.degree_n == 1);
    REQUIRE(report.trace.steps.size() == 1);
    CHECK(report.trace.steps[0].id == "B'");  // the copy of B in the resolved model
    CHECK(reduced_pa(report.stable_graph) == report.input_genus);
    CHECK(report.stable_graph.components.size() == 2);
    CHECK(report.stable_graph.edges.size() == 1);
}

TEST_CASE("run: A_1 chain appears and dissolves on the way to the stable graph") {
    PipelineReport report = run(a1_insertion_fixture());
    CHECK(report.degree_n == 2);
    CHECK(report.input_genus == 7);
    const FiberGraph& resolved = std::get<FiberGraph>(report.stages[1].graph);
    CHECK(resolved.size() == 4);  // F', G1', G2' and one exceptional component
    CHECK(reduced_pa(report.stable_graph) == 7);
    // stable graph: F'(2) double edge G1'(2) -- G2'(2)
    CHECK(report.stable_graph.components.size() == 3);
    CHECK(report.stable_graph.edges.size() == 3);
}

TEST_CASE("run: loop case ends on a nodal graph") {
    PipelineReport report = run(loop_case());
    CHECK(report.degree_n == 1);
    REQUIRE(report.trace.steps.size() == 1);
    CHECK(report.trace.steps[0].mult == 2);
    REQUIRE(report.stable_graph.components.size() == 1);
    CHECK(report.stable_graph.edges.size() == 1);
    CHECK(reduced_pa(report.stable_graph) == 3);
}

TEST_CASE("run: degree-6 fixture collapses to a single genus-7 vertex") {
    PipelineReport report = run(deg6_fixture());
    CHECK(report.degree_n == 6);
    CHECK(report.input_genus == 7);
    REQUIRE(report.stable_graph.components.size() == 1);
    CHECK(report.stable_graph.components[0].second == 7);
    CHECK(report.stable_graph.edges.empty());
}

TEST_CASE("run rejects invalid and wild inputs") {
    CHECK_THROWS_AS(run(fe_fixture(2)), DomainError);  // Saito violated
    FiberGraph small = make_graph(0, {{"A", 1, 1}}, {});
    CHECK_THROWS_AS(run(small), DomainError);  // genus 1
    FiberGraph invalid = make_graph(0, {{"A", 1, 1}, {"B", 1, 2}}, {{"A", "B"}});
    CHECK_THROWS_AS(run(invalid), DomainError);
}

TEST_CASE("run: ambiguous splittings are refused with an explanation") {
    FiberGraph g = make_graph(0, {{"A", 1, 2}, {"B", 1, 2}}, {{"A", "B"}});
    REQUIRE(genus(g) == 3);
    CHECK_THROWS_WITH_AS(run(g), doctest::Contains("non-isomorphic"), DomainError);
    // with an explicit plan the run is well-defined
    SplittingPlan plan;
    plan.overrides["A"] = 2;
    PipelineReport report = run(g, plan);
    CHECK(reduced_pa(report.stable_graph) == 3);
    CHECK(report.stable_graph.components.size() == 3);
}

TEST_CASE("run is deterministic") {
    PipelineReport a = run(deg6_fixture());
    PipelineReport b = run(deg6_fixture());
    CHECK(a.stable_graph.components == b.stable_graph.components);
    CHECK(a.stable_graph.edges == b.stable_graph.edges);
    REQUIRE(a.stages.size() == b.stages.size());
    for (std::size_t i = 0; i < a.stages.size(); ++i)
        CHECK(a.stages[i].checks == b.stages[i].checks);
}

TEST_CASE("serialized reports are byte-identical across runs") {
    std::string a = to_json(run(deg6_fixture())).dump();
    std::string b = to_json(run(deg6_fixture())).dump();
    CHECK(a == b);
    std::string c = to_json(run(fe_fixture())).dump();
    std::string d = to_json(run(fe_fixture())).dump();
    CHECK(c == d);
}

TEST_CASE("probe_minimality: F/E fixture") {
    auto probes = probe_minimality(fe_fixture());
    REQUIRE(probes.size() == 1);
    CHECK(probes[0].divisor == 1);
    CHECK_FALSE(probes[0].semi_stable);
}

TEST_CASE("probe_minimality: trivial degree has no divisors to probe") {
    CHECK(probe_minimality(single_component(2)).empty());
}

TEST_CASE("probe_minimality: all proper divisors of 6 fail") {
    auto probes = probe_minimality(deg6_fixture());
    REQUIRE(probes.size() == 3);
    for (const auto& probe : probes) {
        CHECK((probe.divisor == 1 || probe.divisor == 2 || probe.divisor == 3));
        CHECK_FALSE(probe.semi_stable);
    }
}

TEST_CASE("property: every stage of every run conserves the genus") {
    std::mt19937_64 rng(918273645);
    for (int trial = 0; trial < 40; ++trial) {
        FiberGraph g = random_valid_graph(rng);
        Int expected = genus(g);
        PipelineReport report = run(g);
        CHECK(report.input_genus == expected);
        for (const Stage& stage : report.stages) {
            if (std::holds_alternative<ReducedGraph>(stage.graph)) {
                CHECK(reduced_pa(std::get<ReducedGraph>(stage.graph)) == expected);
            } else {
                const FiberGraph& fg = std::get<FiberGraph>(stage.graph);
                if (fg.has_self_loops()) {
                    CHECK(reduced_pa(to_reduced(fg)) == expected);
                } else {
                    CHECK(genus(fg) == expected);
                }
            }
        }
        CHECK(reduced_pa(report.stable_graph) == expected);
    }
}
