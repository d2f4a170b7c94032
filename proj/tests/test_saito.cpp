#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stabred/errors.hpp"
#include "stabred/saito.hpp"
#include "testutil.hpp"

using namespace stabred;
using namespace testutil;

TEST_CASE("is_principal") {
    FiberGraph fe = fe_fixture();
    CHECK(is_principal(fe, "F"));        // genus 1
    CHECK_FALSE(is_principal(fe, "E"));  // rational with two contacts

    FiberGraph h = hub3();
    CHECK(is_principal(h, "H"));  // rational, three contacts
    CHECK(is_principal(h, "T1"));
    CHECK_FALSE(is_principal(h, "T2"));
}

TEST_CASE("saito_check: satisfied fixtures") {
    // p = 2: rational multiplicity-2 chain member between reduced components
    FiberGraph ok2 = chain_121(2);
    CHECK(saito_check(ok2).satisfied);

    // p = 3: no multiplicity divisible by 3
    FiberGraph ok3 = chain_121(3);
    CHECK(saito_check(ok3).satisfied);

    // p = 0 is always vacuous
    CHECK(saito_check(fe_fixture(0)).satisfied);
}

TEST_CASE("saito_check: violations are itemized") {
    // F has genus 1 and multiplicity 2
    auto report = saito_check(fe_fixture(2));
    CHECK_FALSE(report.satisfied);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].component == "F");
    CHECK(report.violations[0].reason == SaitoViolationKind::not_rational);

    // mult-2 hub with four contacts
    FiberGraph hub = make_graph(
        2, {{"H", 0, 2}, {"T1", 2, 1}, {"T2", 0, 1}, {"T3", 0, 1}, {"T4", 0, 1}},
        {{"H", "T1"}, {"H", "T2"}, {"H", "T3"}, {"H", "T4"}});
    report = saito_check(hub);
    CHECK_FALSE(report.satisfied);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].reason == SaitoViolationKind::wrong_contact_count);

    // two mult-2 rational components meeting twice: p-divisible neighbours
    FiberGraph pair = make_graph(2, {{"A", 0, 2}, {"B", 0, 2}}, {{"A", "B"}, {"A", "B"}});
    report = saito_check(pair);
    CHECK_FALSE(report.satisfied);
    CHECK(report.violations.size() == 4);  // two per component, one per edge
    for (const auto& v : report.violations)
        CHECK(v.reason == SaitoViolationKind::p_divisible_neighbor);

    // p = 3 hub of multiplicity 3 with three contacts
    report = saito_check(hub3(3));
    CHECK_FALSE(report.satisfied);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].component == "H");
    CHECK(report.violations[0].reason == SaitoViolationKind::wrong_contact_count);
}

TEST_CASE("minimal_degree examples") {
    auto fe = minimal_degree(fe_fixture());
    CHECK(fe.ids == std::vector<std::string>{"F"});
    CHECK(fe.minimal_degree == 2);

    auto single = minimal_degree(single_component(2));
    CHECK(single.ids == std::vector<std::string>{"A"});
    CHECK(single.minimal_degree == 1);

    auto hub = minimal_degree(hub3(0));
    CHECK(hub.ids == std::vector<std::string>{"H", "T1"});
    CHECK(hub.minimal_degree == 3);

    CHECK(minimal_degree(deg6_fixture()).minimal_degree == 6);
}

TEST_CASE("minimal_degree error cases") {
    CHECK_THROWS_AS(minimal_degree(fe_fixture(2)), DomainError);  // Saito fails
    CHECK_THROWS_WITH_AS(minimal_degree(single_component(1)), doctest::Contains("genus"),
                         DomainError);
}

TEST_CASE("property: p never divides the minimal degree when the criterion holds") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 80; ++trial) {
        FiberGraph g = random_valid_graph(rng);
        REQUIRE(saito_check(g).satisfied);
        auto set = minimal_degree(g);
        if (g.residue_char() > 0) CHECK(set.minimal_degree % g.residue_char() != 0);
    }
}

TEST_CASE("chain_decomposition on the hub fixture") {
    auto chains = chain_decomposition(hub3());
    REQUIRE(chains.size() == 2);  // T2 and T3; T1 and H are principal
    for (const auto& c : chains) {
        CHECK(c.members.size() == 1);
        CHECK_FALSE(c.loop);
        REQUIRE(c.outer_front.has_value());
        CHECK(*c.outer_front == "H");
        CHECK_FALSE(c.outer_back.has_value());
    }
}

TEST_CASE("chain_decomposition finds both outer components") {
    FiberGraph g = chain_1321();
    auto chains = chain_decomposition(g);
    REQUIRE(chains.size() == 1);
    CHECK(chains[0].members == std::vector<std::string>{"B", "C"});
    CHECK(*chains[0].outer_front == "A");
    CHECK(*chains[0].outer_back == "D");
}

TEST_CASE("chain_decomposition: single member between the same principal twice") {
    FiberGraph fe = fe_fixture();
    auto chains = chain_decomposition(fe);
    REQUIRE(chains.size() == 1);
    CHECK(chains[0].members == std::vector<std::string>{"E"});
    CHECK(*chains[0].outer_front == "F");
    CHECK(*chains[0].outer_back == "F");
    CHECK_FALSE(chains[0].loop);
}

TEST_CASE("assert_chain_structure accepts pipeline inputs and rejects loops") {
    CHECK_NOTHROW(assert_chain_structure(fe_fixture()));
    CHECK_NOTHROW(assert_chain_structure(hub3()));
    CHECK_NOTHROW(assert_chain_structure(deg6_fixture()));

    // loop of rational curves (genus 1, outside the pipeline's domain)
    FiberGraph loop = make_graph(0, {{"A", 0, 1}, {"B", 0, 1}}, {{"A", "B"}, {"A", "B"}});
    CHECK_THROWS_WITH_AS(assert_chain_structure(loop), doctest::Contains("loop"), DomainError);

    // open chain meeting nothing principal
    FiberGraph bare = make_graph(0, {{"A", 0, 1}, {"B", 0, 1}}, {{"A", "B"}});
    CHECK_THROWS_WITH_AS(assert_chain_structure(bare), doctest::Contains("principal"),
                         DomainError);
}

TEST_CASE("property: maximal chains in valid genus >= 2 fibers are never loops") {
    std::mt19937_64 rng(2718281);
    for (int trial = 0; trial < 80; ++trial) {
        FiberGraph g = random_valid_graph(rng);
        CHECK_NOTHROW(assert_chain_structure(g));
    }
}

TEST_CASE("minimal_degree under blow-ups") {
    // blowing up an edge only adds a chain member: the degree is unchanged
    FiberGraph fe = fe_fixture();
    Int before = minimal_degree(fe).minimal_degree;
    FiberGraph blown = blow_up_edge(fe, "F", "E");
    CHECK(minimal_degree(blown).minimal_degree == before);

    // blowing up a free point of a two-contact chain member turns it
    // principal: its multiplicity enters the lcm
    FiberGraph g = chain_121();  // B has multiplicity 2, two contacts
    CHECK(minimal_degree(g).minimal_degree == 1);
    FiberGraph gp = blow_up_point(g, "B");
    CHECK(is_principal(gp, "B"));
    CHECK(minimal_degree(gp).minimal_degree == 2);
}
