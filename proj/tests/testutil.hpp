#ifndef STABRED_TESTUTIL_HPP
#define STABRED_TESTUTIL_HPP

#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "stabred/basechange.hpp"
#include "stabred/fibergraph.hpp"
#include "stabred/localmodel.hpp"
#include "stabred/saito.hpp"

namespace testutil {

using stabred::Component;
using stabred::FiberGraph;
using stabred::Int;
using stabred::Rat;

inline FiberGraph make_graph(
    Int p, const std::vector<std::tuple<std::string, int, int>>& comps,
    const std::vector<std::pair<std::string, std::string>>& edges) {
    std::vector<Component> cs;
    for (const auto& [id, genus, mult] : comps) cs.push_back({id, Int(genus), Int(mult)});
    return FiberGraph(std::move(p), std::move(cs), edges);
}

/// F(g=1, m=2) and E(g=0, m=1) meeting in two points. Genus 3; the minimal
/// tame degree is 2.
inline FiberGraph fe_fixture(Int p = 0) {
    return make_graph(std::move(p), {{"F", 1, 2}, {"E", 0, 1}}, {{"F", "E"}, {"F", "E"}});
}

inline FiberGraph single_component(int genus) {
    return make_graph(0, {{"A", genus, 1}}, {});
}

/// A(g2,1) - B(g0,2) - C(g2,1): a (-1)-chain member between principal ends.
inline FiberGraph chain_121(Int p = 0) {
    return make_graph(std::move(p), {{"A", 2, 1}, {"B", 0, 2}, {"C", 2, 1}},
                      {{"A", "B"}, {"B", "C"}});
}

/// A(1) - B(3) - C(2) - D(1) with genus-2 ends.
inline FiberGraph chain_1321(Int p = 0) {
    return make_graph(std::move(p), {{"A", 2, 1}, {"B", 0, 3}, {"C", 0, 2}, {"D", 2, 1}},
                      {{"A", "B"}, {"B", "C"}, {"C", "D"}});
}

/// Loop case of chain contraction: E(g0,2) meets C(g2,1) in two points;
/// contracting E leaves a self-loop on C.
inline FiberGraph loop_case(Int p = 0) {
    return make_graph(std::move(p), {{"C", 2, 1}, {"E", 0, 2}}, {{"C", "E"}, {"C", "E"}});
}

/// Rational hub of multiplicity 3 with three reduced tails, one of genus 2.
/// Minimal tame degree 3.
inline FiberGraph hub3(Int p = 0) {
    return make_graph(std::move(p),
                      {{"H", 0, 3}, {"T1", 2, 1}, {"T2", 0, 1}, {"T3", 0, 1}},
                      {{"H", "T1"}, {"H", "T2"}, {"H", "T3"}});
}

inline FiberGraph two_genus2(Int p = 0) {
    return make_graph(std::move(p), {{"A", 2, 1}, {"B", 2, 1}}, {{"A", "B"}});
}

/// Elliptic principal component of multiplicity 6 with tails [3,3], [2,2]
/// and [1]. Minimal tame degree 6, fiber genus 7.
inline FiberGraph deg6_fixture(Int p = 0) {
    return make_graph(std::move(p),
                      {{"P", 1, 6},
                       {"A1", 0, 3},
                       {"A2", 0, 3},
                       {"B1", 0, 2},
                       {"B2", 0, 2},
                       {"C1", 0, 1}},
                      {{"P", "A1"}, {"A1", "A2"}, {"P", "B1"}, {"B1", "B2"}, {"P", "C1"}});
}

/// F(g1,2) double edge to G1(g2,1), G1 - G2(g2,1): base change of degree 2
/// inserts an A_1 chain at the reduced node {G1, G2}.
inline FiberGraph a1_insertion_fixture(Int p = 0) {
    return make_graph(std::move(p), {{"F", 1, 2}, {"G1", 2, 1}, {"G2", 2, 1}},
                      {{"F", "G1"}, {"F", "G1"}, {"G1", "G2"}});
}

/// Random valid Saito fiber of genus >= 2: a known-good seed reshaped by
/// blow-ups, which preserve validity, the criterion and the genus.
inline FiberGraph random_valid_graph(std::mt19937_64& rng) {
    auto pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

    int p_choice = static_cast<int>(pick(3));
    Int p = p_choice == 0 ? 0 : (p_choice == 1 ? 2 : 3);

    std::vector<FiberGraph> seeds;
    seeds.push_back(single_component(2 + static_cast<int>(pick(3))));
    seeds.push_back(chain_121(p));
    seeds.push_back(two_genus2(p));
    seeds.push_back(loop_case(p));
    if (p != 2) seeds.push_back(fe_fixture(p));
    if (p != 3) seeds.push_back(hub3(p));
    if (p == 0) seeds.push_back(deg6_fixture(0));

    FiberGraph g = seeds[pick(seeds.size())];

    std::size_t blowups = pick(9);
    for (std::size_t step = 0; step < blowups; ++step) {
        bool do_edge = !g.edges().empty() && pick(2) == 0;
        if (do_edge) {
            const auto& [u, v] = g.edges()[pick(g.edges().size())];
            g = blow_up_edge(g, g.component(u).id, g.component(v).id);
        } else {
            // points may only be blown up on components of prime-to-p
            // multiplicity, otherwise the new leaf violates the criterion
            std::vector<std::size_t> ok;
            for (std::size_t i = 0; i < g.size(); ++i)
                if (p == 0 || g.component(i).mult % p != 0) ok.push_back(i);
            g = blow_up_point(g, g.component(ok[pick(ok.size())]).id);
        }
    }
    return g;
}

/// Exact value of the descending continued fraction b_1 - 1/(b_2 - ...).
inline Rat evaluate_descending_cf(const std::vector<Int>& bs) {
    Rat value = 0;
    for (std::size_t i = bs.size(); i-- > 0;) {
        if (i + 1 == bs.size()) value = Rat(bs[i]);
        else value = Rat(bs[i]) - Rat(1) / value;
    }
    return value;
}

/// Brute-force search for the group-action exponent r.
inline Int brute_force_r(const Int& a_dd, const Int& b_dd, const Int& n_dd) {
    for (Int r = 1; r < n_dd; ++r)
        if ((r * b_dd + a_dd) % n_dd == 0) return r;
    return -1;
}

/// Independent oracle for the multiplicity system: dense Gaussian
/// elimination with partial pivoting over exact rationals.
inline std::vector<Rat> dense_solve_mus(const std::vector<Int>& bs, const Int& m2,
                                        const Int& m1) {
    std::size_t n = bs.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1, Rat(0)));
    for (std::size_t j = 0; j < n; ++j) {
        m[j][j] = Rat(bs[j]);
        if (j > 0) m[j][j - 1] = Rat(-1);
        if (j + 1 < n) m[j][j + 1] = Rat(-1);
    }
    m[0][n] += Rat(m2);
    m[n - 1][n] += Rat(m1);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        std::swap(m[col], m[pivot]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            Rat f = m[row][col] / m[col][col];
            for (std::size_t k = col; k <= n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    std::vector<Rat> mu(n);
    for (std::size_t j = 0; j < n; ++j) mu[j] = m[j][n] / m[j][j];
    return mu;
}

}  // namespace testutil

#endif
