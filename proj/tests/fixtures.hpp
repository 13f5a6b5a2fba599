#pragma once

#include <functional>

#include "oberforge/oberforge.hpp"

// Shared fixtures and small independent oracles used across the test suites.
namespace fixtures {

using namespace oberforge;

inline Vertex inf() { return Vertex::infinity(); }
inline Vertex el(int i) { return Vertex::element(i); }

inline std::vector<Vertex> cyc(std::initializer_list<int> idxs, bool leading_inf = false) {
    std::vector<Vertex> out;
    if (leading_inf) out.push_back(inf());
    for (int i : idxs) out.push_back(el(i));
    return out;
}

// (inf, 0, 3, 9, 6) u (1, 5, 4, 2, 7, 11, 10, 8) under Z12.
inline Starter z12_op58_starter() {
    auto g = make_group(GroupSpec::cyclic(12));
    Factor f = build_factor(g, {cyc({0, 3, 9, 6}, true), cyc({1, 5, 4, 2, 7, 11, 10, 8})});
    auto check = verify_starter(f, 2);
    if (!check.accepted) throw std::logic_error("z12 op(5,8) fixture does not certify");
    return *check.starter;
}

// (inf, 0, 1, 3, 2) under Z4.
inline Starter z4_starter() {
    auto g = make_group(GroupSpec::cyclic(4));
    Factor f = build_factor(g, {cyc({0, 1, 3, 2}, true)});
    auto check = verify_starter(f, 2);
    if (!check.accepted) throw std::logic_error("z4 fixture does not certify");
    return *check.starter;
}

// (inf, 0, 1, 5, 2, 4, 3) under Z6: a Hamiltonian-cycle starter on K7.
inline Starter z6_op7_starter() {
    auto g = make_group(GroupSpec::cyclic(6));
    Factor f = build_factor(g, {cyc({0, 1, 5, 2, 4, 3}, true)});
    auto check = verify_starter(f, 2);
    if (!check.accepted) throw std::logic_error("z6 fixture does not certify");
    return *check.starter;
}

// (inf, 1, s) u (r^2, r^2 s, r s, r) under the dihedral group of order 6,
// with stabilizer {1, s}; realizes OP(3, 4) on K7.
inline Starter d6_starter() {
    auto g = make_group(GroupSpec::dihedral(6));
    Factor f = build_factor(g, {cyc({0, 3}, true), cyc({1, 2, 5, 4})});
    auto check = verify_starter(f, 2);
    if (!check.accepted) throw std::logic_error("d6 fixture does not certify");
    return *check.starter;
}

// (inf, 5, 4, 2, 8, 10, 11) u (0, 3, 7) u (1, 6, 9) under Z12: realizes
// OP(7, 3, 3) on K13; the odd 3-cycles make it a p = 2 rejection fixture.
inline Starter z12_op733_starter() {
    auto g = make_group(GroupSpec::cyclic(12));
    Factor f = build_factor(g, {cyc({5, 4, 2, 8, 10, 11}, true), cyc({0, 3, 7}), cyc({1, 6, 9})});
    auto check = verify_starter(f, 2);
    if (!check.accepted) throw std::logic_error("z12 op(7,3,3) fixture does not certify");
    return *check.starter;
}

// All edges of the complete graph on |G| + 1 vertices, canonical form.
inline std::vector<Edge> complete_graph_edges(int group_order) {
    std::vector<Edge> out;
    for (int a = 0; a < group_order; ++a) {
        for (int b = a + 1; b < group_order; ++b) out.emplace_back(el(a), el(b));
        out.emplace_back(el(a), inf());
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Multiset union of the factors' edges, sorted.
inline std::vector<Edge> union_edges(const std::vector<Factor>& factors) {
    std::vector<Edge> all;
    for (const Factor& f : factors) all.insert(all.end(), f.edges().begin(), f.edges().end());
    std::sort(all.begin(), all.end());
    return all;
}

// Brute-force enumeration of every k-factor of the complete graph on
// G u {infinity}, with no pruning beyond degrees.  Test-side oracle for the
// search: feasible only for tiny groups.
inline std::vector<Factor> naive_k_factors(const GroupPtr& g, int k) {
    const int nv = g->order() + 1;
    std::vector<std::pair<int, int>> all_pairs;
    for (int a = 0; a < nv; ++a)
        for (int b = a + 1; b < nv; ++b) all_pairs.emplace_back(a, b);

    std::vector<Factor> out;
    std::vector<int> deg(nv, 0);
    std::vector<std::pair<int, int>> chosen;
    auto vertex_at = [&](int s) { return s == nv - 1 ? inf() : el(s); };

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == all_pairs.size()) {
            bool regular = true;
            for (int d : deg) regular = regular && d == k;
            if (regular) {
                std::vector<Edge> edges;
                for (auto [a, b] : chosen) edges.emplace_back(vertex_at(a), vertex_at(b));
                out.push_back(build_factor(g, std::move(edges)));
            }
            return;
        }
        // Prune only on degree overflow and on remaining-capacity shortfall.
        rec(i + 1);
        auto [a, b] = all_pairs[i];
        if (deg[a] < k && deg[b] < k) {
            ++deg[a];
            ++deg[b];
            chosen.push_back(all_pairs[i]);
            rec(i + 1);
            chosen.pop_back();
            --deg[a];
            --deg[b];
        }
    };
    rec(0);
    return out;
}

}  // namespace fixtures
