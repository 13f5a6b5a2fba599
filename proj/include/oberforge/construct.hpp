#pragma once

#include <optional>
#include <set>
#include <vector>

#include "oberforge/starter.hpp"

namespace oberforge {

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/**
 * The shape of a 2-starter: the cycle through infinity written as
 * (inf, a, y_1, ..., y_m, b) and the remaining cycles in a frozen order and
 * orientation.  Anchoring is deterministic: a is the smaller-indexed
 * neighbor of infinity, and every other cycle starts at its least element
 * and proceeds toward its smaller-indexed neighbor.
 */
struct TwoStarterProfile {
    std::vector<Vertex> infinity_cycle;          // (inf, a, y_1..y_m, b)
    std::vector<std::vector<int>> other_cycles;  // element indices
    int a = 0;
    int b = 0;
    std::vector<int> y;

    int path_len() const { return static_cast<int>(y.size()); }
    int infinity_cycle_len() const { return static_cast<int>(infinity_cycle.size()); }

    std::vector<int> lengths() const {
        std::vector<int> out{infinity_cycle_len()};
        for (const auto& c : other_cycles) out.push_back(static_cast<int>(c.size()));
        return out;
    }
};

inline TwoStarterProfile two_starter_profile(const Starter& s) {
    if (s.k != 2) throw ParameterError("profile extraction requires a 2-starter");
    const Factor& f = s.factor;
    auto cs = cycle_structure(f);
    if (!cs.two_regular) throw ParameterError("profile extraction requires a 2-regular factor");

    TwoStarterProfile prof;
    const auto& inf_nbrs = f.neighbors(Vertex::infinity());
    prof.a = inf_nbrs[0].idx;  // neighbors are sorted, so this is the smaller
    prof.infinity_cycle.push_back(Vertex::infinity());
    Vertex prev = Vertex::infinity();
    Vertex cur = inf_nbrs[0];
    while (!cur.is_infinity()) {
        prof.infinity_cycle.push_back(cur);
        const auto& nbrs = f.neighbors(cur);
        Vertex nxt = (nbrs[0] == prev) ? nbrs[1] : nbrs[0];
        prev = cur;
        cur = nxt;
    }
    prof.b = prof.infinity_cycle.back().idx;
    const int m = prof.infinity_cycle_len() - 3;
    if (m < 0 || m % 2 != 0)
        throw ParameterError("the cycle through infinity must have odd length, got " +
                             std::to_string(prof.infinity_cycle_len()));
    for (int i = 0; i < m; ++i) prof.y.push_back(prof.infinity_cycle[2 + i].idx);

    for (const auto& cyc : extract_cycles(f)) {
        bool through_inf = false;
        for (Vertex v : cyc) through_inf = through_inf || v.is_infinity();
        if (through_inf) continue;
        std::vector<int> c;
        for (Vertex v : cyc) c.push_back(v.idx);
        prof.other_cycles.push_back(std::move(c));
    }
    return prof;
}

/**
 * A 2n-starter under G x Z_n produced by lifting a 2-starter under G,
 * carrying the base starter and its profile so the split stays
 * self-contained.
 */
struct LiftedStarter {
    Starter base;
    TwoStarterProfile profile;
    int n = 0;
    GroupPtr lifted_group;  // G x Z_n
    Starter lifted;
};

/**
 * Lift a 2-starter F under G to a 2n-starter H under G x Z_n.  H consists of
 * the infinity edges to every copy of the two neighbors of infinity, the
 * complete graphs on those two columns, and the complete bipartite blow-up
 * of every other edge of F.  The stabilizer of H is S x Z_n.
 */
inline LiftedStarter lift_2n(const Starter& s, int n) {
    if (n < 2) throw ParameterError("lift order must be at least 2, got " + std::to_string(n));
    auto base_check = verify_starter(s.factor, 2);
    if (!base_check.accepted)
        throw ParameterError("lift input does not certify as a 2-starter: " +
                             base_check.summary(s.factor.group()));

    const FiniteGroup& g = s.factor.group();
    TwoStarterProfile prof = two_starter_profile(s);
    GroupPtr lifted_group = make_group(GroupSpec::product(g.spec(), GroupSpec::cyclic(n)));
    auto at = [n](int x, int level) { return Vertex::element(x * n + level); };

    std::vector<Edge> edges;
    for (int x : {prof.a, prof.b}) {
        for (int k = 0; k < n; ++k) {
            edges.emplace_back(Vertex::infinity(), at(x, k));
            for (int r = k + 1; r < n; ++r) edges.emplace_back(at(x, k), at(x, r));
        }
    }
    for (const Edge& e : s.factor.edges()) {
        if (e.touches_infinity()) continue;
        for (int k = 0; k < n; ++k)
            for (int r = 0; r < n; ++r) edges.emplace_back(at(e.u.idx, k), at(e.v.idx, r));
    }

    Factor h(lifted_group, std::move(edges));
    auto hv = verify_starter(h, 2 * n);
    if (!hv.accepted)
        throw InvariantError("lifted factor failed certification: " + hv.summary(*lifted_group));
    std::vector<int> expect_stab;
    for (int sg : base_check.starter->stab)
        for (int k = 0; k < n; ++k) expect_stab.push_back(sg * n + k);
    std::sort(expect_stab.begin(), expect_stab.end());
    if (hv.starter->stab != expect_stab)
        throw InvariantError("lifted stabilizer is not S x Z_n");
    return LiftedStarter{*base_check.starter, std::move(prof), n, lifted_group, *hv.starter};
}

/**
 * Doubling for dihedral groups: a 2-starter under the dihedral group of
 * order N (N = 2 mod 4) with stabilizer {1, s} becomes a 4-starter under the
 * dihedral group of order 2N with stabilizer {1, s, r^{N/2}, r^{N/2} s}.
 *
 * The input is first normalized (by a translation and a reflection-fixing
 * automorphism, both of which preserve starters) so that infinity is
 * adjacent to 1 and s.  Each remaining edge [x, y] is then doubled into the
 * four edges [ax, by] for a, b in {1, r^{N/2}}, and six fixed edges replace
 * the infinity edges.
 */
inline Starter dihedral_double(const Starter& s) {
    const FiniteGroup& g = s.factor.group();
    if (g.spec().family() != GroupSpec::Family::Dihedral)
        throw ParameterError("doubling requires a dihedral base group, got " + g.spec().describe());
    const int n = g.order();
    if (n % 4 != 2)
        throw ParameterError("doubling requires a dihedral order of 2 mod 4, got " + std::to_string(n));
    const int m = n / 2;  // rotations in the base group
    auto check = verify_starter(s.factor, 2);
    if (!check.accepted)
        throw ParameterError("doubling input does not certify as a 2-starter: " + check.summary(g));
    const std::vector<int> canonical_stab{FiniteGroup::identity, m};  // {1, s}
    if (check.starter->stab != canonical_stab)
        throw ParameterError("doubling requires stabilizer {1, s}, got " +
                             format_element_set(g, check.starter->stab));

    // Normalize so infinity is adjacent to 1 (and therefore to s).  Translate
    // by the inverse of a neighbor of infinity, then relabel the reflections
    // so the stabilizer reads {1, s} again.
    const auto& inf_nbrs = s.factor.neighbors(Vertex::infinity());
    const int anchor = inf_nbrs[0].idx;
    const int shift = g.mul(anchor, g.mul(m, g.inverse(anchor)));  // conjugated reflection, r^c s
    const int c = shift - m;                                       // its rotation part
    auto normalize = [&](Vertex v) -> Vertex {
        if (v.is_infinity()) return v;
        int x = g.mul(v.idx, g.inverse(anchor));
        // reflection r^j s -> r^{j-c} s; rotations are fixed
        if (x >= m) x = m + ((x - m - c) % m + m) % m;
        return Vertex::element(x);
    };
    std::vector<Edge> base_edges;
    for (const Edge& e : s.factor.edges()) base_edges.emplace_back(normalize(e.u), normalize(e.v));
    Factor norm(s.factor.group_ptr(), std::move(base_edges));
    auto norm_check = verify_starter(norm, 2);
    if (!norm_check.accepted || norm_check.starter->stab != canonical_stab ||
        !norm.has_edge(Vertex::infinity(), Vertex::element(0)) ||
        !norm.has_edge(Vertex::infinity(), Vertex::element(m)))
        throw InvariantError("doubling normalization failed");

    GroupPtr big = make_group(GroupSpec::dihedral(2 * n));
    // Embed: rotation i -> rotation i, reflection r^i s -> reflection r^i s.
    auto embed = [&](int x) { return x < m ? x : n + (x - m); };
    const int half = m;           // r^{N/2} in the doubled group (central)
    const int s_big = n;          // s in the doubled group
    auto shift_half = [&](int x) { return big->mul(half, x); };  // left multiplication

    std::vector<Edge> edges;
    for (const Edge& e : norm.edges()) {
        if (e.touches_infinity()) continue;
        const int x = embed(e.u.idx), y = embed(e.v.idx);
        edges.emplace_back(Vertex::element(x), Vertex::element(y));
        edges.emplace_back(Vertex::element(x), Vertex::element(shift_half(y)));
        edges.emplace_back(Vertex::element(shift_half(x)), Vertex::element(y));
        edges.emplace_back(Vertex::element(shift_half(x)), Vertex::element(shift_half(y)));
    }
    for (int x : {FiniteGroup::identity, s_big, half, big->mul(half, s_big)})
        edges.emplace_back(Vertex::infinity(), Vertex::element(x));
    edges.emplace_back(Vertex::element(s_big), Vertex::element(big->mul(half, s_big)));
    edges.emplace_back(Vertex::element(FiniteGroup::identity), Vertex::element(half));

    Factor doubled(big, std::move(edges));
    auto dv = verify_starter(doubled, 4);
    if (!dv.accepted)
        throw InvariantError("doubled factor failed certification: " + dv.summary(*big));
    std::vector<int> expect{FiniteGroup::identity, half, s_big, big->mul(half, s_big)};
    std::sort(expect.begin(), expect.end());
    if (dv.starter->stab != expect)
        throw InvariantError("doubled stabilizer is not {1, s, r^{N/2}, r^{N/2}s}");
    return *dv.starter;
}

enum class WaleckiColumn { A, B, Infinity };

struct WaleckiVertex {
    WaleckiColumn column = WaleckiColumn::Infinity;
    int level = 0;

    friend bool operator==(const WaleckiVertex& a, const WaleckiVertex& b) {
        return a.column == b.column && (a.column == WaleckiColumn::Infinity || a.level == b.level);
    }
};

using WaleckiCycle = std::vector<WaleckiVertex>;

/**
 * Walecki decomposition of the complete graph on {(A,k), (B,k)} u {inf}
 * into p Hamiltonian (2p+1)-cycles.  The 2p non-infinity vertices sit on a
 * circle, position 2t holding (A,t) and position 2t+1 holding (B,t); the
 * base cycle zigzags through positions 0, 1, 2p-1, 2, 2p-2, ..., p-1, p+1, p
 * and closes through infinity, and cycle i advances every position by i.
 */
inline std::vector<WaleckiCycle> walecki_cycles(int p) {
    if (p < 2) throw ParameterError("walecki construction requires p >= 2, got " + std::to_string(p));
    std::vector<int> base{0};
    for (int t = 1; t <= p - 1; ++t) {
        base.push_back(t);
        base.push_back(2 * p - t);
    }
    base.push_back(p);
    auto at = [p](int pos) {
        return pos % 2 == 0 ? WaleckiVertex{WaleckiColumn::A, pos / 2}
                            : WaleckiVertex{WaleckiColumn::B, (pos - 1) / 2};
    };
    std::vector<WaleckiCycle> out;
    for (int i = 0; i < p; ++i) {
        WaleckiCycle cyc;
        for (int pos : base) cyc.push_back(at((pos + i) % (2 * p)));
        cyc.push_back(WaleckiVertex{WaleckiColumn::Infinity, 0});
        out.push_back(std::move(cyc));
    }
    return out;
}

/**
 * The j-rotated copy of cycle i of the profile inside G x Z_p: p disjoint
 * cycles where vertex x_t of the base cycle sits at level (t-1) j + k in
 * copy k, except that when the cycle length is 1 mod p the last vertex sits
 * at level (p-2) j + k.  Vertices are indexed as (x, level) -> x p + level.
 */
inline std::vector<std::vector<Vertex>> rotated_factor(const TwoStarterProfile& prof, int i, int j, int p) {
    if (!is_prime(p)) throw ParameterError("rotation requires a prime p, got " + std::to_string(p));
    if (i < 1 || i > static_cast<int>(prof.other_cycles.size()))
        throw ParameterError("cycle index " + std::to_string(i) + " out of range");
    if (j < 0 || j >= p) throw ParameterError("rotation index " + std::to_string(j) + " out of range");
    const auto& xs = prof.other_cycles[i - 1];
    const int len = static_cast<int>(xs.size());
    const int r = len % p;
    std::vector<std::vector<Vertex>> cycles;
    for (int k = 0; k < p; ++k) {
        std::vector<Vertex> cyc;
        for (int t = 0; t < len; ++t) {
            long level = static_cast<long>(t) * j + k;
            if (r == 1 && t == len - 1) level = static_cast<long>(p - 2) * j + k;
            cyc.push_back(Vertex::element(xs[t] * p + static_cast<int>(level % p)));
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

/**
 * Instantiate a Walecki cycle over G x Z_p (A -> a, B -> b) and splice the
 * alternating y-path of the profile into every A-B adjacency: between (a,k)
 * and (b,t) the inserted vertices are (y_1,t), (y_2,k), (y_3,t), ...  The
 * result is a cycle of length p(a_inf - 1) + 1; with an empty path it is the
 * Walecki cycle itself.
 */
inline std::vector<Vertex> expand_cycle(const WaleckiCycle& e, const TwoStarterProfile& prof, int p) {
    if (e.size() < 3) throw ParameterError("malformed Walecki cycle: fewer than 3 vertices");
    int inf_count = 0;
    for (const auto& w : e) inf_count += w.column == WaleckiColumn::Infinity;
    if (inf_count != 1) throw ParameterError("malformed Walecki cycle: expected exactly one infinity vertex");
    for (const auto& w : e)
        if (w.column != WaleckiColumn::Infinity && (w.level < 0 || w.level >= p))
            throw ParameterError("malformed Walecki cycle: level out of range");

    const int m = prof.path_len();
    auto lift = [&](const WaleckiVertex& w) -> Vertex {
        switch (w.column) {
            case WaleckiColumn::A: return Vertex::element(prof.a * p + w.level);
            case WaleckiColumn::B: return Vertex::element(prof.b * p + w.level);
            default: return Vertex::infinity();
        }
    };
    std::vector<Vertex> out;
    const std::size_t sz = e.size();
    for (std::size_t idx = 0; idx < sz; ++idx) {
        const auto& cur = e[idx];
        const auto& nxt = e[(idx + 1) % sz];
        out.push_back(lift(cur));
        if (cur.column == WaleckiColumn::A && nxt.column == WaleckiColumn::B) {
            const int k = cur.level, t = nxt.level;
            for (int q = 1; q <= m; ++q) out.push_back(Vertex::element(prof.y[q - 1] * p + (q % 2 ? t : k)));
        } else if (cur.column == WaleckiColumn::B && nxt.column == WaleckiColumn::A) {
            const int t = cur.level, k = nxt.level;
            for (int q = m; q >= 1; --q) out.push_back(Vertex::element(prof.y[q - 1] * p + (q % 2 ? t : k)));
        }
    }
    return out;
}

/**
 * Decompose the lifted 2p-starter H into p two-factors
 * H_j = expanded Walecki cycle j + the j-rotated copies of every other
 * cycle.  Requires p prime and equal to the lift order; for p = 2 every
 * cycle away from infinity must have even length.  The pieces are validated
 * to be 2-regular, mutually edge-disjoint, and to union exactly to H.
 */
inline std::vector<Factor> split_lift(const LiftedStarter& lifted, int p) {
    if (!is_prime(p)) throw ParameterError("split requires a prime p, got " + std::to_string(p));
    if (p != lifted.n)
        throw ParameterError("split order p = " + std::to_string(p) + " must equal the lift order n = " +
                             std::to_string(lifted.n));
    const TwoStarterProfile& prof = lifted.profile;
    if (p == 2) {
        for (const auto& cyc : prof.other_cycles)
            if (cyc.size() % 2 != 0)
                throw ParameterError("p = 2 split requires every cycle away from infinity to have even "
                                     "length; found a cycle of length " +
                                     std::to_string(cyc.size()));
    }

    const auto walecki = walecki_cycles(p);
    std::vector<Factor> out;
    for (int j = 0; j < p; ++j) {
        std::vector<std::vector<Vertex>> cycles{expand_cycle(walecki[j], prof, p)};
        for (int i = 1; i <= static_cast<int>(prof.other_cycles.size()); ++i) {
            auto rc = rotated_factor(prof, i, j, p);
            cycles.insert(cycles.end(), rc.begin(), rc.end());
        }
        out.push_back(build_factor(lifted.lifted_group, cycles));
    }

    std::vector<int> expect_lengths{p * (prof.infinity_cycle_len() - 1) + 1};
    for (const auto& cyc : prof.other_cycles)
        for (int k = 0; k < p; ++k) expect_lengths.push_back(static_cast<int>(cyc.size()));
    std::sort(expect_lengths.begin(), expect_lengths.end());

    std::vector<Edge> all;
    for (const Factor& f : out) {
        if (!is_k_factor(f, 2)) throw InvariantError("split piece is not a 2-factor");
        if (cycle_structure(f).lengths != expect_lengths)
            throw InvariantError("split piece has an unexpected cycle structure");
        all.insert(all.end(), f.edges().begin(), f.edges().end());
    }
    std::sort(all.begin(), all.end());
    if (all != lifted.lifted.factor.edges())
        throw InvariantError("split pieces do not partition the lifted factor");
    return out;
}

struct OpSolution {
    Factorization factorization;
    OPSignature signature;
};

/**
 * Full pipeline: lift the 2-starter to a 2p-starter H under G x Z_p, split H
 * into p two-factors, and translate the split across the orbit of H.  The
 * result is a verified 2-factorization of the complete graph on
 * G x Z_p u {infinity} whose factors all realize
 * OP(p(a_inf - 1) + 1, ^p a_1, ..., ^p a_N).
 */
inline OpSolution solve_op(const Starter& s, int p) {
    LiftedStarter lifted = lift_2n(s, p);
    const auto parts = split_lift(lifted, p);
    const FiniteGroup& big = *lifted.lifted_group;

    Factorization fz{lifted.lifted_group, 2, {}};
    std::set<std::vector<Edge>> seen;
    for (int g = 0; g < big.order(); ++g) {
        Factor img = act(lifted.lifted.factor, g);
        if (!seen.insert(img.edges()).second) continue;
        for (const Factor& part : parts) fz.factors.push_back(act(part, g));
    }
    const auto rep = verify_factorization(fz);
    if (!rep.ok) throw InvariantError("orbit split does not partition the complete graph");

    std::vector<int> expect{p * (lifted.profile.infinity_cycle_len() - 1) + 1};
    for (const auto& cyc : lifted.profile.other_cycles)
        for (int k = 0; k < p; ++k) expect.push_back(static_cast<int>(cyc.size()));
    OPSignature sig(expect);
    for (const Factor& f : fz.factors)
        if (op_signature(f) != sig) throw InvariantError("solution factors do not share one signature");
    return OpSolution{std::move(fz), std::move(sig)};
}

}  // namespace oberforge
