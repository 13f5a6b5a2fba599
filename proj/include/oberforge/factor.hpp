#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "oberforge/group.hpp"

namespace oberforge {

/**
 * Vertex of the complete graph on G u {infinity}: either a group element
 * (by index) or the fixed point at infinity.  Ordering is frozen for
 * reproducible output: elements ascending by index, infinity last.
 */
struct Vertex {
    static constexpr int kInf = -1;
    int idx = kInf;

    static constexpr Vertex infinity() { return Vertex{kInf}; }
    static constexpr Vertex element(int i) { return Vertex{i}; }

    constexpr bool is_infinity() const { return idx == kInf; }
    constexpr int key() const { return is_infinity() ? std::numeric_limits<int>::max() : idx; }

    friend constexpr bool operator==(Vertex a, Vertex b) { return a.key() == b.key(); }
    friend constexpr bool operator!=(Vertex a, Vertex b) { return !(a == b); }
    friend constexpr bool operator<(Vertex a, Vertex b) { return a.key() < b.key(); }
};

inline std::string vertex_label(Vertex v) { return v.is_infinity() ? "inf" : std::to_string(v.idx); }

// Unordered pair of distinct vertices, stored in canonical order so edge
// equality is syntactic.
struct Edge {
    Vertex u, v;

    Edge(Vertex a, Vertex b) {
        if (a == b) throw ParameterError("loop edge at vertex " + vertex_label(a));
        if (b < a) std::swap(a, b);
        u = a;
        v = b;
    }

    bool touches_infinity() const { return v.is_infinity(); }

    friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator!=(const Edge& a, const Edge& b) { return !(a == b); }
    friend bool operator<(const Edge& a, const Edge& b) {
        return std::make_pair(a.u.key(), a.v.key()) < std::make_pair(b.u.key(), b.v.key());
    }
};

inline std::string edge_label(const Edge& e) {
    return "[" + vertex_label(e.u) + "," + vertex_label(e.v) + "]";
}

/**
 * A spanning subgraph of the complete graph on G u {infinity}, stored as a
 * canonical sorted edge set plus an adjacency index.  Immutable; regularity
 * is not enforced here (see is_k_factor).
 */
class Factor {
public:
    Factor(GroupPtr group, std::vector<Edge> edges) : group_(std::move(group)), edges_(std::move(edges)) {
        if (!group_) throw ParameterError("factor requires a group");
        const int n = group_->order();
        for (const Edge& e : edges_) {
            for (Vertex w : {e.u, e.v})
                if (!w.is_infinity() && (w.idx < 0 || w.idx >= n))
                    throw ParameterError("vertex index " + std::to_string(w.idx) +
                                         " out of range for group of order " + std::to_string(n));
        }
        std::sort(edges_.begin(), edges_.end());
        for (std::size_t i = 1; i < edges_.size(); ++i)
            if (edges_[i] == edges_[i - 1]) throw ParameterError("duplicate edge " + edge_label(edges_[i]));
        adj_.assign(n + 1, {});
        for (const Edge& e : edges_) {
            adj_[slot(e.u)].push_back(e.v);
            adj_[slot(e.v)].push_back(e.u);
        }
        for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    }

    const FiniteGroup& group() const { return *group_; }
    GroupPtr group_ptr() const { return group_; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Number of vertices of the ambient complete graph, |G| + 1.
    int vertex_count() const { return group_->order() + 1; }

    int slot(Vertex v) const { return v.is_infinity() ? group_->order() : v.idx; }
    Vertex vertex_at_slot(int s) const {
        return s == group_->order() ? Vertex::infinity() : Vertex::element(s);
    }

    int degree(Vertex v) const { return static_cast<int>(adj_[slot(v)].size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[slot(v)]; }

    bool has_edge(Vertex a, Vertex b) const {
        const auto& nbrs = neighbors(a);
        return std::binary_search(nbrs.begin(), nbrs.end(), b);
    }

    friend bool operator==(const Factor& a, const Factor& b) {
        return a.group_->spec() == b.group_->spec() && a.edges_ == b.edges_;
    }
    friend bool operator!=(const Factor& a, const Factor& b) { return !(a == b); }

private:
    GroupPtr group_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

inline Factor build_factor(GroupPtr group, std::vector<Edge> edges) {
    return Factor(std::move(group), std::move(edges));
}

// Build from vertex cycles; each cycle needs length >= 3 and distinct vertices.
inline Factor build_factor(GroupPtr group, const std::vector<std::vector<Vertex>>& cycles) {
    std::vector<Edge> edges;
    for (const auto& cyc : cycles) {
        if (cyc.size() < 3)
            throw ParameterError("cycle of length " + std::to_string(cyc.size()) + " is shorter than 3");
        std::set<int> seen;
        for (Vertex v : cyc)
            if (!seen.insert(v.key()).second)
                throw ParameterError("vertex " + vertex_label(v) + " repeated within a cycle");
        for (std::size_t i = 0; i < cyc.size(); ++i) edges.emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);
    }
    return Factor(std::move(group), std::move(edges));
}

// True iff every vertex of G u {infinity}, including isolated ones, has
// degree exactly k.
inline bool is_k_factor(const Factor& f, int k) {
    if (k < 0) throw ParameterError("regularity degree must be nonnegative");
    for (int s = 0; s < f.vertex_count(); ++s)
        if (f.degree(f.vertex_at_slot(s)) != k) return false;
    return true;
}

// Right action: every edge [u, v] maps to [ug, vg], with infinity fixed.
inline Factor act(const Factor& f, int g) {
    const FiniteGroup& grp = f.group();
    auto move_vertex = [&](Vertex v) { return v.is_infinity() ? v : Vertex::element(grp.mul(v.idx, g)); };
    std::vector<Edge> edges;
    edges.reserve(f.edges().size());
    for (const Edge& e : f.edges()) edges.emplace_back(move_vertex(e.u), move_vertex(e.v));
    return Factor(f.group_ptr(), std::move(edges));
}

/**
 * Multiset of differences a b^-1, b a^-1 over the edges [a, b] avoiding
 * infinity.  Inverse-symmetric by construction.
 */
class DifferenceList {
public:
    explicit DifferenceList(int order) : mult_(order, 0) {}

    int multiplicity(int x) const {
        if (x < 0 || x >= static_cast<int>(mult_.size()))
            throw ParameterError("element index out of range in difference list");
        return mult_[x];
    }

    void add(int x) { ++mult_[x]; }

    int total() const { return std::accumulate(mult_.begin(), mult_.end(), 0); }

    // Non-identity elements with multiplicity zero.
    std::vector<int> uncovered() const {
        std::vector<int> out;
        for (int x = 1; x < static_cast<int>(mult_.size()); ++x)
            if (mult_[x] == 0) out.push_back(x);
        return out;
    }

    bool covers_all_nonidentity() const { return uncovered().empty(); }

    const std::vector<int>& multiplicities() const { return mult_; }

    friend bool operator==(const DifferenceList& a, const DifferenceList& b) { return a.mult_ == b.mult_; }

private:
    std::vector<int> mult_;
};

inline DifferenceList difference_list(const Factor& f) {
    const FiniteGroup& g = f.group();
    DifferenceList dl(g.order());
    for (const Edge& e : f.edges()) {
        if (e.touches_infinity()) continue;
        const int d = g.mul(e.u.idx, g.inverse(e.v.idx));
        dl.add(d);
        dl.add(g.inverse(d));
    }
    return dl;
}

// {g : Fg = F}; always a subgroup containing the identity.
inline std::vector<int> stabilizer(const Factor& f) {
    std::vector<int> out;
    for (int g = 0; g < f.group().order(); ++g)
        if (act(f, g).edges() == f.edges()) out.push_back(g);
    return out;
}

struct CycleStructure {
    bool two_regular = false;
    std::vector<int> lengths;                         // sorted ascending when two_regular
    std::vector<std::pair<Vertex, int>> bad_degrees;  // offending vertices otherwise
};

inline CycleStructure cycle_structure(const Factor& f) {
    CycleStructure out;
    for (int s = 0; s < f.vertex_count(); ++s) {
        Vertex v = f.vertex_at_slot(s);
        if (f.degree(v) != 2) out.bad_degrees.emplace_back(v, f.degree(v));
    }
    if (!out.bad_degrees.empty()) return out;
    out.two_regular = true;
    std::vector<char> visited(f.vertex_count(), 0);
    for (int s = 0; s < f.vertex_count(); ++s) {
        if (visited[s]) continue;
        int len = 0;
        Vertex prev = Vertex::element(-2);  // sentinel unequal to any vertex
        Vertex cur = f.vertex_at_slot(s);
        const Vertex start = cur;
        do {
            visited[f.slot(cur)] = 1;
            ++len;
            const auto& nbrs = f.neighbors(cur);
            Vertex nxt = (nbrs[0] == prev) ? nbrs[1] : nbrs[0];
            prev = cur;
            cur = nxt;
        } while (cur != start);
        out.lengths.push_back(len);
    }
    std::sort(out.lengths.begin(), out.lengths.end());
    return out;
}

/**
 * The cycles of a 2-regular spanning factor under the frozen orientation:
 * each cycle starts at its least vertex and proceeds toward the smaller of
 * the two neighbors; cycles are listed by ascending start vertex.
 */
inline std::vector<std::vector<Vertex>> extract_cycles(const Factor& f) {
    auto cs = cycle_structure(f);
    if (!cs.two_regular) throw ParameterError("cycle extraction requires a 2-regular factor");
    std::vector<std::vector<Vertex>> out;
    std::vector<char> visited(f.vertex_count(), 0);
    for (int s = 0; s < f.vertex_count(); ++s) {
        if (visited[s]) continue;
        std::vector<Vertex> cyc;
        Vertex start = f.vertex_at_slot(s);
        Vertex prev = start;
        Vertex cur = f.neighbors(start)[0];  // sorted, so the smaller neighbor
        cyc.push_back(start);
        visited[f.slot(start)] = 1;
        while (cur != start) {
            visited[f.slot(cur)] = 1;
            cyc.push_back(cur);
            const auto& nbrs = f.neighbors(cur);
            Vertex nxt = (nbrs[0] == prev) ? nbrs[1] : nbrs[0];
            prev = cur;
            cur = nxt;
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

}  // namespace oberforge
