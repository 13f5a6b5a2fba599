#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>

#include "oberforge/construct.hpp"

namespace oberforge {

/**
 * What to search for: a k-starter under the given group, optionally pinned
 * to a cycle-length signature (k = 2 only) and a required stabilizer
 * subgroup, under node and wall-clock budgets.
 */
struct SearchSpec {
    GroupSpec group;
    int k = 2;
    std::optional<OPSignature> target_signature;
    std::optional<std::vector<int>> required_stabilizer;
    std::uint64_t node_budget = 10'000'000;
    double time_budget_seconds = 60.0;
};

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

inline const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Exhausted: return "exhausted";
        case SearchStatus::BudgetExceeded: return "budget_exceeded";
    }
    return "?";
}

// Exhausted is only ever reported after a complete traversal of the tree.
struct SearchOutcome {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<Starter> starter;
    std::uint64_t nodes = 0;
    double elapsed_seconds = 0.0;
};

namespace detail {

/**
 * Depth-first enumeration of k-factors of the complete graph on
 * G u {infinity}, in a frozen order: always extend the least-index vertex of
 * deficient degree, trying neighbors in ascending index order, each chosen
 * edge closed under the required stabilizer subgroup.  Prunes on degree
 * overflow, difference multiplicity above k (every starter has uniform
 * multiplicity exactly k), and coverage infeasibility.  Single-threaded and
 * deterministic: the first emitted factor is the lexicographically least.
 */
class StarterSearch {
public:
    explicit StarterSearch(const SearchSpec& spec) : spec_(spec), group_(make_group(spec.group)) {
        const FiniteGroup& g = *group_;
        if (spec_.k < 2) throw ParameterError("search requires k >= 2, got " + std::to_string(spec_.k));
        if (g.order() % spec_.k != 0)
            throw ParameterError("k = " + std::to_string(spec_.k) + " must divide the group order " +
                                 std::to_string(g.order()));
        nv_ = g.order() + 1;
        if (nv_ > 64) throw ParameterError("search supports groups of order at most 63");
        if (spec_.target_signature) {
            if (spec_.k != 2) throw ParameterError("a target signature requires k = 2");
            if (spec_.target_signature->vertex_count() != nv_)
                throw ParameterError("target signature lengths must sum to |G| + 1 = " + std::to_string(nv_));
        }
        subgroup_ = subgroup_closure(g, spec_.required_stabilizer.value_or(std::vector<int>{}));
        for (int sg : subgroup_) {
            std::vector<int> row(nv_);
            for (int x = 0; x < g.order(); ++x) row[x] = g.mul(x, sg);
            row[nv_ - 1] = nv_ - 1;  // infinity is fixed
            action_.push_back(std::move(row));
        }
        // A starter's stabilizer has order exactly k and contains the closure.
        trivially_empty_ = spec_.k % static_cast<int>(subgroup_.size()) != 0;
        // Handshake: k(|G|+1) must be even for any k-factor to exist.
        if (static_cast<long>(spec_.k) * nv_ % 2 != 0) trivially_empty_ = true;
    }

    // Runs the search; sink(starter) returns true to stop early (found/limit).
    SearchOutcome run(const std::function<bool(Starter&&)>& sink) {
        start_ = std::chrono::steady_clock::now();
        nodes_ = 0;
        budget_hit_ = false;
        stopped_ = false;
        SearchOutcome out;
        if (!trivially_empty_) {
            deg_.assign(nv_, 0);
            adj_.fill(0);
            diff_mult_.assign(group_->order(), 0);
            uncovered_ = group_->order() - 1;
            noninf_placed_ = 0;
            target_noninf_ = spec_.k * (group_->order() - 1) / 2;
            sink_ = &sink;
            dfs(0, 0);
        }
        out.nodes = nodes_;
        out.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (found_one_ && stopped_) {
            out.status = SearchStatus::Found;
            out.starter = std::move(first_);
        } else if (budget_hit_) {
            out.status = SearchStatus::BudgetExceeded;
        } else {
            out.status = SearchStatus::Exhausted;
        }
        return out;
    }

private:
    bool over_budget() {
        if (nodes_ > spec_.node_budget) return true;
        if ((nodes_ & 0x3ff) == 0) {
            const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
            if (t > spec_.time_budget_seconds) return true;
        }
        return false;
    }

    bool edge_present(int a, int b) const { return adj_[a] >> b & 1; }

    // Adds one edge with cap checks; true on success.
    bool add_edge(int a, int b) {
        if (a == b || edge_present(a, b)) return false;
        if (deg_[a] >= spec_.k || deg_[b] >= spec_.k) return false;
        const int inf = nv_ - 1;
        if (a != inf && b != inf) {
            const FiniteGroup& g = *group_;
            const int d = g.mul(a, g.inverse(b));
            const int di = g.inverse(d);
            if (diff_mult_[d] >= spec_.k || diff_mult_[di] >= spec_.k) return false;
            if (d == di) {
                if (diff_mult_[d] + 2 > spec_.k) return false;
                if (diff_mult_[d] == 0) --uncovered_;
                diff_mult_[d] += 2;
            } else {
                if (diff_mult_[d] == 0) --uncovered_;
                if (diff_mult_[di] == 0) --uncovered_;
                ++diff_mult_[d];
                ++diff_mult_[di];
            }
            ++noninf_placed_;
        }
        adj_[a] |= 1ull << b;
        adj_[b] |= 1ull << a;
        ++deg_[a];
        ++deg_[b];
        return true;
    }

    void remove_edge(int a, int b) {
        adj_[a] &= ~(1ull << b);
        adj_[b] &= ~(1ull << a);
        --deg_[a];
        --deg_[b];
        const int inf = nv_ - 1;
        if (a != inf && b != inf) {
            const FiniteGroup& g = *group_;
            const int d = g.mul(a, g.inverse(b));
            const int di = g.inverse(d);
            if (d == di) {
                diff_mult_[d] -= 2;
                if (diff_mult_[d] == 0) ++uncovered_;
            } else {
                --diff_mult_[d];
                --diff_mult_[di];
                if (diff_mult_[d] == 0) ++uncovered_;
                if (diff_mult_[di] == 0) ++uncovered_;
            }
            --noninf_placed_;
        }
    }

    // Places the stabilizer orbit of [v, u]; fills `placed` with what went in.
    bool place_orbit(int v, int u, std::vector<std::pair<int, int>>& placed) {
        for (std::size_t i = 0; i < subgroup_.size(); ++i) {
            int a = action_[i][v], b = action_[i][u];
            if (a > b) std::swap(a, b);
            bool already = false;
            for (const auto& e : placed) already = already || (e.first == a && e.second == b);
            if (already) continue;
            if (!add_edge(a, b)) return false;
            placed.emplace_back(a, b);
        }
        return true;
    }

    void rollback(const std::vector<std::pair<int, int>>& placed) {
        for (auto it = placed.rbegin(); it != placed.rend(); ++it) remove_edge(it->first, it->second);
    }

    bool feasible() const {
        // Every uncovered difference needs a future non-infinity edge slot.
        return uncovered_ <= 2 * (target_noninf_ - noninf_placed_);
    }

    // Extends vertex v with neighbors of index >= min_next; returns true to
    // unwind the whole search (found/limit/budget).
    bool dfs(int v, int min_next) {
        while (v < nv_ && deg_[v] == spec_.k) {
            ++v;
            min_next = 0;
        }
        if (v == nv_) return emit();
        for (int u = std::max(min_next, 0); u < nv_; ++u) {
            if (u == v || deg_[u] >= spec_.k || edge_present(v, u)) continue;
            ++nodes_;
            if (over_budget()) {
                budget_hit_ = true;
                return true;
            }
            std::vector<std::pair<int, int>> placed;
            const bool ok = place_orbit(v, u, placed);
            const bool stop = ok && feasible() && dfs(v, u + 1);
            rollback(placed);
            if (stop) return true;
        }
        return false;
    }

    bool emit() {
        std::vector<Edge> edges;
        for (int a = 0; a < nv_; ++a)
            for (int b = a + 1; b < nv_; ++b)
                if (edge_present(a, b)) edges.emplace_back(to_vertex(a), to_vertex(b));
        Factor f(group_, std::move(edges));
        auto check = verify_starter(f, spec_.k);
        if (!check.accepted) return false;
        if (spec_.target_signature && op_signature(f) != *spec_.target_signature) return false;
        if (spec_.required_stabilizer) {
            for (int sg : subgroup_)
                if (!std::binary_search(check.starter->stab.begin(), check.starter->stab.end(), sg))
                    return false;
        }
        if (!found_one_) {
            found_one_ = true;
            first_ = *check.starter;
        }
        if ((*sink_)(std::move(*check.starter))) {
            stopped_ = true;
            return true;
        }
        return false;
    }

    Vertex to_vertex(int s) const { return s == nv_ - 1 ? Vertex::infinity() : Vertex::element(s); }

    SearchSpec spec_;
    GroupPtr group_;
    int nv_ = 0;
    bool trivially_empty_ = false;
    std::vector<int> subgroup_;
    std::vector<std::vector<int>> action_;

    std::array<std::uint64_t, 64> adj_{};
    std::vector<int> deg_;
    std::vector<int> diff_mult_;
    int uncovered_ = 0;
    int noninf_placed_ = 0;
    int target_noninf_ = 0;

    std::uint64_t nodes_ = 0;
    bool budget_hit_ = false;
    bool stopped_ = false;
    bool found_one_ = false;
    std::optional<Starter> first_;
    std::chrono::steady_clock::time_point start_;
    const std::function<bool(Starter&&)>* sink_ = nullptr;
};

}  // namespace detail

// First starter matching the spec, in the frozen deterministic order; or
// Exhausted after a complete traversal; or BudgetExceeded.
inline SearchOutcome find_starter(const SearchSpec& spec) {
    detail::StarterSearch search(spec);
    return search.run([](Starter&&) { return true; });
}

// Up to `limit` distinct starters in deterministic order.
inline std::vector<Starter> enumerate_starters(const SearchSpec& spec, std::size_t limit) {
    std::vector<Starter> out;
    if (limit == 0) return out;
    detail::StarterSearch search(spec);
    std::set<std::vector<Edge>> seen;
    search.run([&](Starter&& s) {
        if (seen.insert(s.factor.edges()).second) out.push_back(std::move(s));
        return out.size() >= limit;
    });
    return out;
}

}  // namespace oberforge
