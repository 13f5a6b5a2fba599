#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oberforge {

// Bad user input (invalid parameters, malformed files, violated preconditions).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Internal consistency failure; indicates a bug, not bad input.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

/**
 * Description of a finite group from one of the built-in families:
 *   cyclic(n), dihedral(order 2N), dicyclic(order 4m), product(left, right).
 */
class GroupSpec {
public:
    enum class Family { Cyclic, Dihedral, Dicyclic, Product };

    static GroupSpec cyclic(int n) {
        if (n < 1) throw ParameterError("cyclic group requires n >= 1, got " + std::to_string(n));
        return GroupSpec(Family::Cyclic, n);
    }

    static GroupSpec dihedral(int order) {
        if (order < 2 || order % 2 != 0)
            throw ParameterError("dihedral group requires an even order >= 2, got " + std::to_string(order));
        return GroupSpec(Family::Dihedral, order);
    }

    static GroupSpec dicyclic(int order) {
        if (order < 8 || order % 4 != 0)
            throw ParameterError("dicyclic group requires an order divisible by 4 and >= 8, got " +
                                 std::to_string(order));
        return GroupSpec(Family::Dicyclic, order);
    }

    static GroupSpec product(GroupSpec left, GroupSpec right) {
        GroupSpec s(Family::Product, 0);
        s.left_ = std::make_shared<GroupSpec>(std::move(left));
        s.right_ = std::make_shared<GroupSpec>(std::move(right));
        return s;
    }

    Family family() const { return family_; }

    // n for cyclic, the group order for dihedral/dicyclic.
    int parameter() const { return param_; }

    const GroupSpec& left() const {
        if (family_ != Family::Product) throw InvariantError("left() on non-product spec");
        return *left_;
    }
    const GroupSpec& right() const {
        if (family_ != Family::Product) throw InvariantError("right() on non-product spec");
        return *right_;
    }

    int order() const {
        return family_ == Family::Product ? left_->order() * right_->order() : param_;
    }

    std::string describe() const {
        switch (family_) {
            case Family::Cyclic:   return "cyclic(" + std::to_string(param_) + ")";
            case Family::Dihedral: return "dihedral(" + std::to_string(param_) + ")";
            case Family::Dicyclic: return "dicyclic(" + std::to_string(param_) + ")";
            case Family::Product:  return "product(" + left_->describe() + ", " + right_->describe() + ")";
        }
        return "?";
    }

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
        if (a.family_ != b.family_) return false;
        if (a.family_ == Family::Product) return *a.left_ == *b.left_ && *a.right_ == *b.right_;
        return a.param_ == b.param_;
    }
    friend bool operator!=(const GroupSpec& a, const GroupSpec& b) { return !(a == b); }

private:
    GroupSpec(Family f, int p) : family_(f), param_(p) {}

    Family family_;
    int param_;
    std::shared_ptr<const GroupSpec> left_, right_;
};

/**
 * A finite group realized as an explicit multiplication table.
 *
 * Element indexing is frozen per family so that files referring to elements
 * by index are portable:
 *   cyclic Z_n:            index i            <-> i
 *   dihedral of order 2N:  index i (i < N)    <-> r^i,  index N+i  <-> r^i s
 *   dicyclic of order 4m:  index i (i < 2m)   <-> a^i,  index 2m+i <-> a^i b
 *   product L x R:         index              <-> i_left * |R| + i_right
 *
 * Immutable after construction; safe for unrestricted concurrent reads.
 */
class FiniteGroup {
public:
    static constexpr int identity = 0;

    explicit FiniteGroup(GroupSpec spec) : spec_(std::move(spec)), order_(spec_.order()) {
        build();
        validate();
    }

    int order() const { return order_; }
    const GroupSpec& spec() const { return spec_; }

    int mul(int x, int y) const {
        check_index(x);
        check_index(y);
        return table_[static_cast<std::size_t>(x) * order_ + y];
    }

    int inverse(int x) const {
        check_index(x);
        return inverse_[x];
    }

    const std::string& element_name(int x) const {
        check_index(x);
        return names_[x];
    }

    // Least t >= 1 with x^t = 1.
    int element_order(int x) const {
        check_index(x);
        int t = x, n = 1;
        while (t != identity) {
            t = table_[static_cast<std::size_t>(t) * order_ + x];
            ++n;
        }
        return n;
    }

    bool is_involution(int x) const { return x != identity && mul(x, x) == identity; }

    std::vector<int> involutions() const {
        std::vector<int> out;
        for (int x = 1; x < order_; ++x)
            if (mul(x, x) == identity) out.push_back(x);
        return out;
    }

private:
    void check_index(int x) const {
        if (x < 0 || x >= order_)
            throw ParameterError("element index " + std::to_string(x) + " out of range for group of order " +
                                 std::to_string(order_));
    }

    void set(int x, int y, int z) { table_[static_cast<std::size_t>(x) * order_ + y] = z; }

    void build() {
        table_.assign(static_cast<std::size_t>(order_) * order_, 0);
        names_.assign(order_, "");
        switch (spec_.family()) {
            case GroupSpec::Family::Cyclic: {
                const int n = order_;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) set(i, j, (i + j) % n);
                for (int i = 0; i < n; ++i) names_[i] = std::to_string(i);
                break;
            }
            case GroupSpec::Family::Dihedral: {
                // <r, s : r^M = s^2 = 1, s r = r^-1 s>, M rotations.
                const int m = order_ / 2;
                auto idx = [m](int rot, int refl) { return refl * m + rot; };
                for (int i = 0; i < m; ++i) {
                    for (int f = 0; f < 2; ++f) {
                        for (int j = 0; j < m; ++j) {
                            for (int g = 0; g < 2; ++g) {
                                const int rot = f == 0 ? (i + j) % m : ((i - j) % m + m) % m;
                                set(idx(i, f), idx(j, g), idx(rot, f ^ g));
                            }
                        }
                        names_[idx(i, f)] = word("r", i) + (f ? "s" : "");
                        if (names_[idx(i, f)].empty()) names_[idx(i, f)] = "1";
                    }
                }
                break;
            }
            case GroupSpec::Family::Dicyclic: {
                // <a, b : a^{2m} = 1, b^2 = a^m, b a = a^-1 b>
                const int m = order_ / 4;
                const int tm = 2 * m;
                auto idx = [tm](int rot, int f) { return f * tm + rot; };
                for (int i = 0; i < tm; ++i) {
                    for (int f = 0; f < 2; ++f) {
                        for (int j = 0; j < tm; ++j) {
                            for (int g = 0; g < 2; ++g) {
                                int rot = f == 0 ? (i + j) % tm : ((i - j) % tm + tm) % tm;
                                if (f == 1 && g == 1) rot = (rot + m) % tm;
                                set(idx(i, f), idx(j, g), idx(rot, f ^ g));
                            }
                        }
                        names_[idx(i, f)] = word("a", i) + (f ? "b" : "");
                        if (names_[idx(i, f)].empty()) names_[idx(i, f)] = "1";
                    }
                }
                break;
            }
            case GroupSpec::Family::Product: {
                const FiniteGroup lg(spec_.left());
                const FiniteGroup rg(spec_.right());
                const int rn = rg.order();
                for (int il = 0; il < lg.order(); ++il) {
                    for (int ir = 0; ir < rn; ++ir) {
                        const int x = il * rn + ir;
                        names_[x] = "(" + lg.element_name(il) + "," + rg.element_name(ir) + ")";
                        for (int jl = 0; jl < lg.order(); ++jl)
                            for (int jr = 0; jr < rn; ++jr)
                                set(x, jl * rn + jr, lg.mul(il, jl) * rn + rg.mul(ir, jr));
                    }
                }
                break;
            }
        }
        inverse_.assign(order_, -1);
        for (int x = 0; x < order_; ++x) {
            for (int y = 0; y < order_; ++y) {
                if (mul(x, y) == identity && mul(y, x) == identity) {
                    inverse_[x] = y;
                    break;
                }
            }
            if (inverse_[x] < 0)
                throw InvariantError("no inverse for element " + std::to_string(x) + " in " + spec_.describe());
        }
    }

    static std::string word(const char* gen, int power) {
        if (power == 0) return "";
        if (power == 1) return gen;
        return std::string(gen) + "^" + std::to_string(power);
    }

    void validate() const {
        for (int x = 0; x < order_; ++x) {
            if (mul(identity, x) != x || mul(x, identity) != x)
                throw InvariantError("identity law fails in " + spec_.describe());
        }
        // Rows and columns must be permutations.
        std::vector<char> seen(order_);
        for (int x = 0; x < order_; ++x) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int y = 0; y < order_; ++y) seen[mul(x, y)] = 1;
            for (int v = 0; v < order_; ++v)
                if (!seen[v]) throw InvariantError("multiplication table row is not a permutation");
        }
        // Full associativity check at desk scale, deterministic sample above.
        if (order_ <= 512) {
            for (int x = 0; x < order_; ++x)
                for (int y = 0; y < order_; ++y)
                    for (int z = 0; z < order_; ++z)
                        if (mul(mul(x, y), z) != mul(x, mul(y, z)))
                            throw InvariantError("associativity fails in " + spec_.describe());
        } else {
            const int stride = order_ / 64 + 1;
            for (int x = 0; x < order_; x += stride)
                for (int y = 0; y < order_; y += stride)
                    for (int z = 0; z < order_; z += stride)
                        if (mul(mul(x, y), z) != mul(x, mul(y, z)))
                            throw InvariantError("associativity fails in " + spec_.describe());
        }
    }

    GroupSpec spec_;
    int order_;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::vector<std::string> names_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr make_group(const GroupSpec& spec) { return std::make_shared<FiniteGroup>(spec); }

// Conjugacy classes as a partition of the element indices; blocks are sorted
// and ordered by least member.
inline std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
    const int n = g.order();
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> out;
    for (int x = 0; x < n; ++x) {
        if (cls[x] >= 0) continue;
        const int id = static_cast<int>(out.size());
        std::vector<int> block;
        for (int h = 0; h < n; ++h) {
            const int y = g.mul(g.mul(g.inverse(h), x), h);
            if (cls[y] < 0) {
                cls[y] = id;
                block.push_back(y);
            }
        }
        std::sort(block.begin(), block.end());
        out.push_back(std::move(block));
    }
    return out;
}

inline std::vector<int> center(const FiniteGroup& g) {
    std::vector<int> out;
    for (int z = 0; z < g.order(); ++z) {
        bool central = true;
        for (int x = 0; x < g.order() && central; ++x) central = g.mul(z, x) == g.mul(x, z);
        if (central) out.push_back(z);
    }
    return out;
}

// Smallest subgroup containing the given generators.
inline std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens) {
    std::vector<char> in(g.order(), 0);
    in[FiniteGroup::identity] = 1;
    std::vector<int> frontier{FiniteGroup::identity};
    for (int x : gens) {
        if (x < 0 || x >= g.order())
            throw ParameterError("generator index " + std::to_string(x) + " out of range");
        if (!in[x]) {
            in[x] = 1;
            frontier.push_back(x);
        }
    }
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        for (std::size_t j = 0; j < frontier.size(); ++j) {
            const int p = g.mul(frontier[i], frontier[j]);
            if (!in[p]) {
                in[p] = 1;
                frontier.push_back(p);
            }
        }
    }
    std::vector<int> out;
    for (int x = 0; x < g.order(); ++x)
        if (in[x]) out.push_back(x);
    return out;
}

inline std::string format_element_set(const FiniteGroup& g, const std::vector<int>& xs) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << g.element_name(xs[i]);
    os << "}";
    return os.str();
}

/**
 * Necessary-condition report for a group admitting a 1-rotational
 * k-factorization. With k = 2^n * m (m odd) the checks are:
 *   - k divides |G|,
 *   - k is even whenever |G| is even,
 *   - at most m(2^n - 1) conjugacy classes contain involutions,
 *   - when the class count meets that bound exactly, multiplying an
 *     involution by a central involution must land in a different class.
 *
 * A fail verdict is a proof of nonexistence; a pass verdict proves nothing.
 */
struct RkReport {
    int k = 0;
    int n_exponent = 0;
    int odd_part = 0;
    bool divisibility_ok = false;
    bool parity_ok = false;
    bool class_bound_ok = false;
    bool central_product_ok = false;
    int involution_class_count = 0;
    std::vector<std::string> failures;

    bool pass() const { return divisibility_ok && parity_ok && class_bound_ok && central_product_ok; }
};

inline RkReport check_rk_necessary(const FiniteGroup& g, int k) {
    if (k < 2) throw ParameterError("k must be at least 2, got " + std::to_string(k));
    RkReport rep;
    rep.k = k;
    int m = k;
    while (m % 2 == 0) {
        m /= 2;
        ++rep.n_exponent;
    }
    rep.odd_part = m;

    rep.divisibility_ok = g.order() % k == 0;
    if (!rep.divisibility_ok)
        rep.failures.push_back("k = " + std::to_string(k) + " does not divide |G| = " + std::to_string(g.order()));

    rep.parity_ok = g.order() % 2 == 1 || k % 2 == 0;
    if (!rep.parity_ok) rep.failures.push_back("|G| is even but k is odd");

    const auto classes = conjugacy_classes(g);
    std::vector<int> class_of(g.order());
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (int x : classes[c]) class_of[x] = static_cast<int>(c);
    for (const auto& c : classes)
        if (g.is_involution(c.front())) ++rep.involution_class_count;

    const int bound = rep.odd_part * ((1 << rep.n_exponent) - 1);
    rep.class_bound_ok = rep.involution_class_count <= bound;
    if (!rep.class_bound_ok)
        rep.failures.push_back(std::to_string(rep.involution_class_count) +
                               " conjugacy classes contain involutions, exceeding the bound " +
                               std::to_string(bound));

    rep.central_product_ok = true;
    if (rep.involution_class_count == bound) {
        // Equality case: z central involution, x any other involution; x*z must
        // be an involution in a class different from x's.  (x = z gives the
        // identity and carries no information.)
        const auto invs = g.involutions();
        for (int z : center(g)) {
            if (!g.is_involution(z)) continue;
            for (int x : invs) {
                if (x == z) continue;
                const int xz = g.mul(x, z);
                if (!g.is_involution(xz) || class_of[xz] == class_of[x]) {
                    rep.central_product_ok = false;
                    rep.failures.push_back("central involution product stays in one conjugacy class: " +
                                           g.element_name(x) + " * " + g.element_name(z) + " = " +
                                           g.element_name(xz) + " is conjugate to " + g.element_name(x));
                }
            }
        }
    }
    return rep;
}

}  // namespace oberforge
