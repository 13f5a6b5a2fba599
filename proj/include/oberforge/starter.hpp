#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "oberforge/factor.hpp"

namespace oberforge {

/**
 * A k-factor certified as a starter: its stabilizer has order exactly k and
 * its difference list covers every non-identity group element.  The orbit of
 * a starter under the right action of G is a 1-rotational k-factorization.
 */
struct Starter {
    Factor factor;
    int k = 0;
    std::vector<int> stab;  // sorted element indices
};

/**
 * Certification result.  On rejection the witnesses name every failed
 * condition: degree-deviant vertices, the computed stabilizer, uncovered
 * differences.
 */
struct StarterVerification {
    bool accepted = false;
    int k = 0;
    bool k_factor_ok = false;
    bool stabilizer_ok = false;
    bool coverage_ok = false;
    std::vector<std::pair<Vertex, int>> degree_witnesses;
    std::vector<int> stab;
    std::vector<int> uncovered_differences;
    std::optional<Starter> starter;

    std::string summary(const FiniteGroup& g) const {
        std::ostringstream os;
        if (accepted) {
            os << k << "-starter certified, stabilizer " << format_element_set(g, stab);
            return os.str();
        }
        os << "rejected as a " << k << "-starter:";
        if (!k_factor_ok) {
            os << " not " << k << "-regular (";
            for (std::size_t i = 0; i < degree_witnesses.size() && i < 4; ++i)
                os << (i ? ", " : "") << vertex_label(degree_witnesses[i].first) << " has degree "
                   << degree_witnesses[i].second;
            if (degree_witnesses.size() > 4) os << ", ...";
            os << ")";
        }
        if (!stabilizer_ok)
            os << " stabilizer " << format_element_set(g, stab) << " has order " << stab.size() << " != "
               << k << ";";
        if (!coverage_ok) {
            os << " uncovered differences:";
            for (std::size_t i = 0; i < uncovered_differences.size() && i < 4; ++i)
                os << " " << g.element_name(uncovered_differences[i]);
            if (uncovered_differences.size() > 4) os << " ...";
        }
        return os.str();
    }
};

inline StarterVerification verify_starter(const Factor& f, int k) {
    const FiniteGroup& g = f.group();
    if (k < 2) throw ParameterError("starter verification requires k >= 2, got " + std::to_string(k));
    if (g.order() % k != 0)
        throw ParameterError("k = " + std::to_string(k) + " must divide the group order " +
                             std::to_string(g.order()));
    StarterVerification out;
    out.k = k;
    out.k_factor_ok = true;
    for (int s = 0; s < f.vertex_count(); ++s) {
        Vertex v = f.vertex_at_slot(s);
        if (f.degree(v) != k) {
            out.k_factor_ok = false;
            out.degree_witnesses.emplace_back(v, f.degree(v));
        }
    }
    out.stab = stabilizer(f);
    out.stabilizer_ok = static_cast<int>(out.stab.size()) == k;
    out.uncovered_differences = difference_list(f).uncovered();
    out.coverage_ok = out.uncovered_differences.empty();
    out.accepted = out.k_factor_ok && out.stabilizer_ok && out.coverage_ok;
    if (out.accepted) out.starter = Starter{f, k, out.stab};
    return out;
}

/**
 * A set of factors claimed to partition the edges of the complete graph on
 * G u {infinity} into k-factors.
 */
struct Factorization {
    GroupPtr group;
    int k = 0;
    std::vector<Factor> factors;
};

struct FactorizationReport {
    bool ok = false;
    bool disjoint_ok = false;
    bool cover_ok = false;
    bool regular_ok = false;
    std::vector<Edge> duplicate_edges;
    std::vector<Edge> missing_edges;
    struct DegreeIssue {
        int factor_index;
        Vertex v;
        int degree;
    };
    std::vector<DegreeIssue> degree_issues;
};

inline FactorizationReport verify_factorization(const Factorization& fz) {
    FactorizationReport rep;
    if (!fz.group) throw ParameterError("factorization requires a group");
    const int nv = fz.group->order() + 1;
    std::vector<int> count(static_cast<std::size_t>(nv) * nv, 0);
    auto slot = [&](Vertex v) { return v.is_infinity() ? nv - 1 : v.idx; };
    rep.regular_ok = true;
    for (std::size_t i = 0; i < fz.factors.size(); ++i) {
        const Factor& f = fz.factors[i];
        if (f.group().spec() != fz.group->spec())
            throw ParameterError("factor " + std::to_string(i) + " built over a different group");
        for (const Edge& e : f.edges()) ++count[static_cast<std::size_t>(slot(e.u)) * nv + slot(e.v)];
        for (int s = 0; s < f.vertex_count(); ++s) {
            Vertex v = f.vertex_at_slot(s);
            if (f.degree(v) != fz.k)
                rep.degree_issues.push_back({static_cast<int>(i), v, f.degree(v)});
        }
    }
    rep.regular_ok = rep.degree_issues.empty();
    auto vertex_at = [&](int s) { return s == nv - 1 ? Vertex::infinity() : Vertex::element(s); };
    for (int a = 0; a < nv; ++a) {
        for (int b = a + 1; b < nv; ++b) {
            const int c = count[static_cast<std::size_t>(a) * nv + b];
            if (c == 0) rep.missing_edges.emplace_back(vertex_at(a), vertex_at(b));
            if (c > 1) rep.duplicate_edges.emplace_back(vertex_at(a), vertex_at(b));
        }
    }
    rep.disjoint_ok = rep.duplicate_edges.empty();
    rep.cover_ok = rep.missing_edges.empty();
    rep.ok = rep.disjoint_ok && rep.cover_ok && rep.regular_ok;
    return rep;
}

/**
 * Orbit development: the |G|/k distinct translates of a certified starter,
 * validated as an edge partition of the complete graph before returning.
 */
inline Factorization develop(const Starter& s) {
    const FiniteGroup& g = s.factor.group();
    Factorization fz{s.factor.group_ptr(), s.k, {}};
    std::set<std::vector<Edge>> seen;
    for (int x = 0; x < g.order(); ++x) {
        Factor img = act(s.factor, x);
        if (seen.insert(img.edges()).second) fz.factors.push_back(std::move(img));
    }
    if (fz.factors.size() != static_cast<std::size_t>(g.order() / s.k))
        throw InvariantError("orbit of the starter has " + std::to_string(fz.factors.size()) +
                             " distinct factors, expected " + std::to_string(g.order() / s.k));
    const auto rep = verify_factorization(fz);
    if (!rep.ok) throw InvariantError("developed orbit does not partition the complete graph");
    if (s.k == 2) {
        const auto ref = cycle_structure(fz.factors.front()).lengths;
        for (const Factor& f : fz.factors)
            if (cycle_structure(f).lengths != ref)
                throw InvariantError("developed 2-factors do not share one cycle structure");
    }
    return fz;
}

/**
 * Cycle-length multiset of a 2-factor, rendered in the usual Oberwolfach
 * notation: OP(13, ^3 8) means one 13-cycle and three 8-cycles.
 */
class OPSignature {
public:
    OPSignature() = default;

    explicit OPSignature(std::vector<int> lengths) : lengths_(std::move(lengths)) {
        for (int len : lengths_)
            if (len < 3) throw ParameterError("cycle length " + std::to_string(len) + " is shorter than 3");
        std::sort(lengths_.begin(), lengths_.end());
    }

    const std::vector<int>& lengths() const { return lengths_; }
    bool empty() const { return lengths_.empty(); }

    int vertex_count() const { return std::accumulate(lengths_.begin(), lengths_.end(), 0); }

    // Distinct lengths with multiplicities, ordered by (multiplicity, length).
    std::vector<std::pair<int, int>> parts() const {
        std::map<int, int> mult;
        for (int len : lengths_) ++mult[len];
        std::vector<std::pair<int, int>> out(mult.begin(), mult.end());
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            return std::make_pair(a.second, a.first) < std::make_pair(b.second, b.first);
        });
        return out;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "OP(";
        bool first = true;
        for (const auto& [len, mult] : parts()) {
            if (!first) os << ", ";
            first = false;
            if (mult > 1) os << "^" << mult << " ";
            os << len;
        }
        os << ")";
        return os.str();
    }

    friend bool operator==(const OPSignature& a, const OPSignature& b) { return a.lengths_ == b.lengths_; }
    friend bool operator!=(const OPSignature& a, const OPSignature& b) { return !(a == b); }

private:
    std::vector<int> lengths_;
};

inline OPSignature op_signature(const Factor& f) {
    auto cs = cycle_structure(f);
    if (!cs.two_regular) throw ParameterError("signature requires a 2-regular spanning factor");
    return OPSignature(cs.lengths);
}

}  // namespace oberforge
