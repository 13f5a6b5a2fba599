#pragma once

#include <json.hpp>

#include "oberforge/search.hpp"

namespace oberforge {

using json = nlohmann::json;

// ---------------------------------------------------------------- GroupSpec

inline json to_json(const GroupSpec& spec) {
    switch (spec.family()) {
        case GroupSpec::Family::Cyclic: return json{{"family", "cyclic"}, {"n", spec.parameter()}};
        case GroupSpec::Family::Dihedral: return json{{"family", "dihedral"}, {"order", spec.parameter()}};
        case GroupSpec::Family::Dicyclic: return json{{"family", "dicyclic"}, {"order", spec.parameter()}};
        case GroupSpec::Family::Product:
            return json{{"family", "product"}, {"left", to_json(spec.left())}, {"right", to_json(spec.right())}};
    }
    throw InvariantError("unknown group family");
}

inline GroupSpec group_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("family") || !j.at("family").is_string())
        throw ParameterError("group spec must be an object with a \"family\" string");
    const std::string family = j.at("family").get<std::string>();
    auto require_int = [&](const char* key) {
        if (!j.contains(key) || !j.at(key).is_number_integer())
            throw ParameterError("group spec field \"" + std::string(key) + "\" must be an integer");
        return j.at(key).get<int>();
    };
    if (family == "cyclic") return GroupSpec::cyclic(require_int("n"));
    if (family == "dihedral") return GroupSpec::dihedral(require_int("order"));
    if (family == "dicyclic") return GroupSpec::dicyclic(require_int("order"));
    if (family == "product") {
        if (!j.contains("left") || !j.contains("right"))
            throw ParameterError("product group spec requires \"left\" and \"right\"");
        return GroupSpec::product(group_spec_from_json(j.at("left")), group_spec_from_json(j.at("right")));
    }
    throw ParameterError("unknown group family \"" + family + "\"");
}

// ------------------------------------------------------------------- Factor

inline json vertex_to_json(Vertex v) {
    if (v.is_infinity()) return json("inf");
    return json(v.idx);
}

inline Vertex vertex_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return Vertex::infinity();
        throw ParameterError("vertex must be an integer index or \"inf\"");
    }
    if (!j.is_number_integer() || j.get<int>() < 0)
        throw ParameterError("vertex must be a nonnegative integer index or \"inf\"");
    return Vertex::element(j.get<int>());
}

// 2-regular spanning factors serialize as cycles, everything else as edges.
inline json to_json(const Factor& f) {
    json out{{"group", to_json(f.group().spec())}};
    if (!f.edges().empty() && is_k_factor(f, 2)) {
        json cycles = json::array();
        for (const auto& cyc : extract_cycles(f)) {
            json c = json::array();
            for (Vertex v : cyc) c.push_back(vertex_to_json(v));
            cycles.push_back(std::move(c));
        }
        out["cycles"] = std::move(cycles);
    } else {
        json edges = json::array();
        for (const Edge& e : f.edges()) edges.push_back(json::array({vertex_to_json(e.u), vertex_to_json(e.v)}));
        out["edges"] = std::move(edges);
    }
    return out;
}

inline Factor factor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("group")) throw ParameterError("factor file requires a \"group\" field");
    GroupPtr group = make_group(group_spec_from_json(j.at("group")));
    if (j.contains("cycles")) {
        std::vector<std::vector<Vertex>> cycles;
        for (const json& c : j.at("cycles")) {
            std::vector<Vertex> cyc;
            for (const json& v : c) cyc.push_back(vertex_from_json(v));
            cycles.push_back(std::move(cyc));
        }
        return build_factor(std::move(group), cycles);
    }
    if (j.contains("edges")) {
        std::vector<Edge> edges;
        for (const json& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParameterError("edge must be a pair of vertices");
            edges.emplace_back(vertex_from_json(e.at(0)), vertex_from_json(e.at(1)));
        }
        return build_factor(std::move(group), std::move(edges));
    }
    throw ParameterError("factor file requires \"cycles\" or \"edges\"");
}

// ------------------------------------------------------------------ Starter

inline json to_json(const Starter& s) {
    json out = to_json(s.factor);
    out["certificate"] = json{{"k", s.k}, {"stabilizer", s.stab}, {"coverage_complete", true}};
    return out;
}

// The certificate block, when present, is advisory: the factor is re-verified.
inline Starter starter_from_json(const json& j, std::optional<int> k_override = std::nullopt) {
    Factor f = factor_from_json(j);
    int k = 0;
    if (k_override) {
        k = *k_override;
    } else if (j.contains("certificate") && j.at("certificate").contains("k")) {
        k = j.at("certificate").at("k").get<int>();
    } else {
        throw ParameterError("no k given and the factor file carries no certificate");
    }
    auto check = verify_starter(f, k);
    if (!check.accepted) throw ParameterError("factor does not certify: " + check.summary(f.group()));
    return *check.starter;
}

inline json to_json(const StarterVerification& v, const FiniteGroup& g) {
    json witnesses;
    json degrees = json::array();
    for (const auto& [vertex, deg] : v.degree_witnesses)
        degrees.push_back(json{{"vertex", vertex_to_json(vertex)}, {"degree", deg}});
    witnesses["bad_degrees"] = std::move(degrees);
    witnesses["stabilizer"] = v.stab;
    witnesses["stabilizer_order"] = v.stab.size();
    witnesses["uncovered_differences"] = v.uncovered_differences;
    return json{{"accepted", v.accepted},
                {"k", v.k},
                {"k_factor_ok", v.k_factor_ok},
                {"stabilizer_ok", v.stabilizer_ok},
                {"coverage_ok", v.coverage_ok},
                {"witnesses", std::move(witnesses)},
                {"summary", v.summary(g)}};
}

// ------------------------------------------------------------ Factorization

inline json to_json(const Factorization& fz) {
    json factors = json::array();
    for (const Factor& f : fz.factors) factors.push_back(to_json(f));
    return json{{"group", to_json(fz.group->spec())}, {"k", fz.k}, {"factors", std::move(factors)}};
}

inline Factorization factorization_from_json(const json& j) {
    if (!j.is_object() || !j.contains("group") || !j.contains("k") || !j.contains("factors"))
        throw ParameterError("factorization file requires \"group\", \"k\" and \"factors\"");
    Factorization fz{make_group(group_spec_from_json(j.at("group"))), j.at("k").get<int>(), {}};
    for (const json& f : j.at("factors")) fz.factors.push_back(factor_from_json(f));
    return fz;
}

inline json to_json(const FactorizationReport& rep) {
    json dup = json::array(), miss = json::array(), degs = json::array();
    for (const Edge& e : rep.duplicate_edges)
        dup.push_back(json::array({vertex_to_json(e.u), vertex_to_json(e.v)}));
    for (const Edge& e : rep.missing_edges)
        miss.push_back(json::array({vertex_to_json(e.u), vertex_to_json(e.v)}));
    for (const auto& d : rep.degree_issues)
        degs.push_back(json{{"factor", d.factor_index}, {"vertex", vertex_to_json(d.v)}, {"degree", d.degree}});
    return json{{"ok", rep.ok},
                {"disjoint_ok", rep.disjoint_ok},
                {"cover_ok", rep.cover_ok},
                {"regular_ok", rep.regular_ok},
                {"witnesses",
                 json{{"duplicate_edges", std::move(dup)},
                      {"missing_edges", std::move(miss)},
                      {"degree_issues", std::move(degs)}}}};
}

// ------------------------------------------------------------ LiftedStarter

inline json to_json(const LiftedStarter& lifted) {
    json profile{{"a", lifted.profile.a},
                 {"b", lifted.profile.b},
                 {"y", lifted.profile.y},
                 {"cycles", lifted.profile.other_cycles}};
    return json{{"base", to_json(lifted.base)},
                {"n", lifted.n},
                {"profile", std::move(profile)},
                {"factor", to_json(lifted.lifted)}};
}

// Rebuilds and re-verifies everything; the stored profile must match the
// frozen anchoring recomputed from the base starter.
inline LiftedStarter lifted_from_json(const json& j) {
    if (!j.is_object() || !j.contains("base") || !j.contains("n") || !j.contains("factor"))
        throw ParameterError("lifted starter file requires \"base\", \"n\" and \"factor\"");
    const int n = j.at("n").get<int>();
    Starter base = starter_from_json(j.at("base"), 2);
    LiftedStarter lifted = lift_2n(base, n);
    if (j.contains("profile")) {
        const json& p = j.at("profile");
        if (p.at("a").get<int>() != lifted.profile.a || p.at("b").get<int>() != lifted.profile.b ||
            p.at("y").get<std::vector<int>>() != lifted.profile.y ||
            p.at("cycles").get<std::vector<std::vector<int>>>() != lifted.profile.other_cycles)
            throw ParameterError("stored profile does not match the base starter");
    }
    Factor stored = factor_from_json(j.at("factor"));
    if (stored.edges() != lifted.lifted.factor.edges() || stored.group().spec() != lifted.lifted_group->spec())
        throw ParameterError("stored lifted factor does not match the lift of the base starter");
    return lifted;
}

// ----------------------------------------------------------------- RkReport

inline json to_json(const RkReport& rep) {
    return json{{"k", rep.k},
                {"n_exponent", rep.n_exponent},
                {"odd_part", rep.odd_part},
                {"divisibility_ok", rep.divisibility_ok},
                {"parity_ok", rep.parity_ok},
                {"class_bound_ok", rep.class_bound_ok},
                {"central_product_ok", rep.central_product_ok},
                {"involution_class_count", rep.involution_class_count},
                {"verdict", rep.pass() ? "pass" : "fail"},
                {"reasons", rep.failures}};
}

// ------------------------------------------------------------------- Search

inline json to_json(const SearchSpec& spec) {
    json out{{"group", to_json(spec.group)},
             {"k", spec.k},
             {"node_budget", spec.node_budget},
             {"time_budget_seconds", spec.time_budget_seconds}};
    if (spec.target_signature) out["target_signature"] = spec.target_signature->lengths();
    if (spec.required_stabilizer) out["required_stabilizer"] = *spec.required_stabilizer;
    return out;
}

inline SearchSpec search_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("group") || !j.contains("k"))
        throw ParameterError("search spec requires \"group\" and \"k\"");
    SearchSpec spec{group_spec_from_json(j.at("group")), j.at("k").get<int>()};
    if (j.contains("target_signature"))
        spec.target_signature = OPSignature(j.at("target_signature").get<std::vector<int>>());
    if (j.contains("required_stabilizer"))
        spec.required_stabilizer = j.at("required_stabilizer").get<std::vector<int>>();
    if (j.contains("node_budget")) spec.node_budget = j.at("node_budget").get<std::uint64_t>();
    if (j.contains("time_budget_seconds")) spec.time_budget_seconds = j.at("time_budget_seconds").get<double>();
    return spec;
}

inline json to_json(const SearchOutcome& outcome) {
    json out{{"status", to_string(outcome.status)},
             {"nodes", outcome.nodes},
             {"elapsed_seconds", outcome.elapsed_seconds}};
    if (outcome.starter) out["starter"] = to_json(*outcome.starter);
    return out;
}

}  // namespace oberforge
