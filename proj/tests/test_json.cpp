#include <doctest.h>

#include "fixtures.hpp"

using namespace oberforge;
using fixtures::el;
using fixtures::inf;

TEST_CASE("group spec round trips") {
    const GroupSpec specs[] = {
        GroupSpec::cyclic(12), GroupSpec::dihedral(16), GroupSpec::dicyclic(8),
        GroupSpec::product(GroupSpec::cyclic(12), GroupSpec::cyclic(3)),
        GroupSpec::product(GroupSpec::product(GroupSpec::cyclic(2), GroupSpec::cyclic(2)),
                           GroupSpec::dihedral(6))};
    for (const GroupSpec& s : specs) CHECK(group_spec_from_json(to_json(s)) == s);

    CHECK(to_json(GroupSpec::cyclic(12)) == json{{"family", "cyclic"}, {"n", 12}});
    CHECK(group_spec_from_json(json::parse(R"({"family":"dihedral","order":12})")) ==
          GroupSpec::dihedral(12));
    CHECK_THROWS_AS(group_spec_from_json(json::parse(R"({"family":"simple"})")), ParameterError);
    CHECK_THROWS_AS(group_spec_from_json(json::parse(R"({"n":12})")), ParameterError);
    CHECK_THROWS_AS(group_spec_from_json(json::parse(R"({"family":"cyclic","n":0})")), ParameterError);
}

TEST_CASE("factor round trips") {
    SUBCASE("2-regular factors serialize as cycles with the inf sentinel") {
        Factor f = fixtures::z12_op58_starter().factor;
        json j = to_json(f);
        REQUIRE(j.contains("cycles"));
        CHECK(j["cycles"][0][4] == json("inf"));  // (0, 3, 9, 6, inf)
        Factor back = factor_from_json(j);
        CHECK(back == f);
    }
    SUBCASE("irregular factors serialize as edges") {
        auto z4 = make_group(GroupSpec::cyclic(4));
        Factor f = build_factor(z4, std::vector<Edge>{Edge(el(0), el(1)), Edge(el(2), inf())});
        json j = to_json(f);
        REQUIRE(j.contains("edges"));
        CHECK(factor_from_json(j) == f);
    }
    SUBCASE("cycles form parses the documented example") {
        json j = json::parse(
            R"({"group":{"family":"cyclic","n":12},
                "cycles":[["inf",0,3,9,6],[1,5,4,2,7,11,10,8]]})");
        CHECK(factor_from_json(j) == fixtures::z12_op58_starter().factor);
    }
    SUBCASE("malformed factors are rejected") {
        CHECK_THROWS_AS(factor_from_json(json::parse(R"({"group":{"family":"cyclic","n":4}})")),
                        ParameterError);
        CHECK_THROWS_AS(factor_from_json(json::parse(
                            R"({"group":{"family":"cyclic","n":4},"cycles":[[0,1,9]]})")),
                        ParameterError);
        CHECK_THROWS_AS(factor_from_json(json::parse(
                            R"({"group":{"family":"cyclic","n":4},"edges":[[0,"infinity"]]})")),
                        ParameterError);
    }
}

TEST_CASE("starter files carry a certificate") {
    Starter s = fixtures::z12_op58_starter();
    json j = to_json(s);
    REQUIRE(j.contains("certificate"));
    CHECK(j["certificate"]["k"] == 2);
    CHECK(j["certificate"]["stabilizer"] == json::array({0, 6}));
    SUBCASE("k can come from the certificate or be overridden") {
        Starter back = starter_from_json(j);
        CHECK(back.k == 2);
        CHECK(back.factor == s.factor);
        CHECK_THROWS_AS(starter_from_json(j, 4), ParameterError);  // does not certify at 4
    }
    SUBCASE("verification reports serialize with witnesses") {
        auto v = verify_starter(s.factor, 4);
        json rep = to_json(v, s.factor.group());
        CHECK(rep["accepted"] == false);
        CHECK(rep["witnesses"]["stabilizer_order"] == 2);
        CHECK_FALSE(rep["witnesses"]["bad_degrees"].empty());
    }
}

TEST_CASE("factorization round trips") {
    auto fz = develop(fixtures::z4_starter());
    json j = to_json(fz);
    Factorization back = factorization_from_json(j);
    CHECK(back.k == fz.k);
    REQUIRE(back.factors.size() == fz.factors.size());
    for (std::size_t i = 0; i < back.factors.size(); ++i) CHECK(back.factors[i] == fz.factors[i]);
    CHECK(verify_factorization(back).ok);
    SUBCASE("report serialization") {
        Factorization broken{fz.group, fz.k, {fz.factors[0], fz.factors[0]}};
        json rep = to_json(verify_factorization(broken));
        CHECK(rep["ok"] == false);
        CHECK_FALSE(rep["witnesses"]["duplicate_edges"].empty());
    }
}

TEST_CASE("lifted starter files are self-contained") {
    auto lifted = lift_2n(fixtures::z12_op58_starter(), 3);
    json j = to_json(lifted);
    CHECK(j["n"] == 3);
    CHECK(j["profile"]["a"] == 0);
    CHECK(j["profile"]["b"] == 6);
    LiftedStarter back = lifted_from_json(j);
    CHECK(back.lifted.factor == lifted.lifted.factor);
    auto parts = split_lift(back, 3);
    CHECK(parts.size() == 3);
    SUBCASE("a tampered profile is rejected") {
        json bad = j;
        bad["profile"]["a"] = 6;
        CHECK_THROWS_AS(lifted_from_json(bad), ParameterError);
    }
    SUBCASE("a tampered factor is rejected") {
        json bad = j;
        bad["factor"] = to_json(fixtures::z12_op58_starter().factor);
        CHECK_THROWS_AS(lifted_from_json(bad), ParameterError);
    }
}

TEST_CASE("analysis reports serialize") {
    auto rep = check_rk_necessary(*make_group(GroupSpec::dihedral(16)), 4);
    json j = to_json(rep);
    CHECK(j["verdict"] == "fail");
    CHECK(j["central_product_ok"] == false);
    CHECK(j["involution_class_count"] == 3);
    CHECK_FALSE(j["reasons"].empty());
}

TEST_CASE("search specs and outcomes serialize") {
    SearchSpec spec{GroupSpec::dihedral(6), 2, OPSignature({3, 4}), std::vector<int>{3}};
    json j = to_json(spec);
    SearchSpec back = search_spec_from_json(j);
    CHECK(back.group == spec.group);
    CHECK(back.k == 2);
    CHECK(*back.target_signature == *spec.target_signature);
    CHECK(*back.required_stabilizer == *spec.required_stabilizer);

    auto outcome = find_starter(back);
    json oj = to_json(outcome);
    CHECK(oj["status"] == "found");
    CHECK(oj.contains("starter"));
    Starter s = starter_from_json(oj["starter"]);
    CHECK(verify_starter(s.factor, 2).accepted);
}
