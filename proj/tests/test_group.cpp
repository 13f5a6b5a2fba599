#include <doctest.h>

#include "fixtures.hpp"

using namespace oberforge;

TEST_CASE("cyclic group table") {
    auto g = make_group(GroupSpec::cyclic(12));
    CHECK(g->order() == 12);
    CHECK(g->mul(3, 4) == 7);
    CHECK(g->mul(3, 9) == 0);
    CHECK(g->inverse(5) == 7);
    CHECK(g->element_order(0) == 1);
    CHECK(g->element_order(1) == 12);
    CHECK(g->element_name(7) == "7");
}

TEST_CASE("dihedral group table and naming") {
    auto g = make_group(GroupSpec::dihedral(12));  // rotations 0..5, reflections 6..11
    CHECK(g->order() == 12);
    const int r = 1, s = 6;
    // s r = r^-1 s = r^5 s
    CHECK(g->mul(s, r) == 6 + 5);
    CHECK(g->mul(s, s) == FiniteGroup::identity);
    CHECK(g->element_order(3) == 2);  // r^3
    CHECK(g->element_order(1) == 6);
    CHECK(g->element_order(7) == 2);  // rs
    CHECK(g->element_name(0) == "1");
    CHECK(g->element_name(1) == "r");
    CHECK(g->element_name(6) == "s");
    CHECK(g->element_name(9) == "r^3s");
}

TEST_CASE("dicyclic group relations") {
    auto g = make_group(GroupSpec::dicyclic(8));  // quaternion-like: a order 4, b^2 = a^2
    const int a = 1, b = 4;
    CHECK(g->order() == 8);
    CHECK(g->mul(b, b) == 2);  // b^2 = a^2
    CHECK(g->element_order(a) == 4);
    CHECK(g->element_order(b) == 4);
    // b a = a^-1 b
    CHECK(g->mul(b, a) == g->mul(g->inverse(a), b));
    CHECK(g->involutions() == std::vector<int>{2});
}

TEST_CASE("product group indexing") {
    auto g = make_group(GroupSpec::product(GroupSpec::cyclic(12), GroupSpec::cyclic(3)));
    CHECK(g->order() == 36);
    // (3,1) * (9,2) = (0,0)
    CHECK(g->mul(3 * 3 + 1, 9 * 3 + 2) == 0);
    CHECK(g->element_order(1 * 3 + 1) == 12);  // lcm(12, 3)
    CHECK(g->element_name(0) == "(0,0)");
}

TEST_CASE("invalid group parameters") {
    CHECK_THROWS_AS(GroupSpec::cyclic(0), ParameterError);
    CHECK_THROWS_AS(GroupSpec::dihedral(7), ParameterError);
    CHECK_THROWS_AS(GroupSpec::dihedral(0), ParameterError);
    CHECK_THROWS_AS(GroupSpec::dicyclic(6), ParameterError);
    CHECK_THROWS_AS(GroupSpec::dicyclic(4), ParameterError);
}

TEST_CASE("element indices are range checked") {
    auto g = make_group(GroupSpec::cyclic(4));
    CHECK_THROWS_AS(g->mul(0, 4), ParameterError);
    CHECK_THROWS_AS(g->mul(-1, 0), ParameterError);
    CHECK_THROWS_AS(g->inverse(4), ParameterError);
    CHECK_THROWS_AS(g->element_order(7), ParameterError);
}

TEST_CASE("group laws hold on full tables") {
    for (const auto& spec : {GroupSpec::cyclic(7), GroupSpec::dihedral(10), GroupSpec::dicyclic(8),
                             GroupSpec::product(GroupSpec::cyclic(4), GroupSpec::dihedral(6))}) {
        auto g = make_group(spec);
        const int n = g->order();
        for (int x = 0; x < n; ++x) {
            CHECK(g->mul(x, g->inverse(x)) == FiniteGroup::identity);
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) CHECK(g->mul(g->mul(x, y), z) == g->mul(x, g->mul(y, z)));
        }
    }
}

TEST_CASE("conjugacy classes") {
    SUBCASE("abelian groups split into singletons") {
        auto g = make_group(GroupSpec::cyclic(12));
        auto classes = conjugacy_classes(*g);
        CHECK(classes.size() == 12);
        for (const auto& c : classes) CHECK(c.size() == 1);
    }
    SUBCASE("dihedral of order 12") {
        auto g = make_group(GroupSpec::dihedral(12));
        const std::vector<std::vector<int>> expected{{0}, {1, 5}, {2, 4}, {3}, {6, 8, 10}, {7, 9, 11}};
        CHECK(conjugacy_classes(*g) == expected);
    }
    SUBCASE("dihedral of order 16 splits reflections by rotation parity") {
        auto g = make_group(GroupSpec::dihedral(16));
        auto classes = conjugacy_classes(*g);
        const std::vector<int> evens{8, 10, 12, 14}, odds{9, 11, 13, 15};
        CHECK(std::count(classes.begin(), classes.end(), evens) == 1);
        CHECK(std::count(classes.begin(), classes.end(), odds) == 1);
        CHECK(std::count(classes.begin(), classes.end(), std::vector<int>{4}) == 1);  // r^4 central
    }
    SUBCASE("partition properties") {
        auto g = make_group(GroupSpec::dicyclic(16));
        auto classes = conjugacy_classes(*g);
        std::vector<int> all;
        for (const auto& c : classes) all.insert(all.end(), c.begin(), c.end());
        std::sort(all.begin(), all.end());
        std::vector<int> expect(g->order());
        std::iota(expect.begin(), expect.end(), 0);
        CHECK(all == expect);
        CHECK(classes.front() == std::vector<int>{0});
    }
}

TEST_CASE("center") {
    CHECK(center(*make_group(GroupSpec::cyclic(6))).size() == 6);
    CHECK(center(*make_group(GroupSpec::dihedral(12))) == std::vector<int>{0, 3});
    CHECK(center(*make_group(GroupSpec::dihedral(16))) == std::vector<int>{0, 4});
    SUBCASE("center equals the union of singleton classes") {
        for (const auto& spec : {GroupSpec::dihedral(16), GroupSpec::dicyclic(8)}) {
            auto g = make_group(spec);
            std::vector<int> singletons;
            for (const auto& c : conjugacy_classes(*g))
                if (c.size() == 1) singletons.push_back(c.front());
            CHECK(center(*g) == singletons);
        }
    }
}

TEST_CASE("necessary-condition checks") {
    SUBCASE("dihedral of order 16 fails at k = 4 on the central product") {
        auto rep = check_rk_necessary(*make_group(GroupSpec::dihedral(16)), 4);
        CHECK(rep.divisibility_ok);
        CHECK(rep.parity_ok);
        CHECK(rep.involution_class_count == 3);
        CHECK(rep.class_bound_ok);
        CHECK_FALSE(rep.central_product_ok);
        CHECK_FALSE(rep.pass());
        REQUIRE_FALSE(rep.failures.empty());
    }
    SUBCASE("dihedral of order 12 passes at k = 4") {
        auto rep = check_rk_necessary(*make_group(GroupSpec::dihedral(12)), 4);
        CHECK(rep.involution_class_count == 3);  // meets the bound 1 * (2^2 - 1)
        CHECK(rep.central_product_ok);
        CHECK(rep.pass());
    }
    SUBCASE("divisibility failure") {
        auto rep = check_rk_necessary(*make_group(GroupSpec::cyclic(5)), 2);
        CHECK_FALSE(rep.divisibility_ok);
        CHECK_FALSE(rep.pass());
    }
    SUBCASE("odd k under an even-order group fails parity") {
        auto rep = check_rk_necessary(*make_group(GroupSpec::cyclic(6)), 3);
        CHECK_FALSE(rep.parity_ok);
        CHECK_FALSE(rep.pass());
    }
    SUBCASE("k decomposition") {
        auto rep = check_rk_necessary(*make_group(GroupSpec::cyclic(12)), 12);
        CHECK(rep.n_exponent == 2);
        CHECK(rep.odd_part == 3);
    }
    SUBCASE("fail verdict whenever k does not divide the order") {
        for (int k = 2; k <= 8; ++k) {
            auto g = make_group(GroupSpec::dihedral(12));
            if (12 % k != 0) CHECK_FALSE(check_rk_necessary(*g, k).pass());
        }
    }
    CHECK_THROWS_AS(check_rk_necessary(*make_group(GroupSpec::cyclic(4)), 1), ParameterError);
}

TEST_CASE("subgroup closure") {
    auto g = make_group(GroupSpec::dihedral(12));
    CHECK(subgroup_closure(*g, {}) == std::vector<int>{0});
    CHECK(subgroup_closure(*g, {6}) == std::vector<int>{0, 6});
    CHECK(subgroup_closure(*g, {1}) == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(subgroup_closure(*g, {1, 6}).size() == 12);
    CHECK_THROWS_AS(subgroup_closure(*g, {12}), ParameterError);
}
