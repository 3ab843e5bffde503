#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mla/builtins.hpp"
#include "mla/group.hpp"

using namespace mla;

TEST_CASE("subset basics") {
    Subset s = Subset::empty(8);
    CHECK(s.is_empty());
    s.add(3);
    s.add(5);
    CHECK(s.size() == 2);
    CHECK(s.contains(3));
    CHECK(!s.contains(4));
    s.remove(3);
    CHECK(s.elements() == std::vector<int>{5});
    CHECK(Subset::all(8).size() == 8);
    CHECK(Subset::all(64).size() == 64);
    CHECK(Subset::single(2, 8).elements() == std::vector<int>{2});
    CHECK(s.subset_of(Subset::all(8)));
    CHECK((Subset::single(1, 4) | Subset::single(2, 4)).size() == 2);
    CHECK((Subset::all(4) & Subset::single(2, 4)) == Subset::single(2, 4));
}

TEST_CASE("validate_group accepts the cyclic group of order 2") {
    FiniteGroup g = validate_group({{0, 1}, {1, 0}}, {"e", "t"});
    CHECK(g.order == 2);
    CHECK(g.identity == 0);
    CHECK(g.inv == std::vector<int>{0, 1});
    CHECK(g.op(1, 1) == 0);
    CHECK(g.index_of("t") == 1);
    CHECK(g.name_of(1) == "t");
}

TEST_CASE("validate_group rejects a non-associative table with a witness") {
    try {
        validate_group({{1, 0}, {0, 0}});
        FAIL("expected NotAssociative");
    } catch (const NotAssociative& e) {
        CHECK(e.x == 0);
        CHECK(e.y == 0);
        CHECK(e.z == 1);
    }
}

TEST_CASE("validate_group rejects a table without inverses") {
    try {
        validate_group({{0, 1}, {1, 1}});
        FAIL("expected NoInverse");
    } catch (const NoInverse& e) {
        CHECK(e.x == 1);
    }
}

TEST_CASE("validate_group rejects a table without an identity") {
    CHECK_THROWS_AS(validate_group({{1, 1}, {1, 1}}), NoIdentity);
}

TEST_CASE("validate_group rejects malformed input") {
    CHECK_THROWS_AS(validate_group({{0, 1}, {1}}), InvalidArgument);
    CHECK_THROWS_AS(validate_group({{0, 7}, {7, 0}}), InvalidArgument);
    CHECK_THROWS_AS(validate_group({{0, 1}, {1, 0}}, {"same", "same"}), InvalidArgument);
    std::vector<std::vector<int>> big(65, std::vector<int>(65, 0));
    CHECK_THROWS_AS(validate_group(big), OrderTooLarge);
}

TEST_CASE("element orders and powers in d4") {
    FiniteGroup d4 = builtin_group("d4");
    int x = d4.index_of("x"), y = d4.index_of("y");
    CHECK(d4.element_order(x) == 4);
    CHECK(d4.element_order(y) == 2);
    CHECK(d4.element_order(d4.identity) == 1);
    CHECK(d4.pow(x, 4) == d4.identity);
    CHECK(d4.pow(x, -1) == d4.inv[x]);
    CHECK(d4.conj(y, x) == d4.inv[x]);
    CHECK(!d4.is_abelian());
    CHECK(builtin_group("v4").is_abelian());
}

TEST_CASE("center and commutator subgroup of the order-8 groups") {
    FiniteGroup d4 = builtin_group("d4");
    FiniteGroup q8 = builtin_group("q8");
    CHECK(center(d4).elements() == std::vector<int>{0, 2});
    CHECK(commutator_subgroup(d4).elements() == std::vector<int>{0, 2});
    CHECK(center(q8).elements() == std::vector<int>{0, 4});
    CHECK(commutator_subgroup(q8).elements() == std::vector<int>{0, 4});
    CHECK(center(builtin_group("v4")).size() == 4);
}

TEST_CASE("subgroup_generated is monotone and idempotent") {
    std::mt19937 rng(20240817);
    for (const char* name : {"v4", "d4", "q8", "z4"}) {
        FiniteGroup g = builtin_group(name);
        std::uniform_int_distribution<int> pick(0, g.order - 1);
        for (int trial = 0; trial < 50; ++trial) {
            Subset seed = Subset::empty(g.order);
            for (int i = 0; i < 2; ++i) seed.add(pick(rng));
            Subset h = subgroup_generated(g, seed);
            CHECK(seed.subset_of(h));
            CHECK(is_subgroup(g, h));
            CHECK(subgroup_generated(g, h) == h);
            Subset bigger = seed;
            bigger.add(pick(rng));
            CHECK(h.subset_of(subgroup_generated(g, bigger)));
        }
    }
}

TEST_CASE("subgroup and normality predicates") {
    FiniteGroup d4 = builtin_group("d4");
    Subset rot(0b00001111, 8);  // {1, x, x2, x3}
    CHECK(is_subgroup(d4, rot));
    CHECK(is_normal(d4, rot));
    Subset refl = Subset::empty(8);
    refl.add(0);
    refl.add(4);  // {1, y}
    CHECK(is_subgroup(d4, refl));
    CHECK(!is_normal(d4, refl));
    Subset notsub = Subset::empty(8);
    notsub.add(1);
    CHECK(!is_subgroup(d4, notsub));
}

TEST_CASE("all_subgroups finds the standard counts") {
    CHECK(all_subgroups(builtin_group("v4")).size() == 5);
    CHECK(all_subgroups(builtin_group("z4")).size() == 3);
    CHECK(all_subgroups(builtin_group("d4")).size() == 10);
    CHECK(all_subgroups(builtin_group("q8")).size() == 6);
    for (const Subset& s : all_subgroups(builtin_group("d4")))
        CHECK(is_subgroup(builtin_group("d4"), s));
}

TEST_CASE("quotient of d4 by its center is the Klein four-group") {
    FiniteGroup d4 = builtin_group("d4");
    QuotientGroup q = quotient_group(d4, center(d4));
    CHECK(q.group.order == 4);
    CHECK(q.group.is_abelian());
    for (int i = 0; i < 4; ++i) CHECK(q.group.element_order(i) <= 2);
    CHECK(is_group_hom(d4, q.group, q.projection.map));
    // kernel of the projection is exactly the center
    for (int g = 0; g < 8; ++g)
        CHECK((q.projection(g) == q.group.identity) == center(d4).contains(g));
}

TEST_CASE("quotient by a non-normal subgroup throws") {
    FiniteGroup d4 = builtin_group("d4");
    Subset refl = Subset::empty(8);
    refl.add(0);
    refl.add(4);
    CHECK_THROWS_AS(quotient_group(d4, refl), NotNormal);
}

TEST_CASE("direct product group") {
    FiniteGroup p = direct_product_group(builtin_group("z2"), builtin_group("z3"));
    CHECK(p.order == 6);
    CHECK(p.identity == 0);
    CHECK(p.is_abelian());
    CHECK(p.element_order(1 * 3 + 1) == 6);  // (g, g) generates
    CHECK(center(p).size() == 6);
    FiniteGroup big = direct_product_group(builtin_group("d4"), builtin_group("q8"));
    CHECK(big.order == 64);
    CHECK(center(big).size() == 4);
    CHECK_THROWS_AS(direct_product_group(big, builtin_group("z2")), OrderTooLarge);
}

TEST_CASE("generating sets are small and generate") {
    for (const char* name : {"v4", "d4", "q8", "z4"}) {
        FiniteGroup g = builtin_group(name);
        std::vector<int> gen = generating_set(g);
        CHECK(gen.size() <= 2);
        Subset seed = Subset::empty(g.order);
        for (int e : gen) seed.add(e);
        CHECK(subgroup_generated(g, seed) == Subset::all(g.order));
    }
}

TEST_CASE("automorphism groups have the standard orders") {
    CHECK(automorphisms(builtin_group("v4")).size() == 6);
    CHECK(automorphisms(builtin_group("z4")).size() == 2);
    CHECK(automorphisms(builtin_group("d4")).size() == 8);
    CHECK(automorphisms(builtin_group("q8")).size() == 24);
    for (const Morphism& a : automorphisms(builtin_group("d4"))) {
        CHECK(a.is_injective());
        CHECK(is_group_hom(builtin_group("d4"), builtin_group("d4"), a.map));
    }
}

TEST_CASE("centers and commutator subgroups are normal") {
    for (const char* name : {"v4", "d4", "q8", "z4", "z3"}) {
        FiniteGroup g = builtin_group(name);
        CHECK(is_normal(g, center(g)));
        CHECK(is_normal(g, commutator_subgroup(g)));
    }
}

TEST_CASE("center of a product is the product of centers") {
    FiniteGroup a = builtin_group("d4");
    FiniteGroup b = builtin_group("q8");
    CHECK(center(direct_product_group(a, b)).size() ==
          center(a).size() * center(b).size());
}
