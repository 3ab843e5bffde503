#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "mla/builtins.hpp"
#include "mla/enumerate.hpp"

using namespace mla;

TEST_CASE("cyclic groups carry only the trivial structure") {
    for (const char* name : {"trivial", "z2", "z3", "z4"}) {
        StructureCatalog c = enumerate_structures(builtin_group(name));
        REQUIRE(c.tables.size() == 1);
        CHECK(c.tables[0] == trivial_star(c.group));
    }
}

TEST_CASE("the Klein four-group carries exactly four structures") {
    StructureCatalog c = enumerate_structures(builtin_group("v4"));
    REQUIRE(c.tables.size() == 4);
    CHECK(std::is_sorted(c.tables.begin(), c.tables.end()));
    CHECK(std::count(c.tables.begin(), c.tables.end(), trivial_star(c.group)) == 1);
    CHECK(std::count(c.tables.begin(), c.tables.end(),
                     builtin_bundle("v4-a").algebra.star_table()) == 1);
    for (const auto& t : c.tables) CHECK(!find_axiom_violation(c.group, t));
}

TEST_CASE("the dihedral catalog contains the two named structures") {
    StructureCatalog c = enumerate_structures(builtin_group("d4"));
    CHECK(c.tables.size() == 4);
    auto has = [&](const std::vector<int>& t) {
        return std::count(c.tables.begin(), c.tables.end(), t) == 1;
    };
    CHECK(has(trivial_star(c.group)));
    CHECK(has(commutator_star(c.group)));
    CHECK(has(builtin_bundle("d4-x").algebra.star_table()));
}

TEST_CASE("the quaternion group carries only the trivial and commutator structures") {
    StructureCatalog c = enumerate_structures(builtin_group("q8"));
    REQUIRE(c.tables.size() == 2);
    CHECK(c.tables[0] == trivial_star(c.group));
    CHECK(c.tables[1] == commutator_star(c.group));
}

TEST_CASE("a limit truncates the full list") {
    StructureCatalog full = enumerate_structures(builtin_group("v4"));
    StructureCatalog cut = enumerate_structures(builtin_group("v4"), 2);
    REQUIRE(cut.tables.size() == 2);
    CHECK(cut.tables[0] == full.tables[0]);
    CHECK(cut.tables[1] == full.tables[1]);
}

TEST_CASE("enumeration is deterministic") {
    StructureCatalog a = enumerate_structures(builtin_group("d4"));
    StructureCatalog b = enumerate_structures(builtin_group("d4"));
    CHECK(a.tables == b.tables);
}

TEST_CASE("enumeration refuses carriers past the cap") {
    FiniteGroup big = direct_product_group(builtin_group("v4"), builtin_group("v4"));
    REQUIRE(big.order == 16);
    CHECK_THROWS_AS(enumerate_structures(big), OrderTooLarge);
}

TEST_CASE("the catalog is closed under automorphism transport") {
    for (const char* name : {"v4", "d4", "q8", "z4"}) {
        StructureCatalog c = enumerate_structures(builtin_group(name));
        std::set<std::vector<int>> present(c.tables.begin(), c.tables.end());
        int n = c.group.order;
        for (const Morphism& alpha : automorphisms(c.group)) {
            for (const auto& t : c.tables) {
                std::vector<int> moved(n * n);
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y)
                        moved[alpha(x) * n + alpha(y)] = alpha(t[x * n + y]);
                CHECK(present.count(moved) == 1);
            }
        }
    }
}

TEST_CASE("classification partitions v4 into trivial and nontrivial") {
    StructureCatalog c = enumerate_structures(builtin_group("v4"));
    classify(c);
    REQUIRE(c.classes_aut.size() == 2);
    REQUIRE(c.classes_iso.size() == 2);
    // the trivial table sorts first and sits alone; the three others form
    // one orbit and one abstract class
    CHECK(c.classes_aut[0] == std::vector<int>{0});
    CHECK(c.classes_aut[1] == std::vector<int>{1, 2, 3});
    CHECK(c.classes_iso == c.classes_aut);
    REQUIRE(c.class_fingerprints.size() == 2);
    CHECK(c.class_fingerprints[0].star_closure_size == 1);
    CHECK(c.class_fingerprints[1].star_closure_size == 2);
}

TEST_CASE("both partitions agree on every small builtin group") {
    for (const char* name : {"trivial", "z2", "z3", "z4", "v4", "d4", "q8"}) {
        StructureCatalog c = enumerate_structures(builtin_group(name));
        classify(c);
        CHECK(c.classes_aut == c.classes_iso);
        CHECK(c.class_fingerprints.size() == c.classes_iso.size());
        // classes cover every structure exactly once
        std::vector<int> seen;
        for (const auto& cls : c.classes_iso)
            for (int i : cls) seen.push_back(i);
        std::sort(seen.begin(), seen.end());
        std::vector<int> want(c.tables.size());
        for (std::size_t i = 0; i < want.size(); ++i) want[i] = static_cast<int>(i);
        CHECK(seen == want);
    }
}

TEST_CASE("structures within one class really are isomorphic") {
    StructureCatalog c = enumerate_structures(builtin_group("d4"));
    classify(c);
    for (const auto& cls : c.classes_iso) {
        MultLieAlg rep = check_axioms(c.group, c.tables[cls[0]]);
        for (std::size_t k = 1; k < cls.size(); ++k) {
            MultLieAlg other = check_axioms(c.group, c.tables[cls[k]]);
            CHECK(find_isomorphism(rep, other));
        }
    }
}
