#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mla/algebra.hpp"
#include "mla/builtins.hpp"

using namespace mla;

namespace {

// The nontrivial structure on the Klein four-group used throughout: every
// independent pair stars to a.
const std::vector<int> kV4aStar = {0, 0, 0, 0,
                                   0, 0, 1, 1,
                                   0, 1, 0, 1,
                                   0, 1, 1, 0};

MultLieAlg v4a() { return check_axioms(builtin_group("v4"), kV4aStar); }

}  // namespace

TEST_CASE("check_axioms accepts the v4-a table") {
    MultLieAlg m = v4a();
    CHECK(m.order() == 4);
    CHECK(m.s(1, 2) == 1);
    CHECK(m.s(2, 1) == 1);
    CHECK(m.s(3, 3) == 0);
    CHECK(m.star_table() == kV4aStar);
}

TEST_CASE("every single-cell tampering of the v4-a table is rejected") {
    for (int cell = 0; cell < 16; ++cell)
        for (int v = 0; v < 4; ++v) {
            std::vector<int> star = kV4aStar;
            if (star[cell] == v) continue;
            star[cell] = v;
            CHECK_THROWS_AS(check_axioms(builtin_group("v4"), star), AxiomViolationError);
        }
}

TEST_CASE("axiom witnesses name the first failing identity") {
    // x★x must be 1: put a nonzero value on the diagonal
    std::vector<int> star = kV4aStar;
    star[1 * 4 + 1] = 2;
    try {
        check_axioms(builtin_group("v4"), star);
        FAIL("expected AxiomViolationError");
    } catch (const AxiomViolationError& e) {
        CHECK(e.axiom == 1);
        CHECK(e.x == 1);
        CHECK(e.arity == 1);
    }
}

TEST_CASE("find_axiom_violation returns nothing on valid tables") {
    CHECK(!find_axiom_violation(builtin_group("v4"), kV4aStar));
    FiniteGroup q8 = builtin_group("q8");
    CHECK(!find_axiom_violation(q8, commutator_star(q8)));
    FiniteGroup d4 = builtin_group("d4");
    CHECK(!find_axiom_violation(d4, commutator_star(d4)));
    CHECK(!find_axiom_violation(d4, trivial_star(d4)));
}

TEST_CASE("the commutator star validates on every builtin group") {
    for (const std::string& name : builtin_group_names()) {
        FiniteGroup g = builtin_group(name);
        CHECK(!find_axiom_violation(g, commutator_star(g)));
    }
}

TEST_CASE("centers of the builtin structures") {
    MultLieAlg m = v4a();
    CHECK(lie_center(m).elements() == std::vector<int>{0});
    // abelian carrier: commutators vanish, so MZ coincides with LZ
    CHECK(mult_lie_center(m).elements() == std::vector<int>{0});
    CHECK(script_center(m).elements() == std::vector<int>{0});

    const MultLieAlg& d4c = builtin_bundle("d4-comm").algebra;
    CHECK(lie_center(d4c).elements() == std::vector<int>{0, 2});
    CHECK(mult_lie_center(d4c) == Subset::all(8));
    CHECK(script_center(d4c).elements() == std::vector<int>{0, 2});

    const MultLieAlg& d4x = builtin_bundle("d4-x").algebra;
    CHECK(lie_center(d4x).elements() == std::vector<int>{0});
    CHECK(script_center(d4x).elements() == std::vector<int>{0});
}

TEST_CASE("star closure of the builtin structures") {
    CHECK(star_closure(v4a()).elements() == std::vector<int>{0, 1});
    CHECK(star_closure(builtin_bundle("d4-comm").algebra).elements() ==
          std::vector<int>{0, 2});
    CHECK(star_closure(builtin_bundle("q8-comm").algebra).elements() ==
          std::vector<int>{0, 4});
    CHECK(star_closure(builtin_bundle("v4-trivial").algebra).elements() ==
          std::vector<int>{0});
    // d4-x: the star values are exactly the rotations
    CHECK(star_closure(builtin_bundle("d4-x").algebra).elements() ==
          std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("star_closure, lie_center and mult_lie_center are always ideals") {
    for (const Bundle& b : builtin_bundles()) {
        CHECK(is_ideal(b.algebra, star_closure(b.algebra)));
        CHECK(is_ideal(b.algebra, lie_center(b.algebra)));
        CHECK(is_ideal(b.algebra, mult_lie_center(b.algebra)));
        CHECK(is_ideal(b.algebra, script_center(b.algebra)));
    }
}

TEST_CASE("subalgebra and ideal predicates on v4-a") {
    MultLieAlg m = v4a();
    Subset oa(0b0011, 4);  // {1, a}
    Subset ob(0b0101, 4);  // {1, b}
    CHECK(is_subalgebra(m, oa));
    CHECK(is_subalgebra(m, ob));
    CHECK(is_ideal(m, oa));
    CHECK(!is_ideal(m, ob));  // a★b = a escapes {1, b}
    CHECK(is_ideal(m, Subset::all(4)));
    Subset notsub(0b0110, 4);
    CHECK(!is_subalgebra(m, notsub));
}

TEST_CASE("ideal_generated reaches the expected fixpoints") {
    MultLieAlg m = v4a();
    CHECK(ideal_generated(m, Subset::single(1, 4)).elements() == std::vector<int>{0, 1});
    CHECK(ideal_generated(m, Subset::single(2, 4)) == Subset::all(4));
    CHECK(ideal_generated(m, Subset::empty(4)).elements() == std::vector<int>{0});
    const MultLieAlg& d4x = builtin_bundle("d4-x").algebra;
    // seeding with y forces the whole carrier: y's row hits all rotations
    CHECK(ideal_generated(d4x, Subset::single(4, 8)) == Subset::all(8));
    for (const Bundle& b : builtin_bundles()) {
        Subset i = ideal_generated(b.algebra, Subset::single(b.algebra.identity(), b.algebra.order()));
        CHECK(i.elements() == std::vector<int>{b.algebra.identity()});
    }
}

TEST_CASE("restrict_algebra reindexes a subalgebra") {
    MultLieAlg m = v4a();
    MultLieAlg r = restrict_algebra(m, Subset(0b0011, 4));
    CHECK(r.order() == 2);
    CHECK(r.name_of(1) == "a");
    CHECK(r.s(1, 1) == 0);
    CHECK(r.op(1, 1) == 0);
    CHECK_THROWS_AS(restrict_algebra(m, Subset(0b0110, 4)), NotASubalgebra);
}

TEST_CASE("quotient_mla computes the induced structure") {
    MultLieAlg m = v4a();
    QuotientMla q = quotient_mla(m, Subset(0b0011, 4));
    CHECK(q.algebra.order() == 2);
    CHECK(q.algebra.star_table() == trivial_star(q.algebra.group()));
    CHECK(q.projection.kind == MorphKind::MlaHom);
    CHECK(is_mla_hom(m, q.algebra, q.projection.map));
    for (int g = 0; g < 4; ++g)
        CHECK((q.projection(g) == q.algebra.identity()) == Subset(0b0011, 4).contains(g));
    CHECK_THROWS_AS(quotient_mla(m, Subset(0b0101, 4)), NotAnIdeal);
}

TEST_CASE("quotients by the whole carrier and the trivial ideal") {
    MultLieAlg m = v4a();
    CHECK(quotient_mla(m, Subset::all(4)).algebra.order() == 1);
    QuotientMla q = quotient_mla(m, Subset::single(0, 4));
    CHECK(q.algebra.order() == 4);
    CHECK(is_mla_iso(m, q.algebra, q.projection.map));
}

TEST_CASE("hom predicates check both operations") {
    MultLieAlg m = v4a();
    const MultLieAlg& t = builtin_bundle("v4-trivial").algebra;
    std::vector<int> id = {0, 1, 2, 3};
    CHECK(is_mla_iso(m, m, id));
    // identity map preserves the group law but not the star tables
    CHECK(is_group_hom(m.group(), t.group(), id));
    CHECK(!is_mla_hom(m, t, id));
    std::vector<int> collapse(4, 0);
    CHECK(is_mla_hom(m, t, collapse));
    CHECK(!is_mla_iso(m, t, collapse));
}

TEST_CASE("abelian carriers have antisymmetric stars") {
    std::mt19937 rng(20240817);
    int probes = 0;
    for (const Bundle& b : builtin_bundles()) {
        if (!b.algebra.group().is_abelian()) continue;
        std::uniform_int_distribution<int> pick(0, b.algebra.order() - 1);
        for (int t = 0; t < 200; ++t) {
            int x = pick(rng), y = pick(rng);
            CHECK(b.algebra.op(b.algebra.s(x, y), b.algebra.s(y, x)) == b.algebra.identity());
            ++probes;
        }
    }
    CHECK(probes >= 1000);
}
