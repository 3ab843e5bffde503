#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mla/builtins.hpp"
#include "mla/construct.hpp"

using namespace mla;

namespace {

const MultLieAlg& v4a() { return builtin_bundle("v4-a").algebra; }
const Subset kSmall(0b0011, 4);  // {1, a}
const Subset kWhole(0b1111, 4);

}  // namespace

TEST_CASE("excision carrier layout and names") {
    MultLieAlg e = excision(v4a(), kSmall);
    CHECK(e.order() == 8);
    CHECK(e.identity() == 0);
    CHECK(e.name_of(0) == "(1,1)");
    CHECK(e.name_of(1) == "(1,a)");
    CHECK(e.name_of(2) == "(a,1)");
    // group law is componentwise: (a,1)(b,a) = (ab,a)
    CHECK(e.op(2, 5) == 7);
}

TEST_CASE("excision and idealization coincide exactly when the ideal stars to 1") {
    // I = {1,a} has trivial restricted star, so the (a*b) factor never acts
    MultLieAlg e = excision(v4a(), kSmall);
    MultLieAlg d = idealization(v4a(), kSmall);
    CHECK(e.star_table() == d.star_table());
    CHECK(e.group().mul == d.group().mul);
    // I = V4 stars onto {1,a}, and the tables now differ
    MultLieAlg e2 = excision(v4a(), kWhole);
    MultLieAlg d2 = idealization(v4a(), kWhole);
    CHECK(e2.order() == 16);
    CHECK(e2.star_table() != d2.star_table());
}

TEST_CASE("the idealization drops the a*b term: the witness pair") {
    MultLieAlg d = idealization(v4a(), kWhole);
    // (a,b) (index 1*4+2) starred with (a,a) (index 1*4+1):
    //   first coordinate a*a = 1, second (a*a)(b*a) = a, so the result is (1,a)
    int lhs = d.s(1 * 4 + 2, 1 * 4 + 1);
    CHECK(lhs == 1);
    CHECK(d.name_of(lhs) == "(1,a)");
    // in the excision the (b*a) and (a*b) terms cancel and the value is (1,1)
    MultLieAlg e = excision(v4a(), kWhole);
    CHECK(e.s(1 * 4 + 2, 1 * 4 + 1) == 0);
}

TEST_CASE("the diagonal is an ideal of the excision but not of the idealization") {
    MultLieAlg e = excision(v4a(), kWhole);
    MultLieAlg d = idealization(v4a(), kWhole);
    Subset diag = Subset::empty(16);
    for (int g = 0; g < 4; ++g) diag.add(g * 4 + g);
    CHECK(is_subgroup(e.group(), diag));
    CHECK(is_ideal(e, diag));
    CHECK(!is_ideal(d, diag));
}

TEST_CASE("constructions reject bad ideals") {
    CHECK_THROWS_AS(excision(v4a(), Subset(0b0101, 4)), NotAnIdeal);  // {1,b} not absorbing
    const MultLieAlg& d4x = builtin_bundle("d4-x").algebra;
    Subset rotations(0b00001111, 8);
    CHECK(is_ideal(d4x, rotations));
    CHECK_THROWS_AS(excision(d4x, rotations), NotCentral);  // ideal outside the center
    CHECK_THROWS_AS(idealization(d4x, rotations), NotCentral);
    const MultLieAlg& q8 = builtin_bundle("q8-comm").algebra;
    CHECK_THROWS_AS(excision(q8, Subset::all(8)), NotCentral);
}

TEST_CASE("constructions past the carrier cap throw") {
    const MultLieAlg& e2e = builtin_bundle("e2-excision").algebra;  // order 16
    Subset big = star_closure(e2e);
    REQUIRE(big.size() == 4);
    // excising order 16 by order 4 gives 64, once more exceeds the cap
    MultLieAlg once = excision(e2e, big);
    CHECK(once.order() == 64);
    CHECK_THROWS_AS(excision(once, ideal_generated(once, Subset::single(1, 64))),
                    Error);
    CHECK_THROWS_AS(direct_product_mla(once, builtin_bundle("z2").algebra), OrderTooLarge);
}

TEST_CASE("direct products validate and project") {
    MultLieAlg p = direct_product_mla(v4a(), builtin_bundle("z3").algebra);
    CHECK(p.order() == 12);
    CHECK(p.s(1 * 3 + 0, 2 * 3 + 0) == 1 * 3 + 0);  // (a,1)*(b,1) = (a,1)
    MultLieAlg q = direct_product_mla(builtin_bundle("d4-comm").algebra,
                                      builtin_bundle("q8-comm").algebra);
    CHECK(q.order() == 64);
    CHECK(star_closure(q).size() == 4);
}

TEST_CASE("projection and section around the excision") {
    ProjectionPair maps = excision_maps(v4a(), kSmall);
    MultLieAlg e = excision(v4a(), kSmall);
    CHECK(maps.p.kind == MorphKind::MlaHom);
    CHECK(maps.i.kind == MorphKind::MlaHom);
    CHECK(is_mla_hom(e, v4a(), maps.p.map));
    CHECK(is_mla_hom(v4a(), e, maps.i.map));
    for (int g = 0; g < 4; ++g) CHECK(maps.p(maps.i(g)) == g);
    // kernel of p is the embedded copy of I
    for (int k = 0; k < e.order(); ++k)
        CHECK((maps.p(k) == v4a().identity()) == (k / kSmall.size() == 0));
}

TEST_CASE("iterated excisions grow as |G| times |I|^n") {
    for (int n = 1; n <= 4; ++n) {
        MultLieAlg left = iterated_excision_left(v4a(), kSmall, n);
        MultLieAlg right = iterated_excision_right(v4a(), kSmall, n);
        CHECK(left.order() == 4 << n);
        CHECK(right.order() == 4 << n);
    }
    CHECK_THROWS_AS(iterated_excision_right(v4a(), kSmall, 5), OrderTooLarge);
    CHECK_THROWS_AS(iterated_excision_left(v4a(), kSmall, 5), OrderTooLarge);
}

TEST_CASE("nested and flat iterations are canonically isomorphic") {
    for (int n = 1; n <= 3; ++n) {
        Morphism phi = canonical_iterated_iso(v4a(), kSmall, n);
        CHECK(phi.kind == MorphKind::MlaIso);
        CHECK(phi.is_injective());
        MultLieAlg left = iterated_excision_left(v4a(), kSmall, n);
        MultLieAlg right = iterated_excision_right(v4a(), kSmall, n);
        CHECK(is_mla_iso(left, right, phi.map));
    }
}

TEST_CASE("iteration with the whole Klein group as ideal") {
    MultLieAlg left = iterated_excision_left(v4a(), kWhole, 2);
    MultLieAlg right = iterated_excision_right(v4a(), kWhole, 2);
    CHECK(left.order() == 64);
    CHECK(right.order() == 64);
    Morphism phi = canonical_iterated_iso(v4a(), kWhole, 2);
    CHECK(is_mla_iso(left, right, phi.map));
}

TEST_CASE("fiber product over the quotient matches the excision") {
    QuotientMla q = quotient_mla(v4a(), kSmall);
    FiberProduct fp = fiber_product(v4a(), v4a(), q.algebra, q.projection, q.projection);
    CHECK(fp.algebra.order() == 8);
    CHECK(fp.carrier.size() == 8);
    MultLieAlg e = excision(v4a(), kSmall);
    CHECK(fp.algebra.star_table() == e.star_table());
    CHECK(fp.algebra.group().mul == e.group().mul);
}

TEST_CASE("fiber product rejects maps that are not homomorphisms") {
    QuotientMla q = quotient_mla(v4a(), kSmall);
    Morphism bad = q.projection;
    bad.map[1] = 1 - bad.map[1];
    CHECK_THROWS_AS(fiber_product(v4a(), v4a(), q.algebra, bad, q.projection),
                    NotAHomomorphism);
    CHECK_THROWS_AS(fiber_product(v4a(), v4a(), q.algebra, q.projection, bad),
                    NotAHomomorphism);
}

TEST_CASE("the three fiber presentations all match the excision") {
    ExcisionFiberIsos out = excision_fiber_isos(v4a(), kSmall);
    MultLieAlg e = excision(v4a(), kSmall);
    for (int i = 0; i < 3; ++i) {
        CHECK(out.fibers[i].algebra.order() == e.order());
        CHECK(out.maps[i].kind == MorphKind::MlaIso);
        CHECK(out.maps[i].is_injective());
        CHECK(is_mla_iso(out.fibers[i].algebra, e, out.maps[i].map));
    }
}

TEST_CASE("fiber presentations on the trivial ideal") {
    ExcisionFiberIsos out = excision_fiber_isos(v4a(), Subset::single(0, 4));
    for (int i = 0; i < 3; ++i) CHECK(out.fibers[i].algebra.order() == 4);
}

TEST_CASE("every constructed builtin revalidates from its raw tables") {
    for (const Bundle& b : builtin_bundles()) {
        // reconstructing from the tables re-runs the full validation
        FiniteGroup g = validate_group([&] {
            std::vector<std::vector<int>> rows(b.algebra.order());
            for (int i = 0; i < b.algebra.order(); ++i)
                for (int j = 0; j < b.algebra.order(); ++j)
                    rows[i].push_back(b.algebra.op(i, j));
            return rows;
        }());
        CHECK(!find_axiom_violation(g, b.algebra.star_table()));
    }
}
