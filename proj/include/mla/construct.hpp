#pragma once

#include <array>

#include "mla/algebra.hpp"

namespace mla {

// Componentwise group law and ★ on row-major pair indices; re-validated.
MultLieAlg direct_product_mla(const MultLieAlg& m1, const MultLieAlg& m2);

// Carrier G × I with pair index g·|I| + position of a in I's ascending
// element list. Group law componentwise,
//   (g,a)★(h,b) = (g★h, (g★b)(a★h)(a★b)).
// Requires ideal ⊆ Z(G); output re-validated against all five identities.
// Throws NotAnIdeal, NotCentral, OrderTooLarge.
MultLieAlg excision(const MultLieAlg& m, const Subset& ideal);

// Same carrier with the (a★b) factor dropped:
//   (g,a)★(h,b) = (g★h, (g★b)(a★h)).
MultLieAlg idealization(const MultLieAlg& m, const Subset& ideal);

struct ProjectionPair {
    Morphism p;  // (g,a) -> g
    Morphism i;  // g -> (g,1)
};

// The two canonical homs between M and excision(M, ideal); both are
// verified MLA-homs and p∘i is verified to be the identity.
ProjectionPair excision_maps(const MultLieAlg& m, const Subset& ideal);

// Left-nested iteration: n=1 is the excision; each further step excises the
// previous output by its embedded ideal {1}×I. Throws CentralityLost if the
// embedded ideal ever fails the recheck.
MultLieAlg iterated_excision_left(const MultLieAlg& m, const Subset& ideal, int n);

// Flat iteration: carrier G × Iⁿ, the excision second-coordinate formula
// applied independently in each ideal slot.
MultLieAlg iterated_excision_right(const MultLieAlg& m, const Subset& ideal, int n);

// A verified MLA-iso from the left-nested to the flat iteration, sending
// (g; a1, ..., an) to (g, (a1, a1a2, ..., a1a2···an)). Falls back to
// isomorphism search if the explicit map ever fails verification.
// Throws VerificationFailed when no isomorphism exists (internal failure).
Morphism canonical_iterated_iso(const MultLieAlg& m, const Subset& ideal, int n);

struct FiberProduct {
    MultLieAlg algebra;
    std::vector<int> carrier;  // ascending pair indices into the ambient product
};

// Subalgebra of M1 × M2 on pairs with phi1(g1) = phi2(g2).
// Throws NotAHomomorphism("left"/"right") if a map fails the hom recheck.
FiberProduct fiber_product(const MultLieAlg& m1, const MultLieAlg& m2, const MultLieAlg& h,
                           const Morphism& phi1, const Morphism& phi2);

struct ExcisionFiberIsos {
    // G ×_{G/I} G, (G×G) ×_{G×G/I} G, (G×G) ×_{G/I×G/I} G/I.
    std::array<FiberProduct, 3> fibers;
    // Verified MLA-isos from each fiber onto excision(m, ideal).
    std::array<Morphism, 3> maps;
};

// Builds the three fiber-product presentations of the excision and the
// explicit maps (g,ga) -> (g,a), ((g,gb),g) -> (g,b), ((g,gc),gI) -> (g,c),
// each verified as an MLA-iso. Throws VerificationFailed on any mismatch.
ExcisionFiberIsos excision_fiber_isos(const MultLieAlg& m, const Subset& ideal);

}  // namespace mla
