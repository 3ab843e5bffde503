#pragma once

#include <optional>
#include <vector>

#include "mla/group.hpp"

namespace mla {

// First failing identity of a star table. Identity 1 is unary (x only),
// identities 2..5 quantify over (x, y, z).
struct AxiomWitness {
    int axiom = 0;
    int x = -1;
    int y = -1;
    int z = -1;
};

class MultLieAlg;

// Scans the five identities in order, each over (x, y, z) row-major, and
// reports the first violation.
std::optional<AxiomWitness> find_axiom_violation(const FiniteGroup& group,
                                                 const std::vector<int>& star);

// Validating constructor: existence of a MultLieAlg object means its star
// table passed all five identities. Throws AxiomViolationError.
MultLieAlg check_axioms(FiniteGroup group, std::vector<int> star);

// A group with a validated second operation. x★y is s(x, y).
class MultLieAlg {
public:
    const FiniteGroup& group() const { return group_; }
    const std::vector<int>& star_table() const { return star_; }

    int order() const { return group_.order; }
    int identity() const { return group_.identity; }
    int s(int a, int b) const { return star_[a * group_.order + b]; }
    int op(int a, int b) const { return group_.op(a, b); }
    int inv(int a) const { return group_.inv[a]; }
    int conj(int g, int h) const { return group_.conj(g, h); }
    int comm(int g, int h) const { return group_.comm(g, h); }
    std::string name_of(int i) const { return group_.name_of(i); }

private:
    MultLieAlg(FiniteGroup group, std::vector<int> star)
        : group_(std::move(group)), star_(std::move(star)) {}
    friend MultLieAlg check_axioms(FiniteGroup, std::vector<int>);

    FiniteGroup group_;
    std::vector<int> star_;
};

// x★y = 1 everywhere; valid on any group.
std::vector<int> trivial_star(const FiniteGroup& g);

// x★y = [x,y]; valid on any group.
std::vector<int> commutator_star(const FiniteGroup& g);

// {x : x★y = 1 for all y}.
Subset lie_center(const MultLieAlg& m);

// {x : x★y = [x,y] for all y}.
Subset mult_lie_center(const MultLieAlg& m);

// center(group) ∩ lie_center.
Subset script_center(const MultLieAlg& m);

// Subgroup generated by all values x★y (always an ideal).
Subset star_closure(const MultLieAlg& m);

// Subgroup closed under ★.
bool is_subalgebra(const MultLieAlg& m, const Subset& s);

// Normal subgroup with g★s ∈ S for every g in the carrier, s in S.
bool is_ideal(const MultLieAlg& m, const Subset& s);

// Least ideal containing seed: alternates normal closure and ★-absorption
// until fixpoint.
Subset ideal_generated(const MultLieAlg& m, const Subset& seed);

// Induced algebra on a subalgebra; element k of the output is
// s.elements()[k] in the parent. Throws NotASubalgebra.
MultLieAlg restrict_algebra(const MultLieAlg& m, const Subset& s);

struct QuotientMla {
    MultLieAlg algebra;
    Morphism projection;  // an MLA-hom with kernel exactly the ideal
    std::vector<int> coset_reps;
};

// Quotient by an ideal, ★ taken on coset representatives. Well-definedness
// over all pairs and the five identities are rechecked, not assumed.
// Throws NotAnIdeal; StarNotWellDefined signals an internal inconsistency.
QuotientMla quotient_mla(const MultLieAlg& m, const Subset& ideal);

bool is_mla_hom(const MultLieAlg& src, const MultLieAlg& dst, const std::vector<int>& map);

bool is_mla_iso(const MultLieAlg& src, const MultLieAlg& dst, const std::vector<int>& map);

}  // namespace mla
