#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mla/errors.hpp"

namespace mla {

// Carriers are dense element indices 0..n-1 with n capped at 64 so that
// subsets fit in one machine word.
inline constexpr int kMaxOrder = 64;

// A set of element indices of one fixed carrier, stored as a bitmask.
class Subset {
public:
    Subset() = default;
    Subset(std::uint64_t bits, int universe) : bits_(bits), universe_(universe) {}

    static Subset empty(int universe) { return Subset(0, universe); }
    static Subset all(int universe) {
        return Subset(universe == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << universe) - 1),
                      universe);
    }
    static Subset single(int index, int universe) {
        return Subset(std::uint64_t{1} << index, universe);
    }

    bool contains(int i) const { return (bits_ >> i) & 1u; }
    void add(int i) { bits_ |= std::uint64_t{1} << i; }
    void remove(int i) { bits_ &= ~(std::uint64_t{1} << i); }

    int size() const;
    int universe() const { return universe_; }
    std::uint64_t bits() const { return bits_; }
    bool is_empty() const { return bits_ == 0; }

    // Member indices in ascending order.
    std::vector<int> elements() const;

    bool subset_of(const Subset& other) const { return (bits_ & ~other.bits_) == 0; }

    friend Subset operator&(const Subset& a, const Subset& b) {
        return Subset(a.bits_ & b.bits_, a.universe_);
    }
    friend Subset operator|(const Subset& a, const Subset& b) {
        return Subset(a.bits_ | b.bits_, a.universe_);
    }
    bool operator==(const Subset& other) const = default;

private:
    std::uint64_t bits_ = 0;
    int universe_ = 0;
};

// A finite group given by its Cayley table over element indices.
struct FiniteGroup {
    int order = 0;
    std::vector<int> mul;  // row-major order*order, mul[a*order+b] = a.b
    int identity = 0;
    std::vector<int> inv;
    std::vector<std::string> element_names;  // empty, or one distinct name per element

    int op(int a, int b) const { return mul[a * order + b]; }
    // ^g h = g h g^-1
    int conj(int g, int h) const { return op(op(g, h), inv[g]); }
    // [g,h] = g h g^-1 h^-1
    int comm(int g, int h) const { return op(op(g, h), op(inv[g], inv[h])); }
    int pow(int g, int k) const;
    int element_order(int g) const;
    bool is_abelian() const;

    std::string name_of(int i) const;
    // Index of the named element, -1 if no such name.
    int index_of(const std::string& name) const;
};

// Checks the group axioms over the whole table and fills in identity and
// inverses. Throws NotAssociative / NoIdentity / NoInverse with the first
// witness in row-major scan order, OrderTooLarge above the carrier cap.
FiniteGroup validate_group(const std::vector<std::vector<int>>& mul,
                           std::vector<std::string> element_names = {});

// Smallest subset containing seed and the identity that is closed under
// multiplication (inverses follow in a finite group).
Subset subgroup_generated(const FiniteGroup& g, const Subset& seed);

bool is_subgroup(const FiniteGroup& g, const Subset& s);

// True iff gHg^-1 = H for all g. Throws NotASubgroup when h fails closure.
bool is_normal(const FiniteGroup& g, const Subset& h);

Subset center(const FiniteGroup& g);

Subset commutator_subgroup(const FiniteGroup& g);

enum class MorphKind { GroupHom, MlaHom, GroupIso, MlaIso };

// An index map between two carriers. The algebras it relates are supplied
// by context; kind records what was verified about it.
struct Morphism {
    std::vector<int> map;
    int target_order = 0;
    MorphKind kind = MorphKind::GroupHom;

    int source_order() const { return static_cast<int>(map.size()); }
    int operator()(int i) const { return map[i]; }
    bool is_injective() const;
};

bool is_group_hom(const FiniteGroup& src, const FiniteGroup& dst, const std::vector<int>& map);

struct QuotientGroup {
    FiniteGroup group;
    Morphism projection;          // g -> index of its coset
    std::vector<int> coset_reps;  // canonical representative (minimum index) per coset
};

// Cosets of a normal subgroup, ordered by their minimum element index.
// Throws NotNormal.
QuotientGroup quotient_group(const FiniteGroup& g, const Subset& n);

// Pairs indexed row-major: (a,b) -> a*|G2| + b.
FiniteGroup direct_product_group(const FiniteGroup& g1, const FiniteGroup& g2);

// Greedy generating sequence: scan indices ascending, keep those that
// enlarge the generated subgroup.
std::vector<int> generating_set(const FiniteGroup& g);

// All bijective group homomorphisms g -> g, sorted by map table.
std::vector<Morphism> automorphisms(const FiniteGroup& g);

// Every subgroup, found by closing seeds; sorted by (size, bits).
std::vector<Subset> all_subgroups(const FiniteGroup& g);

}  // namespace mla
