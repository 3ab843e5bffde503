#pragma once

#include <optional>

#include "mla/analysis.hpp"

namespace mla {

// Every ★-structure on one group, with both equivalence partitions.
struct StructureCatalog {
    FiniteGroup group;
    std::vector<std::vector<int>> tables;  // flat row-major star tables, ascending

    // Filled by classify: partitions of table indices, each class ascending,
    // classes ordered by least member. Representative = first index.
    std::vector<std::vector<int>> classes_aut;  // orbits under automorphism transport
    std::vector<std::vector<int>> classes_iso;  // abstract isomorphism classes
    std::vector<Fingerprint> class_fingerprints;  // one per classes_iso entry
};

inline constexpr int kMaxEnumerationOrder = 12;

// All star tables satisfying the five identities, found by assigning values
// on generator pairs, propagating forced entries, and brute-checking every
// completed table. Output order is ascending and run-to-run identical.
// Throws OrderTooLarge above the enumeration cap.
StructureCatalog enumerate_structures(const FiniteGroup& g,
                                      std::optional<int> limit = std::nullopt);

// Fills both partitions and per-class fingerprints.
void classify(StructureCatalog& catalog);

}  // namespace mla
