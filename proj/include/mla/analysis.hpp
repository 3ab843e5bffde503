#pragma once

#include <optional>
#include <string>

#include "mla/algebra.hpp"

namespace mla {

// Isomorphism-invariant summary; a mismatch proves two algebras are not
// isomorphic, so the search can stop before backtracking.
struct Fingerprint {
    int order = 0;
    std::vector<int> element_order_hist;  // count of elements per order
    int z_size = 0;
    int lz_size = 0;
    int mz_size = 0;
    int star_closure_size = 0;
    int commutator_size = 0;
    std::vector<int> star_value_order_hist;  // over all pairs (x,y), order of x★y
    int nilpotency_bound = -1;               // -1 once the class exceeds the order

    bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const MultLieAlg& m);

// Bijection preserving both operations, or a certified none: the search is
// exhaustive over generator images, so absence is a proof at these orders.
std::optional<Morphism> find_isomorphism(const MultLieAlg& m1, const MultLieAlg& m2);

// Least n such that every left-normed ★-product of length n+1 is the
// identity, via iterating the set of reachable ★-values; nullopt past cap.
std::optional<int> star_nilpotency_class(const MultLieAlg& m, int cap);

// D0 = carrier, D(i+1) = ideal generated by all x★y with x,y in Di.
// Stops at the trivial subset, a nontrivial fixpoint, or cap entries.
std::vector<Subset> star_derived_series(const MultLieAlg& m, int cap);

// Least i with Di = {1}, nullopt if the series never gets there.
std::optional<int> star_solvable_length(const MultLieAlg& m, int cap);

enum class Verdict { Verified, Refuted, Inapplicable };

std::string to_string(Verdict v);

struct VerificationReport {
    std::string theorem;
    std::string instance;
    Verdict verdict = Verdict::Inapplicable;
    std::string detail;  // witness on refuted, reason on inapplicable
    double millis = 0.0;
};

// One algebra plus the ideal a check quantifies over (checks that need no
// ideal ignore it).
struct TheoremInstance {
    std::string name;
    MultLieAlg algebra;
    std::optional<Subset> ideal;
};

// The named checks of the verification suite, in canonical order.
const std::vector<std::string>& theorem_ids();

// Runs one named check. Hypothesis failures (no ideal, non-central ideal,
// carrier past the size cap) give verdict inapplicable; refuted always
// carries a witness. Throws UnknownTheoremId.
VerificationReport verify_theorem(const std::string& id, const TheoremInstance& instance);

// Reports in canonical (id, instance) order.
std::vector<VerificationReport> verify_suite(const std::vector<std::string>& ids,
                                             const std::vector<TheoremInstance>& instances);

}  // namespace mla
