#pragma once

#include <string>

#include "mla/analysis.hpp"

namespace mla {

// A named, ready-to-use algebra shipped with the tool.
struct Bundle {
    std::string name;
    std::string description;
    MultLieAlg algebra;
};

const std::vector<std::string>& builtin_group_names();

// trivial, z2, z3, z4, v4, d4, q8. Throws InvalidArgument on unknown names.
FiniteGroup builtin_group(const std::string& name);

const std::vector<Bundle>& builtin_bundles();

const Bundle& builtin_bundle(const std::string& name);

bool is_builtin_bundle(const std::string& name);

// The instance set the verification suite runs over: every bundle paired
// with {1}, its star closure, its central Lie center, and (small abelian
// carriers only) the whole carrier, deduplicated.
const std::vector<TheoremInstance>& builtin_instances();

}  // namespace mla
