#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mla/builtins.hpp"
#include "mla/enumerate.hpp"

namespace mla {

// Keys keep insertion order so serialized output is byte-stable.
using Json = nlohmann::ordered_json;

std::uint64_t fnv1a64(std::string_view s);

// 16-digit lowercase hex of the FNV-1a hash of a compact dump.
std::string json_hash(const Json& j);

// Hash of the name-independent core of a group (order and table only).
std::string group_hash(const FiniteGroup& g);

// Hash of the name-independent core of an algebra (order, mul, star).
std::string algebra_hash(const MultLieAlg& m);

Json group_to_json(const FiniteGroup& g, const std::string& name);

// Accepts {"name", "order", "mul", "elements"?}; validates the table.
FiniteGroup group_from_json(const Json& j);

// {"group": <name or inline group>, "star": [[...]]} plus an optional
// provenance block recording how a constructed bundle was produced.
Json bundle_to_json(const MultLieAlg& m, const std::string& group_name,
                    const Json& provenance = Json());

// Revalidates: the group table and every star axiom are rechecked.
MultLieAlg bundle_from_json(const Json& j);

Json fingerprint_to_json(const Fingerprint& f);

Json catalog_to_json(const FiniteGroup& g, const StructureCatalog& c);

Json report_to_json(const VerificationReport& r);

Json load_json_file(const std::string& path);

void save_json_file(const std::string& path, const Json& j);

struct NamedAlgebra {
    std::string name;
    MultLieAlg algebra;
};

// Resolves a builtin bundle name first, then a path to a bundle file.
NamedAlgebra load_algebra(const std::string& name_or_path);

// Resolves a builtin group name first, then a path to a group file.
FiniteGroup load_group(const std::string& name_or_path);

}  // namespace mla
