#include "mla/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "mla/errors.hpp"

namespace mla {

namespace {

const Json& field(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw InvalidArgument(std::string("missing key: ") + key);
    return *it;
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw InvalidArgument(std::string(key) + " must be an integer");
    return v.get<int>();
}

std::vector<std::vector<int>> int_matrix(const Json& j, const char* key) {
    if (!j.is_array()) throw InvalidArgument(std::string(key) + " must be an array of rows");
    std::vector<std::vector<int>> out;
    for (const Json& row : j) {
        if (!row.is_array())
            throw InvalidArgument(std::string(key) + " rows must be arrays of integers");
        std::vector<int> r;
        for (const Json& v : row) {
            if (!v.is_number_integer())
                throw InvalidArgument(std::string(key) + " entries must be integers");
            r.push_back(v.get<int>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

Json nested_rows(const std::vector<int>& flat, int n) {
    Json rows = Json::array();
    for (int i = 0; i < n; ++i) {
        Json row = Json::array();
        for (int j = 0; j < n; ++j) row.push_back(flat[i * n + j]);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string json_hash(const Json& j) {
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(j.dump());
    return out.str();
}

std::string group_hash(const FiniteGroup& g) {
    Json core;
    core["order"] = g.order;
    core["mul"] = nested_rows(g.mul, g.order);
    return json_hash(core);
}

std::string algebra_hash(const MultLieAlg& m) {
    Json core;
    core["order"] = m.order();
    core["mul"] = nested_rows(m.group().mul, m.order());
    core["star"] = nested_rows(m.star_table(), m.order());
    return json_hash(core);
}

Json group_to_json(const FiniteGroup& g, const std::string& name) {
    Json j;
    j["name"] = name;
    j["order"] = g.order;
    j["mul"] = nested_rows(g.mul, g.order);
    Json names = Json::array();
    for (int i = 0; i < g.order; ++i) names.push_back(g.name_of(i));
    j["elements"] = std::move(names);
    return j;
}

FiniteGroup group_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidArgument("group must be a JSON object");
    int order = int_field(j, "order");
    std::vector<std::vector<int>> mul = int_matrix(field(j, "mul"), "mul");
    if (static_cast<int>(mul.size()) != order)
        throw InvalidArgument("declared order disagrees with table size");
    std::vector<std::string> names;
    if (auto it = j.find("elements"); it != j.end()) {
        if (!it->is_array()) throw InvalidArgument("elements must be an array of strings");
        for (const Json& v : *it) {
            if (!v.is_string()) throw InvalidArgument("elements must be an array of strings");
            names.push_back(v.get<std::string>());
        }
    }
    return validate_group(mul, std::move(names));
}

Json bundle_to_json(const MultLieAlg& m, const std::string& group_name, const Json& provenance) {
    Json j;
    j["group"] = group_to_json(m.group(), group_name);
    j["star"] = nested_rows(m.star_table(), m.order());
    if (!provenance.is_null()) j["provenance"] = provenance;
    return j;
}

MultLieAlg bundle_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidArgument("bundle must be a JSON object");
    const Json& g = field(j, "group");
    FiniteGroup group;
    if (g.is_string()) {
        group = builtin_group(g.get<std::string>());
    } else {
        group = group_from_json(g);
    }
    std::vector<std::vector<int>> star = int_matrix(field(j, "star"), "star");
    int n = group.order;
    if (static_cast<int>(star.size()) != n)
        throw InvalidArgument("star table size disagrees with group order");
    std::vector<int> flat;
    flat.reserve(n * n);
    for (const auto& row : star) {
        if (static_cast<int>(row.size()) != n)
            throw InvalidArgument("star table must be square");
        for (int v : row) {
            if (v < 0 || v >= n) throw InvalidArgument("star entry out of range");
            flat.push_back(v);
        }
    }
    return check_axioms(group, flat);
}

Json fingerprint_to_json(const Fingerprint& f) {
    Json j;
    j["order"] = f.order;
    j["element_order_hist"] = f.element_order_hist;
    j["center_size"] = f.z_size;
    j["lie_center_size"] = f.lz_size;
    j["mult_lie_center_size"] = f.mz_size;
    j["star_closure_size"] = f.star_closure_size;
    j["commutator_size"] = f.commutator_size;
    j["star_value_order_hist"] = f.star_value_order_hist;
    j["nilpotency_bound"] = f.nilpotency_bound;
    return j;
}

Json catalog_to_json(const FiniteGroup& g, const StructureCatalog& c) {
    Json j;
    j["group_hash"] = group_hash(g);
    j["order"] = g.order;
    j["count"] = static_cast<int>(c.tables.size());
    Json tables = Json::array();
    for (const auto& t : c.tables) tables.push_back(nested_rows(t, g.order));
    j["tables"] = std::move(tables);
    j["classes_aut"] = c.classes_aut;
    j["classes_iso"] = c.classes_iso;
    Json fps = Json::array();
    for (const Fingerprint& f : c.class_fingerprints) fps.push_back(fingerprint_to_json(f));
    j["class_fingerprints"] = std::move(fps);
    return j;
}

Json report_to_json(const VerificationReport& r) {
    Json j;
    j["theorem"] = r.theorem;
    j["instance"] = r.instance;
    j["verdict"] = to_string(r.verdict);
    j["detail"] = r.detail;
    j["millis"] = r.millis;
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw IoError("cannot parse " + path + ": " + e.what());
    }
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << j.dump(2) << '\n';
    if (!out) throw IoError("cannot write " + path);
}

NamedAlgebra load_algebra(const std::string& name_or_path) {
    if (is_builtin_bundle(name_or_path)) {
        const Bundle& b = builtin_bundle(name_or_path);
        return NamedAlgebra{b.name, b.algebra};
    }
    return NamedAlgebra{name_or_path, bundle_from_json(load_json_file(name_or_path))};
}

FiniteGroup load_group(const std::string& name_or_path) {
    for (const std::string& n : builtin_group_names())
        if (n == name_or_path) return builtin_group(n);
    Json j = load_json_file(name_or_path);
    if (j.is_object() && j.find("mul") == j.end() && j.find("group") != j.end()) {
        const Json& g = field(j, "group");
        if (g.is_string()) return builtin_group(g.get<std::string>());
        return group_from_json(g);
    }
    return group_from_json(j);
}

}  // namespace mla
