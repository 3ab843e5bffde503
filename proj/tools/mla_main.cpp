#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mla/construct.hpp"
#include "mla/io.hpp"

using namespace mla;

namespace {

// Element names may contain commas inside parentheses ("(a,1)"), so the
// spec splits only at top-level commas. "all" and "star-closure" are
// computed from the algebra itself.
Subset parse_ideal(const MultLieAlg& m, const std::string& spec) {
    if (spec == "all") return Subset::all(m.order());
    if (spec == "star-closure") return star_closure(m);
    Subset s = Subset::empty(m.order());
    std::string cur;
    int depth = 0;
    auto flush = [&]() {
        std::size_t a = cur.find_first_not_of(" \t");
        std::size_t b = cur.find_last_not_of(" \t");
        if (a == std::string::npos) throw InvalidArgument("empty element name in ideal spec");
        std::string name = cur.substr(a, b - a + 1);
        int idx = m.group().index_of(name);
        if (idx < 0) throw InvalidArgument("unknown element in ideal spec: " + name);
        s.add(idx);
        cur.clear();
    };
    for (char c : spec) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            flush();
        } else {
            cur += c;
        }
    }
    flush();
    return s;
}

std::string subset_label(const FiniteGroup& g, const Subset& s) {
    std::string out = "{";
    bool first = true;
    for (int e : s.elements()) {
        if (!first) out += ",";
        out += g.name_of(e);
        first = false;
    }
    return out + "}";
}

Json ideal_names(const FiniteGroup& g, const Subset& s) {
    Json names = Json::array();
    for (int e : s.elements()) names.push_back(g.name_of(e));
    return names;
}

Json input_entry(const NamedAlgebra& in) {
    Json j;
    j["name"] = in.name;
    j["hash"] = algebra_hash(in.algebra);
    return j;
}

void print_reports(const std::vector<VerificationReport>& reports) {
    std::size_t id_w = 2, inst_w = 8;
    for (const auto& r : reports) {
        id_w = std::max(id_w, r.theorem.size());
        inst_w = std::max(inst_w, r.instance.size());
    }
    int verified = 0, refuted = 0, inapplicable = 0;
    for (const auto& r : reports) {
        switch (r.verdict) {
            case Verdict::Verified: ++verified; break;
            case Verdict::Refuted: ++refuted; break;
            default: ++inapplicable; break;
        }
        std::cout << std::left << std::setw(static_cast<int>(id_w) + 2) << r.theorem
                  << std::setw(static_cast<int>(inst_w) + 2) << r.instance << std::setw(14)
                  << to_string(r.verdict) << r.detail << "\n";
    }
    std::cout << reports.size() << " checks: " << verified << " verified, " << refuted
              << " refuted, " << inapplicable << " inapplicable\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact engine for multiplicative Lie algebras on finite groups"};
    app.require_subcommand(1);
    int exit_code = 0;

    // check ------------------------------------------------------------
    auto* check = app.add_subcommand("check", "validate a bundle against the five identities");
    std::string check_in;
    bool check_json = false;
    check->add_option("bundle", check_in, "builtin bundle name or bundle file")->required();
    check->add_flag("--json", check_json, "machine-readable output");
    check->callback([&]() {
        std::string name = check_in;
        FiniteGroup g;
        std::vector<int> flat;
        // Group-table failures carry their witness in the message; report
        // them like star violations instead of letting them escape.
        auto group_invalid = [&](const Error& e) {
            if (check_json) {
                Json out;
                out["name"] = name;
                out["ok"] = false;
                out["error"] = e.what();
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "bundle: " << name << "\ngroup table invalid: " << e.what() << "\n";
            }
            exit_code = 1;
        };
        if (is_builtin_bundle(check_in)) {
            const Bundle& b = builtin_bundle(check_in);
            g = b.algebra.group();
            flat = b.algebra.star_table();
        } else {
            Json j = load_json_file(check_in);
            const Json& gj = j.contains("group") ? j["group"] : j;
            try {
                g = gj.is_string() ? builtin_group(gj.get<std::string>()) : group_from_json(gj);
            } catch (const NotAssociative& e) {
                group_invalid(e);
                return;
            } catch (const NoIdentity& e) {
                group_invalid(e);
                return;
            } catch (const NoInverse& e) {
                group_invalid(e);
                return;
            }
            if (!j.contains("star")) throw InvalidArgument("missing key: star");
            Json star = j["star"];
            if (!star.is_array() || static_cast<int>(star.size()) != g.order)
                throw InvalidArgument("star table size disagrees with group order");
            for (const Json& row : star) {
                if (!row.is_array() || static_cast<int>(row.size()) != g.order)
                    throw InvalidArgument("star table must be square");
                for (const Json& v : row) {
                    if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() >= g.order)
                        throw InvalidArgument("star entry out of range");
                    flat.push_back(v.get<int>());
                }
            }
        }
        std::optional<AxiomWitness> w = find_axiom_violation(g, flat);
        if (check_json) {
            Json out;
            out["name"] = name;
            out["ok"] = !w.has_value();
            if (w) {
                out["axiom"] = w->axiom;
                Json witness;
                witness["x"] = g.name_of(w->x);
                if (w->y >= 0) witness["y"] = g.name_of(w->y);
                if (w->z >= 0) witness["z"] = g.name_of(w->z);
                out["witness"] = witness;
            } else {
                out["order"] = g.order;
                out["hash"] = algebra_hash(check_axioms(g, flat));
            }
            std::cout << out.dump(2) << "\n";
        } else if (w) {
            std::cout << "bundle: " << name << "\n";
            std::cout << "identity " << w->axiom << " fails at x=" << g.name_of(w->x);
            if (w->y >= 0) std::cout << ", y=" << g.name_of(w->y);
            if (w->z >= 0) std::cout << ", z=" << g.name_of(w->z);
            std::cout << "\n";
        } else {
            std::cout << "bundle: " << name << "\norder: " << g.order
                      << "\nhash: " << algebra_hash(check_axioms(g, flat)) << "\nall five identities hold\n";
        }
        if (w) exit_code = 1;
    });

    // construct ----------------------------------------------------------
    auto* con = app.add_subcommand("construct", "build a new bundle from existing ones");
    std::string con_kind, con_in, con_left, con_right, con_ideal, con_over, con_out;
    int con_n = 1;
    bool con_json = false;
    con->add_option("kind", con_kind, "excision|idealization|product|iterated-left|iterated-right|fiber")
        ->required()
        ->check(CLI::IsMember(
            {"excision", "idealization", "product", "iterated-left", "iterated-right", "fiber"}));
    con->add_option("--in", con_in, "input bundle (excision, idealization, iterated-*)");
    con->add_option("--left", con_left, "left bundle (product, fiber)");
    con->add_option("--right", con_right, "right bundle (product, fiber)");
    con->add_option("--ideal", con_ideal, "ideal: comma-separated names, 'all', or 'star-closure'");
    con->add_option("--n", con_n, "iteration depth")->check(CLI::PositiveNumber);
    con->add_option("--over", con_over, "fiber base, as quotient:IDEAL-SPEC");
    con->add_option("--out", con_out, "write the bundle to this file");
    con->add_flag("--json", con_json, "print the bundle as JSON");
    con->callback([&]() {
        auto need = [&](const std::string& value, const char* flag) {
            if (value.empty())
                throw InvalidArgument(con_kind + " needs " + flag);
        };
        Json prov;
        prov["kind"] = con_kind;
        std::optional<MultLieAlg> result;
        std::string result_name;
        if (con_kind == "excision" || con_kind == "idealization" || con_kind == "iterated-left" ||
            con_kind == "iterated-right") {
            need(con_in, "--in");
            need(con_ideal, "--ideal");
            NamedAlgebra in = load_algebra(con_in);
            Subset ideal = parse_ideal(in.algebra, con_ideal);
            prov["inputs"] = Json::array({input_entry(in)});
            prov["ideal"] = ideal_names(in.algebra.group(), ideal);
            if (con_kind == "excision") {
                result = excision(in.algebra, ideal);
            } else if (con_kind == "idealization") {
                result = idealization(in.algebra, ideal);
            } else {
                prov["n"] = con_n;
                result = con_kind == "iterated-left"
                             ? iterated_excision_left(in.algebra, ideal, con_n)
                             : iterated_excision_right(in.algebra, ideal, con_n);
            }
            result_name = con_kind + "(" + in.name + ", I=" +
                          subset_label(in.algebra.group(), ideal) +
                          (con_kind.rfind("iterated", 0) == 0 ? ", n=" + std::to_string(con_n) : "") +
                          ")";
        } else if (con_kind == "product") {
            need(con_left, "--left");
            need(con_right, "--right");
            NamedAlgebra left = load_algebra(con_left);
            NamedAlgebra right = load_algebra(con_right);
            prov["inputs"] = Json::array({input_entry(left), input_entry(right)});
            result = direct_product_mla(left.algebra, right.algebra);
            result_name = "product(" + left.name + ", " + right.name + ")";
        } else {  // fiber
            need(con_left, "--left");
            need(con_right, "--right");
            need(con_over, "--over");
            const std::string prefix = "quotient:";
            if (con_over.rfind(prefix, 0) != 0)
                throw InvalidArgument("--over must look like quotient:IDEAL-SPEC");
            NamedAlgebra left = load_algebra(con_left);
            NamedAlgebra right = load_algebra(con_right);
            if (left.algebra.group().mul != right.algebra.group().mul)
                throw InvalidArgument(
                    "fiber construction needs both bundles on the same carrier group");
            Subset ideal = parse_ideal(left.algebra, con_over.substr(prefix.size()));
            QuotientMla q = quotient_mla(left.algebra, ideal);
            FiberProduct fp =
                fiber_product(left.algebra, right.algebra, q.algebra, q.projection, q.projection);
            prov["inputs"] = Json::array({input_entry(left), input_entry(right)});
            prov["over"] = con_over;
            prov["carrier_pairs"] = fp.carrier;
            result = fp.algebra;
            result_name = "fiber(" + left.name + ", " + right.name + ")";
        }
        Json bundle = bundle_to_json(*result, result_name, prov);
        if (!con_out.empty()) save_json_file(con_out, bundle);
        if (con_json || con_out.empty()) {
            std::cout << bundle.dump(2) << "\n";
        } else {
            std::cout << "wrote " << con_out << " (order " << result->order() << ", hash "
                      << algebra_hash(*result) << ")\n";
        }
    });

    // verify -------------------------------------------------------------
    auto* ver = app.add_subcommand("verify", "run named structure checks over instances");
    std::string ver_id, ver_instances = "builtin", ver_in, ver_ideal = "1";
    bool ver_json = false;
    ver->add_option("id", ver_id, "check id or 'all'")->required();
    ver->add_option("--instances", ver_instances, "instance source")
        ->check(CLI::IsMember({"builtin"}));
    ver->add_option("--in", ver_in, "run against one bundle instead of the builtin instances");
    ver->add_option("--ideal", ver_ideal, "ideal for --in (names, 'all', 'star-closure')");
    ver->add_flag("--json", ver_json, "machine-readable output");
    ver->callback([&]() {
        std::vector<std::string> ids;
        if (ver_id == "all") {
            ids = theorem_ids();
        } else {
            const auto& known = theorem_ids();
            if (std::find(known.begin(), known.end(), ver_id) == known.end())
                throw UnknownTheoremId(ver_id);
            ids.push_back(ver_id);
        }
        std::vector<TheoremInstance> instances;
        if (!ver_in.empty()) {
            NamedAlgebra in = load_algebra(ver_in);
            Subset ideal = parse_ideal(in.algebra, ver_ideal);
            instances.push_back(TheoremInstance{
                in.name + " I=" + subset_label(in.algebra.group(), ideal), in.algebra, ideal});
        } else {
            instances = builtin_instances();
        }
        std::vector<VerificationReport> reports = verify_suite(ids, instances);
        bool refuted = false;
        for (const auto& r : reports) refuted |= r.verdict == Verdict::Refuted;
        if (ver_json) {
            Json out = Json::array();
            for (const auto& r : reports) out.push_back(report_to_json(r));
            std::cout << out.dump(2) << "\n";
        } else {
            print_reports(reports);
        }
        if (refuted) exit_code = 1;
    });

    // enumerate ------------------------------------------------------------
    auto* enu = app.add_subcommand("enumerate", "find every star table on a group");
    std::string enu_group, enu_out;
    int enu_limit = 0;
    bool enu_classify = false, enu_json = false;
    enu->add_option("--group", enu_group, "builtin group name or group file")->required();
    enu->add_option("--limit", enu_limit, "stop after this many structures")
        ->check(CLI::PositiveNumber);
    enu->add_flag("--classify", enu_classify, "partition the structures into classes");
    enu->add_option("--out", enu_out, "write the catalog to this file");
    enu->add_flag("--json", enu_json, "machine-readable output");
    enu->callback([&]() {
        if (enu_classify && enu_limit > 0)
            throw InvalidArgument("--classify needs the full catalog; drop --limit");
        FiniteGroup g = load_group(enu_group);
        StructureCatalog catalog = enumerate_structures(
            g, enu_limit > 0 ? std::optional<int>(enu_limit) : std::nullopt);
        bool classified = (enu_classify || !enu_out.empty()) && enu_limit == 0;
        if (classified) classify(catalog);
        Json j = catalog_to_json(g, catalog);
        if (!enu_out.empty()) save_json_file(enu_out, j);
        if (enu_json) {
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "group: " << enu_group << " (order " << g.order << ")\n";
            std::cout << "structures: " << catalog.tables.size() << "\n";
            if (classified) {
                std::cout << "automorphism classes: " << catalog.classes_aut.size() << "\n";
                std::cout << "isomorphism classes: " << catalog.classes_iso.size() << "\n";
            }
            if (!enu_out.empty()) std::cout << "wrote " << enu_out << "\n";
        }
    });

    // iso -----------------------------------------------------------------
    auto* iso = app.add_subcommand("iso", "search for an isomorphism between two bundles");
    std::string iso_a, iso_b;
    bool iso_json = false;
    iso->add_option("a", iso_a, "first bundle")->required();
    iso->add_option("b", iso_b, "second bundle")->required();
    iso->add_flag("--json", iso_json, "machine-readable output");
    iso->callback([&]() {
        NamedAlgebra a = load_algebra(iso_a);
        NamedAlgebra b = load_algebra(iso_b);
        std::optional<Morphism> f = find_isomorphism(a.algebra, b.algebra);
        if (iso_json) {
            Json out;
            out["isomorphic"] = f.has_value();
            if (f) out["map"] = f->map;
            std::cout << out.dump(2) << "\n";
        } else if (f) {
            std::cout << "isomorphic\n";
            for (int i = 0; i < f->source_order(); ++i)
                std::cout << "  " << a.algebra.name_of(i) << " -> " << b.algebra.name_of(f->map[i])
                          << "\n";
        } else {
            std::string why = fingerprint(a.algebra) == fingerprint(b.algebra)
                                  ? "exhaustive search found none"
                                  : "fingerprints differ";
            std::cout << "not isomorphic (" << why << ")\n";
        }
    });

    // catalog ---------------------------------------------------------------
    auto* cat = app.add_subcommand("catalog", "builtin content");
    auto* cat_list = cat->add_subcommand("list", "list builtin groups and bundles");
    bool cat_json = false;
    cat_list->add_flag("--json", cat_json, "machine-readable output");
    cat->require_subcommand(1);
    cat_list->callback([&]() {
        if (cat_json) {
            Json out;
            Json groups = Json::array();
            for (const std::string& n : builtin_group_names()) {
                Json g;
                g["name"] = n;
                g["order"] = builtin_group(n).order;
                groups.push_back(std::move(g));
            }
            out["groups"] = std::move(groups);
            Json bundles = Json::array();
            for (const Bundle& b : builtin_bundles()) {
                Json e;
                e["name"] = b.name;
                e["order"] = b.algebra.order();
                e["description"] = b.description;
                e["hash"] = algebra_hash(b.algebra);
                bundles.push_back(std::move(e));
            }
            out["bundles"] = std::move(bundles);
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "groups:\n";
            for (const std::string& n : builtin_group_names())
                std::cout << "  " << std::left << std::setw(12) << n << "order "
                          << builtin_group(n).order << "\n";
            std::cout << "bundles:\n";
            for (const Bundle& b : builtin_bundles())
                std::cout << "  " << std::left << std::setw(18) << b.name << "order " << std::setw(4)
                          << b.algebra.order() << b.description << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* raw = std::getenv("MLA_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(raw, &end, 10);
        if (end == raw || *end != '\0' || v < 1) {
            std::cerr << "error: MLA_THREADS must be a positive integer\n";
            return 2;
        }
        // The engine is sequential; the value is accepted for compatibility
        // and does not change results.
    }
    try {
        return run(argc, argv);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownTheoremId& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
