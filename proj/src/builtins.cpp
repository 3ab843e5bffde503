#include "mla/builtins.hpp"

#include <set>

#include "mla/construct.hpp"
#include "mla/errors.hpp"

namespace mla {

namespace {

FiniteGroup cyclic_group(int n) {
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
    std::vector<std::string> names(n);
    names[0] = "1";
    for (int i = 1; i < n; ++i) names[i] = i == 1 ? "g" : "g" + std::to_string(i);
    return validate_group(mul, names);
}

FiniteGroup klein_group() {
    std::vector<std::vector<int>> mul(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) mul[i][j] = i ^ j;
    return validate_group(mul, {"1", "a", "b", "ab"});
}

// Elements x^i y^j indexed i + 4j; y x y^{-1} = x^{-1}.
FiniteGroup dihedral8_group() {
    std::vector<std::vector<int>> mul(8, std::vector<int>(8));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 2; ++l) {
                    int twist = j == 0 ? k : (4 - k) % 4;
                    mul[i + 4 * j][k + 4 * l] = (i + twist) % 4 + 4 * ((j + l) % 2);
                }
    return validate_group(mul, {"1", "x", "x2", "x3", "y", "xy", "x2y", "x3y"});
}

// Elements (-1)^s u indexed s*4 + u with units 1, i, j, k.
FiniteGroup quaternion_group() {
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<std::vector<int>> mul(8, std::vector<int>(8));
    for (int s1 = 0; s1 < 2; ++s1)
        for (int u1 = 0; u1 < 4; ++u1)
            for (int s2 = 0; s2 < 2; ++s2)
                for (int u2 = 0; u2 < 4; ++u2)
                    mul[s1 * 4 + u1][s2 * 4 + u2] =
                        ((s1 + s2 + sign[u1][u2]) % 2) * 4 + unit[u1][u2];
    return validate_group(mul, {"1", "i", "j", "k", "-1", "-i", "-j", "-k"});
}

MultLieAlg klein_a_star() {
    FiniteGroup g = klein_group();
    std::vector<int> star = {0, 0, 0, 0,
                             0, 0, 1, 1,
                             0, 1, 0, 1,
                             0, 1, 1, 0};
    return check_axioms(g, star);
}

// s(x^i, x^j) = 1, s(x^i, x^j y) = x^i, s(x^i y, x^j) = x^-j,
// s(x^i y, x^j y) = x^(i-j); the unique structure with x*y = x on this carrier.
MultLieAlg dihedral_x_star() {
    FiniteGroup g = dihedral8_group();
    std::vector<int> star(64, 0);
    auto at = [&](int a, int b) -> int& { return star[a * 8 + b]; };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            at(i, j) = 0;
            at(i, j + 4) = i;
            at(i + 4, j) = (4 - j) % 4;
            at(i + 4, j + 4) = (i - j + 4) % 4;
        }
    return check_axioms(g, star);
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

std::vector<Bundle> make_bundles() {
    std::vector<Bundle> out;
    auto add = [&](const std::string& name, const std::string& desc, MultLieAlg m) {
        out.push_back(Bundle{name, desc, std::move(m)});
    };
    auto with_trivial = [](FiniteGroup g) {
        std::vector<int> star = trivial_star(g);
        return check_axioms(std::move(g), std::move(star));
    };
    auto with_commutator = [](FiniteGroup g) {
        std::vector<int> star = commutator_star(g);
        return check_axioms(std::move(g), std::move(star));
    };

    add("trivial", "one-element group", with_trivial(cyclic_group(1)));
    add("z2", "cyclic group of order 2, trivial star", with_trivial(cyclic_group(2)));
    add("z3", "cyclic group of order 3, trivial star", with_trivial(cyclic_group(3)));
    add("z4", "cyclic group of order 4, trivial star", with_trivial(cyclic_group(4)));
    add("v4-trivial", "Klein four-group, trivial star", with_trivial(klein_group()));
    add("v4-a", "Klein four-group with a*b = a*ab = a", klein_a_star());
    add("d4-comm", "dihedral group of order 8, star = commutator", with_commutator(dihedral8_group()));
    add("d4-x", "dihedral group of order 8 with x*y = x", dihedral_x_star());
    add("q8-comm", "quaternion group of order 8, star = commutator", with_commutator(quaternion_group()));

    MultLieAlg v4a = klein_a_star();
    Subset small(0b0011, 4);  // {1, a}
    Subset whole = Subset::all(4);
    add("e1-excision", "excision of v4-a by the ideal {1,a}", excision(v4a, small));
    add("e1-idealization", "idealization of v4-a by the ideal {1,a}", idealization(v4a, small));
    add("e1-product", "direct product of v4-a with its subalgebra {1,a}",
        direct_product_mla(v4a, restrict_algebra(v4a, small)));
    add("e2-excision", "excision of v4-a by its whole carrier", excision(v4a, whole));
    add("e2-idealization", "idealization of v4-a by its whole carrier", idealization(v4a, whole));
    return out;
}

std::vector<TheoremInstance> make_instances() {
    std::vector<TheoremInstance> out;
    for (const Bundle& b : builtin_bundles()) {
        const MultLieAlg& m = b.algebra;
        std::vector<Subset> candidates;
        candidates.push_back(Subset::single(m.identity(), m.order()));
        candidates.push_back(star_closure(m));
        candidates.push_back(script_center(m));
        if (m.group().is_abelian() && m.order() <= 4)
            candidates.push_back(Subset::all(m.order()));
        std::set<std::uint64_t> seen;
        for (const Subset& s : candidates) {
            if (!seen.insert(s.bits()).second) continue;
            out.push_back(TheoremInstance{b.name + " I=" + subset_label(m.group(), s), m, s});
        }
    }
    return out;
}

}  // namespace

const std::vector<std::string>& builtin_group_names() {
    static const std::vector<std::string> names = {"trivial", "z2", "z3", "z4", "v4", "d4", "q8"};
    return names;
}

FiniteGroup builtin_group(const std::string& name) {
    if (name == "trivial") return cyclic_group(1);
    if (name == "z2") return cyclic_group(2);
    if (name == "z3") return cyclic_group(3);
    if (name == "z4") return cyclic_group(4);
    if (name == "v4") return klein_group();
    if (name == "d4") return dihedral8_group();
    if (name == "q8") return quaternion_group();
    throw InvalidArgument("unknown builtin group: " + name);
}

const std::vector<Bundle>& builtin_bundles() {
    static const std::vector<Bundle> bundles = make_bundles();
    return bundles;
}

const Bundle& builtin_bundle(const std::string& name) {
    for (const Bundle& b : builtin_bundles())
        if (b.name == name) return b;
    throw InvalidArgument("unknown builtin bundle: " + name);
}

bool is_builtin_bundle(const std::string& name) {
    for (const Bundle& b : builtin_bundles())
        if (b.name == name) return true;
    return false;
}

const std::vector<TheoremInstance>& builtin_instances() {
    static const std::vector<TheoremInstance> instances = make_instances();
    return instances;
}

}  // namespace mla
