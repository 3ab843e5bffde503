#include "mla/group.hpp"

#include <algorithm>
#include <bit>

namespace mla {

int Subset::size() const { return std::popcount(bits_); }

std::vector<int> Subset::elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (int i = 0; i < universe_; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

int FiniteGroup::pow(int g, int k) const {
    if (k < 0) return pow(inv[g], -k);
    int acc = identity;
    for (int i = 0; i < k; ++i) acc = op(acc, g);
    return acc;
}

int FiniteGroup::element_order(int g) const {
    int acc = g, n = 1;
    while (acc != identity) {
        acc = op(acc, g);
        ++n;
    }
    return n;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            if (op(a, b) != op(b, a)) return false;
    return true;
}

std::string FiniteGroup::name_of(int i) const {
    if (!element_names.empty()) return element_names[i];
    return "g" + std::to_string(i);
}

int FiniteGroup::index_of(const std::string& name) const {
    for (int i = 0; i < order; ++i)
        if (name_of(i) == name) return i;
    return -1;
}

FiniteGroup validate_group(const std::vector<std::vector<int>>& mul,
                           std::vector<std::string> element_names) {
    const int n = static_cast<int>(mul.size());
    if (n == 0) throw InvalidArgument("empty multiplication table");
    if (n > kMaxOrder) throw OrderTooLarge(n, kMaxOrder);
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(mul[a].size()) != n)
            throw InvalidArgument("multiplication table is not square at row " +
                                  std::to_string(a));
        for (int b = 0; b < n; ++b)
            if (mul[a][b] < 0 || mul[a][b] >= n)
                throw InvalidArgument("table entry out of range at (" + std::to_string(a) +
                                      "," + std::to_string(b) + ")");
    }
    if (!element_names.empty()) {
        if (static_cast<int>(element_names.size()) != n)
            throw InvalidArgument("expected " + std::to_string(n) + " element names, got " +
                                  std::to_string(element_names.size()));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (element_names[i] == element_names[j])
                    throw InvalidArgument("duplicate element name \"" + element_names[i] +
                                          "\"");
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) throw NotAssociative(a, b, c);

    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = mul[e][a] == a && mul[a][e] == a;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) throw NoIdentity();

    FiniteGroup g;
    g.order = n;
    g.identity = identity;
    g.mul.resize(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.mul[a * n + b] = mul[a][b];
    g.inv.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul[a][b] == identity && mul[b][a] == identity) {
                g.inv[a] = b;
                break;
            }
        if (g.inv[a] < 0) throw NoInverse(a);
    }
    g.element_names = std::move(element_names);
    return g;
}

Subset subgroup_generated(const FiniteGroup& g, const Subset& seed) {
    Subset s = seed;
    s.add(g.identity);
    bool grew = true;
    while (grew) {
        grew = false;
        auto members = s.elements();
        for (int a : members)
            for (int b : members) {
                int c = g.op(a, b);
                if (!s.contains(c)) {
                    s.add(c);
                    grew = true;
                }
            }
    }
    return s;
}

bool is_subgroup(const FiniteGroup& g, const Subset& s) {
    if (s.is_empty()) return false;
    auto members = s.elements();
    for (int a : members)
        for (int b : members)
            if (!s.contains(g.op(a, b))) return false;
    // Closure under multiplication in a finite group gives identity and inverses.
    return true;
}

bool is_normal(const FiniteGroup& g, const Subset& h) {
    if (!is_subgroup(g, h))
        throw NotASubgroup("subset is not closed under the group operation");
    for (int x = 0; x < g.order; ++x)
        for (int m : h.elements())
            if (!h.contains(g.conj(x, m))) return false;
    return true;
}

Subset center(const FiniteGroup& g) {
    Subset z = Subset::empty(g.order);
    for (int a = 0; a < g.order; ++a) {
        bool central = true;
        for (int b = 0; b < g.order && central; ++b) central = g.op(a, b) == g.op(b, a);
        if (central) z.add(a);
    }
    return z;
}

Subset commutator_subgroup(const FiniteGroup& g) {
    Subset seed = Subset::empty(g.order);
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) seed.add(g.comm(a, b));
    return subgroup_generated(g, seed);
}

bool Morphism::is_injective() const {
    std::uint64_t seen = 0;
    for (int v : map) {
        std::uint64_t bit = std::uint64_t{1} << v;
        if (seen & bit) return false;
        seen |= bit;
    }
    return true;
}

bool is_group_hom(const FiniteGroup& src, const FiniteGroup& dst, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != src.order) return false;
    for (int v : map)
        if (v < 0 || v >= dst.order) return false;
    for (int a = 0; a < src.order; ++a)
        for (int b = 0; b < src.order; ++b)
            if (map[src.op(a, b)] != dst.op(map[a], map[b])) return false;
    return true;
}

QuotientGroup quotient_group(const FiniteGroup& g, const Subset& n) {
    if (!is_normal(g, n)) throw NotNormal("subgroup is not closed under conjugation");

    // Cosets ordered by minimum member; the identity coset lands first
    // whenever the identity is element 0.
    std::vector<int> coset_of(g.order, -1);
    std::vector<int> reps;
    for (int a = 0; a < g.order; ++a) {
        if (coset_of[a] >= 0) continue;
        int idx = static_cast<int>(reps.size());
        reps.push_back(a);
        for (int m : n.elements()) coset_of[g.op(a, m)] = idx;
    }

    const int q = static_cast<int>(reps.size());
    std::vector<std::vector<int>> mul(q, std::vector<int>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) mul[i][j] = coset_of[g.op(reps[i], reps[j])];

    std::vector<std::string> names;
    names.reserve(q);
    for (int r : reps) names.push_back("[" + g.name_of(r) + "]");

    QuotientGroup out;
    out.group = validate_group(mul, std::move(names));
    out.projection = Morphism{coset_of, q, MorphKind::GroupHom};
    out.coset_reps = std::move(reps);
    return out;
}

FiniteGroup direct_product_group(const FiniteGroup& g1, const FiniteGroup& g2) {
    const int n = g1.order * g2.order;
    if (n > kMaxOrder) throw OrderTooLarge(n, kMaxOrder);
    FiniteGroup g;
    g.order = n;
    g.identity = g1.identity * g2.order + g2.identity;
    g.mul.resize(n * n);
    g.inv.resize(n);
    g.element_names.reserve(n);
    for (int a1 = 0; a1 < g1.order; ++a1)
        for (int a2 = 0; a2 < g2.order; ++a2) {
            int a = a1 * g2.order + a2;
            g.inv[a] = g1.inv[a1] * g2.order + g2.inv[a2];
            g.element_names.push_back("(" + g1.name_of(a1) + "," + g2.name_of(a2) + ")");
            for (int b1 = 0; b1 < g1.order; ++b1)
                for (int b2 = 0; b2 < g2.order; ++b2)
                    g.mul[a * n + b1 * g2.order + b2] =
                        g1.op(a1, b1) * g2.order + g2.op(a2, b2);
        }
    return g;
}

std::vector<int> generating_set(const FiniteGroup& g) {
    std::vector<int> gens;
    Subset have = Subset::single(g.identity, g.order);
    for (int a = 0; a < g.order && have.size() < g.order; ++a) {
        if (have.contains(a)) continue;
        gens.push_back(a);
        Subset seed = have;
        seed.add(a);
        have = subgroup_generated(g, seed);
    }
    return gens;
}

namespace {

// Extends a partial map on generators to the subgroup they generate;
// returns false when the extension contradicts the tables.
bool close_partial_hom(const FiniteGroup& src, const FiniteGroup& dst, std::vector<int>& map) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < src.order; ++a) {
            if (map[a] < 0) continue;
            for (int b = 0; b < src.order; ++b) {
                if (map[b] < 0) continue;
                int c = src.op(a, b);
                int v = dst.op(map[a], map[b]);
                if (map[c] < 0) {
                    map[c] = v;
                    changed = true;
                } else if (map[c] != v) {
                    return false;
                }
            }
        }
    }
    return true;
}

void search_isos(const FiniteGroup& src, const FiniteGroup& dst, const std::vector<int>& gens,
                 std::size_t depth, std::vector<int>& map, std::vector<Morphism>& out,
                 bool first_only) {
    if (first_only && !out.empty()) return;
    if (depth == gens.size()) {
        std::uint64_t seen = 0;
        for (int v : map) {
            std::uint64_t bit = std::uint64_t{1} << v;
            if (seen & bit) return;
            seen |= bit;
        }
        out.push_back(Morphism{map, dst.order, MorphKind::GroupIso});
        return;
    }
    int gen = gens[depth];
    if (map[gen] >= 0) {
        search_isos(src, dst, gens, depth + 1, map, out, first_only);
        return;
    }
    int need = src.element_order(gen);
    for (int img = 0; img < dst.order; ++img) {
        if (dst.element_order(img) != need) continue;
        std::vector<int> next = map;
        next[gen] = img;
        if (!close_partial_hom(src, dst, next)) continue;
        search_isos(src, dst, gens, depth + 1, next, out, first_only);
        if (first_only && !out.empty()) return;
    }
}

}  // namespace

std::vector<Morphism> automorphisms(const FiniteGroup& g) {
    std::vector<int> gens = generating_set(g);
    std::vector<int> map(g.order, -1);
    map[g.identity] = g.identity;
    std::vector<Morphism> out;
    search_isos(g, g, gens, 0, map, out, false);
    std::sort(out.begin(), out.end(),
              [](const Morphism& a, const Morphism& b) { return a.map < b.map; });
    return out;
}

std::vector<Subset> all_subgroups(const FiniteGroup& g) {
    std::vector<Subset> found;
    std::vector<std::uint64_t> seen;
    auto known = [&seen](std::uint64_t bits) {
        return std::find(seen.begin(), seen.end(), bits) != seen.end();
    };

    Subset trivial = Subset::single(g.identity, g.order);
    found.push_back(trivial);
    seen.push_back(trivial.bits());

    // Grow each known subgroup by one extra generator until nothing new appears.
    for (std::size_t i = 0; i < found.size(); ++i) {
        Subset base = found[i];
        for (int a = 0; a < g.order; ++a) {
            if (base.contains(a)) continue;
            Subset seed = base;
            seed.add(a);
            Subset h = subgroup_generated(g, seed);
            if (!known(h.bits())) {
                found.push_back(h);
                seen.push_back(h.bits());
            }
        }
    }

    std::sort(found.begin(), found.end(), [](const Subset& a, const Subset& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.bits() < b.bits();
    });
    return found;
}

}  // namespace mla
