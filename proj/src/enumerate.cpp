#include "mla/enumerate.hpp"

#include <algorithm>
#include <map>

namespace mla {

namespace {

// Partial star table, -1 where undetermined. Propagation applies every
// consequence of identities (1)-(3) and (5) plus x★1 = 1★x = 1 and
// y★x = (x★y)⁻¹, all of which hold in any valid structure. Returns false
// on contradiction.
struct Propagator {
    const FiniteGroup& g;
    std::vector<int> table;

    explicit Propagator(const FiniteGroup& group)
        : g(group), table(group.order * group.order, -1) {
        for (int x = 0; x < g.order; ++x) {
            set_raw(x, x, g.identity);
            set_raw(x, g.identity, g.identity);
            set_raw(g.identity, x, g.identity);
        }
    }

    int at(int x, int y) const { return table[x * g.order + y]; }
    void set_raw(int x, int y, int v) { table[x * g.order + y] = v; }

    bool assign(int x, int y, int v) {
        int cur = at(x, y);
        if (cur >= 0) return cur == v;
        set_raw(x, y, v);
        return true;
    }

    bool saturate() {
        bool changed = true;
        while (changed) {
            changed = false;
            const int n = g.order;
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    int v = at(x, y);
                    if (v < 0) continue;
                    // y★x = (x★y)⁻¹
                    int before = at(y, x);
                    if (!assign(y, x, g.inv[v])) return false;
                    changed |= before < 0;
                    // ^z(x★y) = ^zx★^zy
                    for (int z = 0; z < n; ++z) {
                        int cx = g.conj(z, x), cy = g.conj(z, y);
                        int want = g.conj(z, v);
                        int had = at(cx, cy);
                        if (!assign(cx, cy, want)) return false;
                        changed |= had < 0;
                    }
                    // x★(yz) = (x★y) ^y(x★z)
                    for (int z = 0; z < n; ++z) {
                        int w = at(x, z);
                        if (w < 0) continue;
                        int target = g.op(y, z);
                        int want = g.op(v, g.conj(y, w));
                        int had = at(x, target);
                        if (!assign(x, target, want)) return false;
                        changed |= had < 0;
                    }
                    // (zx)★y = ^z(x★y) (z★y)
                    for (int z = 0; z < n; ++z) {
                        int w = at(z, y);
                        if (w < 0) continue;
                        int target = g.op(z, x);
                        int want = g.op(g.conj(z, v), w);
                        int had = at(target, y);
                        if (!assign(target, y, want)) return false;
                        changed |= had < 0;
                    }
                }
        }
        return true;
    }

    bool complete() const {
        return std::find(table.begin(), table.end(), -1) == table.end();
    }
};

void search(const FiniteGroup& g, const std::vector<std::pair<int, int>>& cells,
            std::size_t depth, const Propagator& state, std::optional<int> limit,
            std::vector<std::vector<int>>& out) {
    if (limit && static_cast<int>(out.size()) >= *limit) return;
    if (depth == cells.size()) {
        if (!state.complete()) return;  // generators failed to span the group
        if (find_axiom_violation(g, state.table)) return;
        out.push_back(state.table);
        return;
    }
    auto [x, y] = cells[depth];
    if (state.at(x, y) >= 0) {
        search(g, cells, depth + 1, state, limit, out);
        return;
    }
    for (int v = 0; v < g.order; ++v) {
        Propagator next = state;
        if (!next.assign(x, y, v)) continue;
        if (!next.saturate()) continue;
        search(g, cells, depth + 1, next, limit, out);
        if (limit && static_cast<int>(out.size()) >= *limit) return;
    }
}

}  // namespace

StructureCatalog enumerate_structures(const FiniteGroup& g, std::optional<int> limit) {
    if (g.order > kMaxEnumerationOrder) throw OrderTooLarge(g.order, kMaxEnumerationOrder);

    std::vector<int> gens = generating_set(g);
    std::vector<std::pair<int, int>> cells;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            cells.emplace_back(gens[i], gens[j]);

    StructureCatalog catalog;
    catalog.group = g;
    Propagator root(g);
    if (root.saturate())
        search(g, cells, 0, root, limit, catalog.tables);
    std::sort(catalog.tables.begin(), catalog.tables.end());
    return catalog;
}

namespace {

// Union-find over table indices.
struct Classes {
    std::vector<int> parent;
    explicit Classes(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a > b) std::swap(a, b);
        if (a != b) parent[b] = a;
    }
    std::vector<std::vector<int>> partition() {
        std::map<int, std::vector<int>> buckets;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i)
            buckets[find(i)].push_back(i);
        std::vector<std::vector<int>> out;
        out.reserve(buckets.size());
        for (auto& [root, members] : buckets) out.push_back(std::move(members));
        return out;
    }
};

}  // namespace

void classify(StructureCatalog& catalog) {
    const FiniteGroup& g = catalog.group;
    const int count = static_cast<int>(catalog.tables.size());

    std::map<std::vector<int>, int> index_of;
    for (int i = 0; i < count; ++i) index_of[catalog.tables[i]] = i;

    // Transport: (α·T)(x,y) = α(T(α⁻¹x, α⁻¹y)). The found set is closed
    // under this action, so every image must already be present.
    Classes aut_classes(count);
    auto autos = automorphisms(g);
    for (int i = 0; i < count; ++i) {
        const auto& t = catalog.tables[i];
        for (const Morphism& alpha : autos) {
            std::vector<int> moved(g.order * g.order);
            for (int x = 0; x < g.order; ++x)
                for (int y = 0; y < g.order; ++y)
                    moved[alpha(x) * g.order + alpha(y)] = alpha(t[x * g.order + y]);
            auto it = index_of.find(moved);
            if (it == index_of.end())
                throw Error("internal: automorphism image of a found table is missing");
            aut_classes.unite(i, it->second);
        }
    }
    catalog.classes_aut = aut_classes.partition();

    std::vector<MultLieAlg> algebras;
    algebras.reserve(count);
    std::vector<Fingerprint> prints;
    prints.reserve(count);
    for (int i = 0; i < count; ++i) {
        algebras.push_back(check_axioms(g, catalog.tables[i]));
        prints.push_back(fingerprint(algebras.back()));
    }

    Classes iso_classes(count);
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j) {
            if (iso_classes.find(i) == iso_classes.find(j)) continue;
            if (!(prints[i] == prints[j])) continue;
            if (find_isomorphism(algebras[i], algebras[j])) iso_classes.unite(i, j);
        }
    catalog.classes_iso = iso_classes.partition();

    catalog.class_fingerprints.clear();
    for (const auto& cls : catalog.classes_iso)
        catalog.class_fingerprints.push_back(prints[cls.front()]);
}

}  // namespace mla
