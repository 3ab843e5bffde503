#include "mla/algebra.hpp"

#include <string>

namespace mla {

std::optional<AxiomWitness> find_axiom_violation(const FiniteGroup& g,
                                                 const std::vector<int>& star) {
    const int n = g.order;
    if (static_cast<int>(star.size()) != n * n)
        throw InvalidArgument("star table size does not match group order");
    for (int v : star)
        if (v < 0 || v >= n) throw InvalidArgument("star table entry out of range");

    auto s = [&](int a, int b) { return star[a * n + b]; };

    for (int x = 0; x < n; ++x)
        if (s(x, x) != g.identity) return AxiomWitness{1, x, -1, -1};

    // x★(yz) = (x★y) ^y(x★z)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (s(x, g.op(y, z)) != g.op(s(x, y), g.conj(y, s(x, z))))
                    return AxiomWitness{2, x, y, z};

    // (xy)★z = ^x(y★z) (x★z)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (s(g.op(x, y), z) != g.op(g.conj(x, s(y, z)), s(x, z)))
                    return AxiomWitness{3, x, y, z};

    // ((x★y)★^yz)((y★z)★^zx)((z★x)★^xy) = 1
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int t1 = s(s(x, y), g.conj(y, z));
                int t2 = s(s(y, z), g.conj(z, x));
                int t3 = s(s(z, x), g.conj(x, y));
                if (g.op(g.op(t1, t2), t3) != g.identity) return AxiomWitness{4, x, y, z};
            }

    // ^z(x★y) = ^zx★^zy
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (g.conj(z, s(x, y)) != s(g.conj(z, x), g.conj(z, y)))
                    return AxiomWitness{5, x, y, z};

    return std::nullopt;
}

MultLieAlg check_axioms(FiniteGroup group, std::vector<int> star) {
    if (auto w = find_axiom_violation(group, star)) {
        int arity = w->axiom == 1 ? 1 : 3;
        throw AxiomViolationError(w->axiom, w->x, w->y, w->z, arity);
    }
    return MultLieAlg(std::move(group), std::move(star));
}

std::vector<int> trivial_star(const FiniteGroup& g) {
    return std::vector<int>(g.order * g.order, g.identity);
}

std::vector<int> commutator_star(const FiniteGroup& g) {
    std::vector<int> star(g.order * g.order);
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) star[a * g.order + b] = g.comm(a, b);
    return star;
}

Subset lie_center(const MultLieAlg& m) {
    Subset out = Subset::empty(m.order());
    for (int x = 0; x < m.order(); ++x) {
        bool flat = true;
        for (int y = 0; y < m.order() && flat; ++y) flat = m.s(x, y) == m.identity();
        if (flat) out.add(x);
    }
    return out;
}

Subset mult_lie_center(const MultLieAlg& m) {
    Subset out = Subset::empty(m.order());
    for (int x = 0; x < m.order(); ++x) {
        bool ok = true;
        for (int y = 0; y < m.order() && ok; ++y) ok = m.s(x, y) == m.comm(x, y);
        if (ok) out.add(x);
    }
    return out;
}

Subset script_center(const MultLieAlg& m) { return center(m.group()) & lie_center(m); }

Subset star_closure(const MultLieAlg& m) {
    Subset seed = Subset::empty(m.order());
    for (int x = 0; x < m.order(); ++x)
        for (int y = 0; y < m.order(); ++y) seed.add(m.s(x, y));
    return subgroup_generated(m.group(), seed);
}

bool is_subalgebra(const MultLieAlg& m, const Subset& s) {
    if (!is_subgroup(m.group(), s)) return false;
    auto members = s.elements();
    for (int a : members)
        for (int b : members)
            if (!s.contains(m.s(a, b))) return false;
    return true;
}

bool is_ideal(const MultLieAlg& m, const Subset& s) {
    if (!is_subgroup(m.group(), s)) return false;
    if (!is_normal(m.group(), s)) return false;
    for (int g = 0; g < m.order(); ++g)
        for (int a : s.elements())
            if (!s.contains(m.s(g, a))) return false;
    return true;
}

Subset ideal_generated(const MultLieAlg& m, const Subset& seed) {
    Subset cur = subgroup_generated(m.group(), seed);
    for (;;) {
        Subset next = cur;
        for (int g = 0; g < m.order(); ++g)
            for (int a : cur.elements()) {
                next.add(m.conj(g, a));
                next.add(m.s(g, a));
            }
        next = subgroup_generated(m.group(), next);
        if (next == cur) return cur;
        cur = next;
    }
}

MultLieAlg restrict_algebra(const MultLieAlg& m, const Subset& s) {
    if (!is_subgroup(m.group(), s))
        throw NotASubalgebra("subset is not closed under the group operation");
    if (!is_subalgebra(m, s)) {
        for (int a : s.elements())
            for (int b : s.elements())
                if (!s.contains(m.s(a, b)))
                    throw NotASubalgebra("star value " + m.name_of(a) + "*" + m.name_of(b) +
                                         " = " + m.name_of(m.s(a, b)) + " escapes the subset");
    }

    auto carrier = s.elements();
    const int k = static_cast<int>(carrier.size());
    std::vector<int> pos(m.order(), -1);
    for (int i = 0; i < k; ++i) pos[carrier[i]] = i;

    std::vector<std::vector<int>> mul(k, std::vector<int>(k));
    std::vector<int> star(k * k);
    std::vector<std::string> names;
    names.reserve(k);
    for (int i = 0; i < k; ++i) {
        names.push_back(m.name_of(carrier[i]));
        for (int j = 0; j < k; ++j) {
            mul[i][j] = pos[m.op(carrier[i], carrier[j])];
            star[i * k + j] = pos[m.s(carrier[i], carrier[j])];
        }
    }
    return check_axioms(validate_group(mul, std::move(names)), std::move(star));
}

QuotientMla quotient_mla(const MultLieAlg& m, const Subset& ideal) {
    if (!is_ideal(m, ideal)) throw NotAnIdeal("subset fails the ideal test");
    QuotientGroup q = quotient_group(m.group(), ideal);
    const int k = q.group.order;

    std::vector<int> star(k * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            star[i * k + j] = q.projection(m.s(q.coset_reps[i], q.coset_reps[j]));

    // Descent must not depend on the representatives chosen.
    for (int a = 0; a < m.order(); ++a)
        for (int b = 0; b < m.order(); ++b) {
            int pa = q.projection(a), pb = q.projection(b);
            if (q.projection(m.s(a, b)) != star[pa * k + pb])
                throw StarNotWellDefined("star of " + m.name_of(a) + "," + m.name_of(b) +
                                         " disagrees with its coset representatives");
        }

    QuotientMla out{check_axioms(std::move(q.group), std::move(star)),
                    std::move(q.projection), std::move(q.coset_reps)};
    out.projection.kind = MorphKind::MlaHom;
    return out;
}

bool is_mla_hom(const MultLieAlg& src, const MultLieAlg& dst, const std::vector<int>& map) {
    if (!is_group_hom(src.group(), dst.group(), map)) return false;
    for (int a = 0; a < src.order(); ++a)
        for (int b = 0; b < src.order(); ++b)
            if (map[src.s(a, b)] != dst.s(map[a], map[b])) return false;
    return true;
}

bool is_mla_iso(const MultLieAlg& src, const MultLieAlg& dst, const std::vector<int>& map) {
    if (src.order() != dst.order()) return false;
    if (!is_mla_hom(src, dst, map)) return false;
    std::vector<bool> hit(dst.order(), false);
    for (int v : map) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

}  // namespace mla
