#include "mla/construct.hpp"

#include <algorithm>
#include <string>

#include "mla/analysis.hpp"

namespace mla {

namespace {

std::string pair_name(const std::string& a, const std::string& b) {
    return "(" + a + "," + b + ")";
}

// Positions of carrier elements inside an ideal's ascending element list,
// -1 outside.
std::vector<int> ideal_positions(int order, const std::vector<int>& elems) {
    std::vector<int> pos(order, -1);
    for (int i = 0; i < static_cast<int>(elems.size()); ++i) pos[elems[i]] = i;
    return pos;
}

void require_central_ideal(const MultLieAlg& m, const Subset& ideal) {
    if (!is_ideal(m, ideal)) throw NotAnIdeal("subset fails the ideal test");
    Subset z = center(m.group());
    for (int a : ideal.elements())
        if (!z.contains(a)) throw NotCentral(a);
}

// Shared body of excision and idealization; with_ab keeps the (a★b) factor.
MultLieAlg pair_algebra(const MultLieAlg& m, const Subset& ideal, bool with_ab) {
    require_central_ideal(m, ideal);
    const auto elems = ideal.elements();
    const int n = m.order();
    const int k = static_cast<int>(elems.size());
    const int big = n * k;
    if (big > kMaxOrder) throw OrderTooLarge(big, kMaxOrder);
    const auto pos = ideal_positions(n, elems);

    std::vector<std::vector<int>> mul(big, std::vector<int>(big));
    std::vector<int> star(big * big);
    std::vector<std::string> names;
    names.reserve(big);

    for (int g = 0; g < n; ++g)
        for (int ap = 0; ap < k; ++ap) {
            const int a = elems[ap];
            names.push_back(pair_name(m.name_of(g), m.name_of(a)));
            const int left = g * k + ap;
            for (int h = 0; h < n; ++h)
                for (int bp = 0; bp < k; ++bp) {
                    const int b = elems[bp];
                    const int right = h * k + bp;
                    mul[left][right] = m.op(g, h) * k + pos[m.op(a, b)];
                    int second = m.op(m.s(g, b), m.s(a, h));
                    if (with_ab) second = m.op(second, m.s(a, b));
                    if (pos[second] < 0)
                        throw Error("internal: star value " + m.name_of(second) +
                                    " escaped the ideal");
                    star[left * big + right] = m.s(g, h) * k + pos[second];
                }
        }
    return check_axioms(validate_group(mul, std::move(names)), std::move(star));
}

}  // namespace

MultLieAlg direct_product_mla(const MultLieAlg& m1, const MultLieAlg& m2) {
    FiniteGroup g = direct_product_group(m1.group(), m2.group());
    const int n2 = m2.order(), big = g.order;
    std::vector<int> star(big * big);
    for (int a1 = 0; a1 < m1.order(); ++a1)
        for (int a2 = 0; a2 < n2; ++a2)
            for (int b1 = 0; b1 < m1.order(); ++b1)
                for (int b2 = 0; b2 < n2; ++b2)
                    star[(a1 * n2 + a2) * big + b1 * n2 + b2] =
                        m1.s(a1, b1) * n2 + m2.s(a2, b2);
    return check_axioms(std::move(g), std::move(star));
}

MultLieAlg excision(const MultLieAlg& m, const Subset& ideal) {
    return pair_algebra(m, ideal, true);
}

MultLieAlg idealization(const MultLieAlg& m, const Subset& ideal) {
    return pair_algebra(m, ideal, false);
}

ProjectionPair excision_maps(const MultLieAlg& m, const Subset& ideal) {
    MultLieAlg e = excision(m, ideal);
    const auto elems = ideal.elements();
    const int k = static_cast<int>(elems.size());
    const auto pos = ideal_positions(m.order(), elems);

    Morphism p;
    p.target_order = m.order();
    p.kind = MorphKind::MlaHom;
    p.map.resize(e.order());
    for (int g = 0; g < m.order(); ++g)
        for (int ap = 0; ap < k; ++ap) p.map[g * k + ap] = g;

    Morphism i;
    i.target_order = e.order();
    i.kind = MorphKind::MlaHom;
    i.map.resize(m.order());
    for (int g = 0; g < m.order(); ++g) i.map[g] = g * k + pos[m.identity()];

    if (!is_mla_hom(e, m, p.map)) throw VerificationFailed("projection is not an MLA-hom");
    if (!is_mla_hom(m, e, i.map)) throw VerificationFailed("inclusion is not an MLA-hom");
    for (int g = 0; g < m.order(); ++g)
        if (p.map[i.map[g]] != g)
            throw VerificationFailed("p(i(" + m.name_of(g) + ")) != " + m.name_of(g));
    return ProjectionPair{std::move(p), std::move(i)};
}

MultLieAlg iterated_excision_left(const MultLieAlg& m, const Subset& ideal, int n) {
    if (n < 1) throw InvalidArgument("iteration count must be at least 1");
    require_central_ideal(m, ideal);
    const int k = ideal.size();
    MultLieAlg e = excision(m, ideal);
    for (int step = 2; step <= n; ++step) {
        // The copy of I sitting over the previous identity.
        Subset embedded = Subset::empty(e.order());
        const int prev_identity = e.identity() / k;
        for (int j = 0; j < k; ++j) embedded.add(prev_identity * k + j);
        Subset z = center(e.group());
        if (!is_ideal(e, embedded) || !embedded.subset_of(z))
            throw CentralityLost("embedded ideal failed the recheck at step " +
                                 std::to_string(step));
        e = excision(e, embedded);
    }
    return e;
}

MultLieAlg iterated_excision_right(const MultLieAlg& m, const Subset& ideal, int n) {
    if (n < 1) throw InvalidArgument("iteration count must be at least 1");
    require_central_ideal(m, ideal);
    const auto elems = ideal.elements();
    const int k = static_cast<int>(elems.size());

    long long size = m.order();
    for (int i = 0; i < n && size <= kMaxOrder; ++i) size *= k;
    if (size > kMaxOrder) throw OrderTooLarge(static_cast<int>(size), kMaxOrder);
    const int big = static_cast<int>(size);
    const auto pos = ideal_positions(m.order(), elems);

    // index = g·kⁿ + Σ aᵢ·k^{n-i}; slots decode most-significant first.
    auto decode = [&](int idx, int& g, std::vector<int>& slots) {
        for (int i = n - 1; i >= 0; --i) {
            slots[i] = elems[idx % k];
            idx /= k;
        }
        g = idx;
    };

    std::vector<std::vector<int>> mul(big, std::vector<int>(big));
    std::vector<int> star(big * big);
    std::vector<std::string> names(big);

    std::vector<int> as(n), bs(n);
    for (int left = 0; left < big; ++left) {
        int g;
        decode(left, g, as);
        std::string nm = m.name_of(as[0]);
        for (int i = 1; i < n; ++i) nm += "," + m.name_of(as[i]);
        names[left] = pair_name(m.name_of(g), n == 1 ? nm : "(" + nm + ")");
        for (int right = 0; right < big; ++right) {
            int h;
            decode(right, h, bs);
            int mi = m.op(g, h), si = m.s(g, h);
            for (int i = 0; i < n; ++i) {
                mi = mi * k + pos[m.op(as[i], bs[i])];
                int second = m.op(m.op(m.s(g, bs[i]), m.s(as[i], h)), m.s(as[i], bs[i]));
                si = si * k + pos[second];
            }
            mul[left][right] = mi;
            star[left * big + right] = si;
        }
    }
    return check_axioms(validate_group(mul, std::move(names)), std::move(star));
}

Morphism canonical_iterated_iso(const MultLieAlg& m, const Subset& ideal, int n) {
    MultLieAlg left = iterated_excision_left(m, ideal, n);
    MultLieAlg right = iterated_excision_right(m, ideal, n);
    const auto elems = ideal.elements();
    const int k = static_cast<int>(elems.size());
    const auto pos = ideal_positions(m.order(), elems);

    Morphism phi;
    phi.target_order = right.order();
    phi.kind = MorphKind::MlaIso;
    phi.map.resize(left.order());
    std::vector<int> slots(n);
    for (int idx = 0; idx < left.order(); ++idx) {
        int rest = idx;
        for (int i = n - 1; i >= 0; --i) {
            slots[i] = elems[rest % k];
            rest /= k;
        }
        int g = rest;
        int out = g, prefix = m.identity();
        for (int i = 0; i < n; ++i) {
            prefix = m.op(prefix, slots[i]);
            out = out * k + pos[prefix];
        }
        phi.map[idx] = out;
    }

    if (is_mla_iso(left, right, phi.map)) return phi;
    auto found = find_isomorphism(left, right);
    if (!found)
        throw VerificationFailed("no isomorphism between nested and flat iterations");
    return *found;
}

FiberProduct fiber_product(const MultLieAlg& m1, const MultLieAlg& m2, const MultLieAlg& h,
                           const Morphism& phi1, const Morphism& phi2) {
    if (phi1.source_order() != m1.order() || phi1.target_order != h.order() ||
        !is_mla_hom(m1, h, phi1.map))
        throw NotAHomomorphism("left");
    if (phi2.source_order() != m2.order() || phi2.target_order != h.order() ||
        !is_mla_hom(m2, h, phi2.map))
        throw NotAHomomorphism("right");

    MultLieAlg prod = direct_product_mla(m1, m2);
    Subset s = Subset::empty(prod.order());
    std::vector<int> carrier;
    for (int i = 0; i < m1.order(); ++i)
        for (int j = 0; j < m2.order(); ++j)
            if (phi1(i) == phi2(j)) {
                s.add(i * m2.order() + j);
                carrier.push_back(i * m2.order() + j);
            }
    return FiberProduct{restrict_algebra(prod, s), std::move(carrier)};
}

ExcisionFiberIsos excision_fiber_isos(const MultLieAlg& m, const Subset& ideal) {
    MultLieAlg e = excision(m, ideal);
    QuotientMla q = quotient_mla(m, ideal);
    const int n = m.order();
    const int qn = q.algebra.order();
    const auto elems = ideal.elements();
    const int k = static_cast<int>(elems.size());
    const auto pos = ideal_positions(n, elems);

    auto verify_onto_e = [&](const MultLieAlg& src, std::vector<int> map, const char* which) {
        Morphism f;
        f.map = std::move(map);
        f.target_order = e.order();
        f.kind = MorphKind::MlaIso;
        if (!is_mla_iso(src, e, f.map))
            throw VerificationFailed(std::string(which) +
                                     " fiber map failed the isomorphism check");
        return f;
    };

    // G ×_{G/I} G on pairs (g, ga); (g,ga) -> (g,a).
    FiberProduct f1 = fiber_product(m, m, q.algebra, q.projection, q.projection);
    std::vector<int> map1(f1.carrier.size());
    for (std::size_t c = 0; c < f1.carrier.size(); ++c) {
        int g = f1.carrier[c] / n, g2 = f1.carrier[c] % n;
        map1[c] = g * k + pos[m.op(m.inv(g), g2)];
    }
    Morphism h1 = verify_onto_e(f1.algebra, std::move(map1), "first");

    // (G×G) ×_{G×G/I} G on pairs ((g,gb),g); ((g,gb),g) -> (g,b).
    MultLieAlg gg = direct_product_mla(m, m);
    MultLieAlg gq = direct_product_mla(m, q.algebra);
    Morphism psi;  // (g,g') -> (g, g'I)
    psi.target_order = gq.order();
    psi.kind = MorphKind::MlaHom;
    psi.map.resize(gg.order());
    for (int g = 0; g < n; ++g)
        for (int g2 = 0; g2 < n; ++g2) psi.map[g * n + g2] = g * qn + q.projection(g2);
    Morphism diag1;  // g -> (g, gI)
    diag1.target_order = gq.order();
    diag1.kind = MorphKind::MlaHom;
    diag1.map.resize(n);
    for (int g = 0; g < n; ++g) diag1.map[g] = g * qn + q.projection(g);
    FiberProduct f2 = fiber_product(gg, m, gq, psi, diag1);
    std::vector<int> map2(f2.carrier.size());
    for (std::size_t c = 0; c < f2.carrier.size(); ++c) {
        int pair = f2.carrier[c] / n;
        int g = pair / n, g2 = pair % n;
        map2[c] = g * k + pos[m.op(m.inv(g), g2)];
    }
    Morphism h2 = verify_onto_e(f2.algebra, std::move(map2), "second");

    // (G×G) ×_{G/I×G/I} G/I on pairs ((g,gc),gI); ((g,gc),gI) -> (g,c).
    MultLieAlg qq = direct_product_mla(q.algebra, q.algebra);
    Morphism nu;  // (g,g') -> (gI, g'I)
    nu.target_order = qq.order();
    nu.kind = MorphKind::MlaHom;
    nu.map.resize(gg.order());
    for (int g = 0; g < n; ++g)
        for (int g2 = 0; g2 < n; ++g2)
            nu.map[g * n + g2] = q.projection(g) * qn + q.projection(g2);
    Morphism diag2;  // gI -> (gI, gI)
    diag2.target_order = qq.order();
    diag2.kind = MorphKind::MlaHom;
    diag2.map.resize(qn);
    for (int c = 0; c < qn; ++c) diag2.map[c] = c * qn + c;
    FiberProduct f3 = fiber_product(gg, q.algebra, qq, nu, diag2);
    std::vector<int> map3(f3.carrier.size());
    for (std::size_t c = 0; c < f3.carrier.size(); ++c) {
        int pair = f3.carrier[c] / qn;
        int g = pair / n, g2 = pair % n;
        map3[c] = g * k + pos[m.op(m.inv(g), g2)];
    }
    Morphism h3 = verify_onto_e(f3.algebra, std::move(map3), "third");

    return ExcisionFiberIsos{{std::move(f1), std::move(f2), std::move(f3)},
                             {std::move(h1), std::move(h2), std::move(h3)}};
}

}  // namespace mla
