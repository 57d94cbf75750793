/// Mora's tangent-cone algorithm: weak normal forms and standard bases
/// for local monomial orders. A weak normal form r of f satisfies
/// u*f = sum q_i b_i + r with u a unit at the origin; against a standard
/// basis, r = 0 exactly when f lies in the ideal inside the local ring.
#pragma once

#include <algorithm>
#include <list>
#include <set>
#include <vector>

#include "order.hpp"
#include "poly.hpp"

namespace hsinv {

namespace detail {

// Ecart: total-degree spread between a polynomial and its lead. Drives
// the termination argument of Mora's reduction.
inline int ecart(const MPoly& f, const MonomialOrder& ord) {
    return f.degree() - total_degree(leading_monomial(f, ord));
}

}  // namespace detail

inline MPoly s_polynomial_local(const MPoly& f, const MPoly& g, const MonomialOrder& ord) {
    const Monomial& lf = leading_monomial(f, ord);
    const Monomial& lg = leading_monomial(g, ord);
    Monomial l = mono_lcm(lf, lg);
    MPoly a = f.mono_shifted(mono_div(l, lf)).scaled(Rat(1) / f.terms().at(lf));
    MPoly b = g.mono_shifted(mono_div(l, lg)).scaled(Rat(1) / g.terms().at(lg));
    return a - b;
}

inline MPoly mora_normal_form(const MPoly& f, const std::vector<MPoly>& basis,
                              const MonomialOrder& ord) {
    if (!ord.is_local()) throw error("mora_normal_form: local order required");
    std::vector<const MPoly*> reducers;
    std::list<MPoly> owned;  // intermediate results added by the ecart rule
    for (const MPoly& g : basis)
        if (!g.is_zero()) reducers.push_back(&g);

    MPoly h = f;
    while (!h.is_zero()) {
        const Monomial& lm = leading_monomial(h, ord);
        int eh = detail::ecart(h, ord);
        const MPoly* pick = nullptr;
        int pick_ecart = 0;
        for (const MPoly* g : reducers) {
            if (!mono_divides(leading_monomial(*g, ord), lm)) continue;
            int eg = detail::ecart(*g, ord);
            if (!pick || eg < pick_ecart) { pick = g; pick_ecart = eg; }
        }
        if (!pick) return h;
        if (pick_ecart > eh) {
            owned.push_back(h);  // may be used as a reducer later
            reducers.push_back(&owned.back());
        }
        const Monomial& lg = leading_monomial(*pick, ord);
        Rat factor = h.terms().at(lm) / pick->terms().at(lg);
        h -= pick->mono_shifted(mono_div(lm, lg)).scaled(factor);
    }
    return h;
}

// Standard basis of <gens> for a local order (Buchberger loop with Mora
// reduction; only the chain criterion is applied, the product criterion
// is not valid for local orders). The result is monic with pairwise
// non-divisible leading monomials; tails are not reduced.
inline std::vector<MPoly> standard_basis_local(const std::vector<MPoly>& gens,
                                               const MonomialOrder& ord) {
    if (!ord.is_local()) throw error("standard_basis_local: local order required");

    std::vector<MPoly> basis;
    for (const MPoly& g : gens)
        if (!g.is_zero()) basis.push_back(make_monic(g, ord));
    if (basis.empty()) return basis;

    struct Pair {
        size_t i, j;
        Monomial lcm;
    };
    std::vector<Pair> queue;
    auto push_pairs = [&](size_t k) {
        for (size_t i = 0; i < k; ++i)
            queue.push_back({i, k,
                             mono_lcm(leading_monomial(basis[i], ord),
                                      leading_monomial(basis[k], ord))});
    };
    for (size_t k = 0; k < basis.size(); ++k) push_pairs(k);

    std::set<std::pair<size_t, size_t>> done;
    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), [&](const Pair& a, const Pair& b) {
            int c = ord.cmp(a.lcm, b.lcm);
            if (c != 0) return c > 0;  // local: larger in order = smaller valuation first
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        });
        Pair p = *it;
        queue.erase(it);
        done.insert({p.i, p.j});

        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!mono_divides(leading_monomial(basis[k], ord), p.lcm)) continue;
            auto key_ik = std::minmax(p.i, k);
            auto key_jk = std::minmax(p.j, k);
            if (done.count({key_ik.first, key_ik.second}) &&
                done.count({key_jk.first, key_jk.second}))
                chained = true;
        }
        if (chained) continue;

        MPoly s = s_polynomial_local(basis[p.i], basis[p.j], ord);
        MPoly r = mora_normal_form(s, basis, ord);
        if (r.is_zero()) continue;
        basis.push_back(make_monic(r, ord));
        push_pairs(basis.size() - 1);
    }

    // Minimalize the leading-term set.
    std::vector<MPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        const Monomial& li = leading_monomial(basis[i], ord);
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& lj = leading_monomial(basis[j], ord);
            if (mono_divides(lj, li) && (li != lj || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::sort(minimal.begin(), minimal.end(), [&](const MPoly& a, const MPoly& b) {
        return ord.cmp(leading_monomial(a, ord), leading_monomial(b, ord)) > 0;
    });
    return minimal;
}

}  // namespace hsinv
