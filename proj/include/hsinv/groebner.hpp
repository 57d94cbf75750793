/// Buchberger's algorithm for reduced Groebner bases over global
/// weighted degree orders, with full normal forms.
#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "order.hpp"
#include "poly.hpp"

namespace hsinv {

// Full normal form: divides every term of f by the basis, scanning the
// divisors in a fixed order. Deterministic for a fixed basis order.
inline MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis,
                         const MonomialOrder& ord) {
    MPoly h = f;
    MPoly r = MPoly::zero(f.ring());
    while (!h.is_zero()) {
        const Monomial& lm = leading_monomial(h, ord);
        Rat lc = h.terms().at(lm);
        bool reduced = false;
        for (const MPoly& g : basis) {
            if (g.is_zero()) continue;
            const Monomial& lmg = leading_monomial(g, ord);
            if (!mono_divides(lmg, lm)) continue;
            Rat factor = lc / g.terms().at(lmg);
            h -= g.mono_shifted(mono_div(lm, lmg)).scaled(factor);
            reduced = true;
            break;
        }
        if (!reduced) {
            r.add_term(lm, lc);
            MPoly t = MPoly::term(f.ring(), lm, lc);
            h -= t;
        }
    }
    return r;
}

inline MPoly s_polynomial(const MPoly& f, const MPoly& g, const MonomialOrder& ord) {
    const Monomial& lf = leading_monomial(f, ord);
    const Monomial& lg = leading_monomial(g, ord);
    Monomial l = mono_lcm(lf, lg);
    MPoly a = f.mono_shifted(mono_div(l, lf)).scaled(Rat(1) / f.terms().at(lf));
    MPoly b = g.mono_shifted(mono_div(l, lg)).scaled(Rat(1) / g.terms().at(lg));
    return a - b;
}

namespace detail {

struct Pair {
    size_t i, j;
    Monomial lcm;
};

// Normal selection: smallest lcm in the term order first; ties resolved
// by generator indices so runs are reproducible.
inline bool pair_before(const Pair& a, const Pair& b, const MonomialOrder& ord) {
    int c = ord.cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

}  // namespace detail

// Reduced Groebner basis of <gens>. Requires a global order; the result
// is monic, interreduced, and sorted by leading monomial.
inline std::vector<MPoly> groebner_basis(const std::vector<MPoly>& gens,
                                         const MonomialOrder& ord) {
    if (!ord.is_global()) throw error("groebner_basis: global order required");

    std::vector<MPoly> basis;
    for (const MPoly& g : gens)
        if (!g.is_zero()) basis.push_back(make_monic(g, ord));
    if (basis.empty()) return basis;

    std::vector<detail::Pair> queue;
    auto push_pairs = [&](size_t k) {
        for (size_t i = 0; i < k; ++i) {
            detail::Pair p{i, k,
                           mono_lcm(leading_monomial(basis[i], ord),
                                    leading_monomial(basis[k], ord))};
            queue.push_back(std::move(p));
        }
    };
    for (size_t k = 0; k < basis.size(); ++k) push_pairs(k);

    std::set<std::pair<size_t, size_t>> done;
    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(),
                                   [&](const detail::Pair& a, const detail::Pair& b) {
                                       return detail::pair_before(a, b, ord);
                                   });
        detail::Pair p = *it;
        queue.erase(it);
        done.insert({p.i, p.j});

        const Monomial& li = leading_monomial(basis[p.i], ord);
        const Monomial& lj = leading_monomial(basis[p.j], ord);
        if (mono_coprime(li, lj)) continue;  // product criterion
        // Chain criterion: some k with LM(k) | lcm and both pairs done.
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

        MPoly s = normal_form(s_polynomial(basis[p.i], basis[p.j], ord), basis, ord);
        if (s.is_zero()) continue;
        basis.push_back(make_monic(s, ord));
        push_pairs(basis.size() - 1);
    }

    // Minimalize: drop elements whose lead is divisible by another lead.
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

    // Tail-reduce each element against the others.
    std::vector<MPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MPoly r = normal_form(minimal[i], others, ord);
        reduced.push_back(make_monic(r, ord));
    }

    std::sort(reduced.begin(), reduced.end(), [&](const MPoly& a, const MPoly& b) {
        return ord.cmp(leading_monomial(a, ord), leading_monomial(b, ord)) < 0;
    });
    return reduced;
}

}  // namespace hsinv
