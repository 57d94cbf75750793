/// Weight systems, weighted valuations, and monomial orders.
#pragma once

#include <vector>

#include "poly.hpp"
#include "rational.hpp"

namespace hsinv {

// Positive rational weight per variable. target is the weighted degree of
// the polynomial the system was constructed for (1 after normalization).
struct WeightSystem {
    std::vector<Rat> w;
    Rat target = Rat(1);

    WeightSystem() = default;
    WeightSystem(std::vector<Rat> weights, Rat tgt = Rat(1))
        : w(std::move(weights)), target(std::move(tgt)) {
        for (const auto& wi : w)
            if (wi.sign() <= 0) throw error("WeightSystem: weights must be positive");
        if (target.sign() <= 0) throw error("WeightSystem: target degree must be positive");
    }

    static WeightSystem uniform(size_t n, Rat wi = Rat(1)) {
        return WeightSystem(std::vector<Rat>(n, wi), Rat(1));
    }

    size_t size() const { return w.size(); }

    Rat valuation(const Monomial& m) const {
        Rat v(0);
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i]) v += w[i] * Rat(static_cast<long>(m[i]));
        return v;
    }

    Rat weight_sum() const {
        Rat s(0);
        for (const auto& wi : w) s += wi;
        return s;
    }

    // Same weights rescaled so the target degree becomes 1.
    WeightSystem normalized() const {
        std::vector<Rat> nw;
        nw.reserve(w.size());
        for (const auto& wi : w) nw.push_back(wi / target);
        return WeightSystem(std::move(nw), Rat(1));
    }
};

// Minimum weighted valuation over the terms of f; +inf for f = 0.
inline ExtRat weighted_valuation(const MPoly& f, const WeightSystem& w) {
    if (f.is_zero()) return ExtRat::infinity();
    bool first = true;
    Rat best(0);
    for (const auto& [m, c] : f.terms()) {
        Rat v = w.valuation(m);
        if (first || v < best) { best = v; first = false; }
    }
    return ExtRat(best);
}

// True iff every term of f has weighted valuation equal to w.target.
inline bool is_quasi_homogeneous(const MPoly& f, const WeightSystem& w) {
    for (const auto& [m, c] : f.terms())
        if (w.valuation(m) != w.target) return false;
    return true;
}

// For quasi-homogeneous f of weighted degree 1 this checks the Euler
// relation f = sum_i w_i x_i df/dx_i exactly.
inline bool euler_identity_check(const MPoly& f, const WeightSystem& w) {
    WeightSystem nw = w.normalized();
    if (!is_quasi_homogeneous(f, nw))
        throw error("euler_identity_check: input is not quasi-homogeneous for these weights");
    MPoly acc = MPoly::zero(f.ring());
    for (size_t i = 0; i < f.ring()->size(); ++i) {
        MPoly xi = MPoly::variable(f.ring(), i);
        acc += (xi * partial(f, i)).scaled(nw.w[i]);
    }
    return acc == f;
}

struct MonomialOrder {
    enum class Kind {
        GlobalWeightedDegRevLex,  // well-order, degree-compatible
        LocalWeightedDegRevLex,   // 1 is the maximal monomial
    };

    Kind kind;
    WeightSystem weights;

    bool is_global() const { return kind == Kind::GlobalWeightedDegRevLex; }
    bool is_local() const { return kind == Kind::LocalWeightedDegRevLex; }

    static MonomialOrder global_wdegrevlex(WeightSystem w) {
        return MonomialOrder{Kind::GlobalWeightedDegRevLex, std::move(w)};
    }
    static MonomialOrder local_wdegrevlex(WeightSystem w) {
        return MonomialOrder{Kind::LocalWeightedDegRevLex, std::move(w)};
    }

    // Fixed reverse-lexicographic tiebreak: a > b when the last nonzero
    // entry of a - b is negative.
    static int revlex_tiebreak(const Monomial& a, const Monomial& b) {
        for (size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        }
        return 0;
    }

    // +1 if a > b, 0 if equal, -1 if a < b.
    int cmp(const Monomial& a, const Monomial& b) const {
        Rat va = weights.valuation(a), vb = weights.valuation(b);
        if (va != vb) {
            bool bigger = is_global() ? (va > vb) : (va < vb);
            return bigger ? 1 : -1;
        }
        return revlex_tiebreak(a, b);
    }

    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }
};

// Leading monomial of f with respect to an order; f must be nonzero.
inline const Monomial& leading_monomial(const MPoly& f, const MonomialOrder& ord) {
    if (f.is_zero()) throw error("leading_monomial: zero polynomial");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : f.terms())
        if (!best || ord.greater(m, *best)) best = &m;
    return *best;
}

inline Rat leading_coefficient(const MPoly& f, const MonomialOrder& ord) {
    return f.terms().at(leading_monomial(f, ord));
}

inline MPoly make_monic(const MPoly& f, const MonomialOrder& ord) {
    if (f.is_zero()) return f;
    Rat lc = leading_coefficient(f, ord);
    return f.scaled(Rat(1) / lc);
}

// All monomials m in n variables with weighted valuation <= bound,
// in deterministic lexicographic DFS order.
inline std::vector<Monomial> monomials_val_at_most(size_t n, const WeightSystem& w,
                                                   const Rat& bound) {
    std::vector<Monomial> out;
    if (bound.sign() < 0) return out;
    Monomial cur(n, 0);
    // DFS over positions; weights are positive so recursion is finite.
    auto rec = [&](auto&& self, size_t i, Rat remaining) -> void {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        Rat left = remaining;
        uint32_t e = 0;
        while (left.sign() >= 0) {
            cur[i] = e;
            self(self, i + 1, left);
            ++e;
            left -= w.w[i];
        }
        cur[i] = 0;
    };
    rec(rec, 0, bound);
    return out;
}

inline std::vector<Monomial> monomials_val_exact(size_t n, const WeightSystem& w,
                                                 const Rat& value) {
    std::vector<Monomial> out;
    for (auto& m : monomials_val_at_most(n, w, value))
        if (w.valuation(m) == value) out.push_back(std::move(m));
    return out;
}

}  // namespace hsinv
