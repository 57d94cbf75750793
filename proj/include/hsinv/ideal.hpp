/// Ideal-level invariants built on the basis engines: quotient monomial
/// bases, Milnor and Tjurina numbers, Krull dimension, Hilbert series.
#pragma once

#include <optional>
#include <vector>

#include "cache.hpp"
#include "groebner.hpp"
#include "mora.hpp"
#include "order.hpp"
#include "spectrum_poly.hpp"

namespace hsinv {

// Groebner basis (global order) or Mora standard basis (local order)
// together with its order and the generators it came from.
struct StandardBasis {
    std::vector<MPoly> generators;
    MonomialOrder order;
    std::vector<MPoly> source;

    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> l;
        l.reserve(generators.size());
        for (const auto& g : generators) l.push_back(leading_monomial(g, order));
        return l;
    }

    MPoly reduce(const MPoly& f) const {
        return order.is_global() ? normal_form(f, generators, order)
                                 : mora_normal_form(f, generators, order);
    }

    bool contains(const MPoly& f) const { return reduce(f).is_zero(); }
};

inline StandardBasis compute_standard_basis(const std::vector<MPoly>& gens,
                                            const MonomialOrder& ord) {
    // on-disk memo, active only when HSINV_CACHE_DIR is set; the cache
    // never changes results, mismatching entries are recomputed
    std::string key;
    if (!gens.empty() && std::getenv(cache_dir_env)) {
        key = cache_detail::basis_key(gens, ord, gens.front().ring());
        if (auto cached = cache_detail::load_basis(key, gens.front().ring()))
            return StandardBasis{std::move(*cached), ord, gens};
    }
    StandardBasis sb{ord.is_global() ? groebner_basis(gens, ord)
                                     : standard_basis_local(gens, ord),
                     ord, gens};
    if (!key.empty()) cache_detail::store_basis(key, sb.generators);
    return sb;
}

// Monomials outside the leading-term ideal. Finite exactly when the
// leading terms contain a pure power of every variable.
struct QuotientBasis {
    std::vector<Monomial> monomials;
    bool finite = false;

    std::optional<size_t> dimension() const {
        if (!finite) return std::nullopt;
        return monomials.size();
    }
};

inline QuotientBasis quotient_basis(const std::vector<Monomial>& leads, size_t nvars) {
    QuotientBasis qb;
    for (const auto& l : leads)
        if (total_degree(l) == 0) {  // unit ideal
            qb.finite = true;
            return qb;
        }
    std::vector<uint32_t> bound(nvars, 0);
    std::vector<bool> have(nvars, false);
    for (const auto& l : leads) {
        int support = -1;
        bool pure = true;
        for (size_t i = 0; i < nvars; ++i) {
            if (l[i] == 0) continue;
            if (support >= 0) { pure = false; break; }
            support = static_cast<int>(i);
        }
        if (!pure || support < 0) continue;
        size_t i = static_cast<size_t>(support);
        if (!have[i] || l[i] < bound[i]) { bound[i] = l[i]; have[i] = true; }
    }
    for (size_t i = 0; i < nvars; ++i)
        if (!have[i]) return qb;  // infinite

    qb.finite = true;
    Monomial cur(nvars, 0);
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == nvars) {
            for (const auto& l : leads)
                if (mono_divides(l, cur)) return;
            qb.monomials.push_back(cur);
            return;
        }
        for (uint32_t e = 0; e < bound[i]; ++e) {
            cur[i] = e;
            self(self, i + 1);
        }
        cur[i] = 0;
    };
    rec(rec, 0);
    return qb;
}

inline QuotientBasis quotient_basis(const StandardBasis& sb, size_t nvars) {
    return quotient_basis(sb.leading_monomials(), nvars);
}

inline MonomialOrder default_local_order(size_t nvars) {
    return MonomialOrder::local_wdegrevlex(WeightSystem::uniform(nvars));
}

inline MonomialOrder default_global_order(size_t nvars) {
    return MonomialOrder::global_wdegrevlex(WeightSystem::uniform(nvars));
}

// dim_Q O_{loc}/(df) at the origin; nullopt encodes +infinity
// (non-isolated critical locus through the origin).
inline std::optional<size_t> milnor_number(const MPoly& f) {
    size_t n = f.ring()->size();
    auto ord = default_local_order(n);
    auto sb = compute_standard_basis(partials(f), ord);
    return quotient_basis(sb, n).dimension();
}

// dim_Q O_{loc}/((df), f) at the origin.
inline std::optional<size_t> tjurina_number(const MPoly& f) {
    size_t n = f.ring()->size();
    auto ord = default_local_order(n);
    std::vector<MPoly> gens = partials(f);
    gens.push_back(f);
    auto sb = compute_standard_basis(gens, ord);
    return quotient_basis(sb, n).dimension();
}

// Dimension of V(gens) in affine n-space: maximal number of variables
// independent modulo the leading-term ideal. -1 for the unit ideal,
// n for the zero ideal.
inline int krull_dimension(const std::vector<MPoly>& gens, size_t nvars) {
    std::vector<MPoly> nonzero;
    for (const auto& g : gens)
        if (!g.is_zero()) nonzero.push_back(g);
    if (nonzero.empty()) return static_cast<int>(nvars);
    auto ord = default_global_order(nvars);
    auto sb = compute_standard_basis(nonzero, ord);
    auto leads = sb.leading_monomials();

    int best = -1;
    // n <= 8 in practice, subsets are cheap to enumerate.
    for (uint32_t mask = 0; mask < (1u << nvars); ++mask) {
        bool independent = true;
        for (const auto& l : leads) {
            bool inside = true;
            for (size_t i = 0; i < nvars && inside; ++i)
                if (l[i] > 0 && !(mask & (1u << i))) inside = false;
            if (inside) { independent = false; break; }
        }
        if (independent) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

// Multiset { valuation(m) + shift : m in qb }. With shift = sum of the
// weights this realizes v(x^k) = sum (k_i + 1) w_i on quotient bases.
inline SpectrumPoly hilbert_series(const QuotientBasis& qb, const WeightSystem& w,
                                   const Rat& shift) {
    if (!qb.finite) throw error("hilbert_series: infinite quotient");
    SpectrumPoly s;
    for (const auto& m : qb.monomials) s.add(w.valuation(m) + shift);
    return s;
}

}  // namespace hsinv
