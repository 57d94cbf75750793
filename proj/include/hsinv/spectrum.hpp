/// Singularity spectra and Tjurina subspectra of (semi-)weighted-
/// homogeneous isolated hypersurface singularities, their extremal
/// invariants, and Thom-Sebastiani products.
///
/// The rational V-filtration is realized on standard monomial bases by
/// the weighted valuation v(x^k) = sum (k_i + 1) w_i. For weighted-
/// homogeneous f this computes the spectrum exactly; for a declared
/// semi-weighted-homogeneous f the spectrum is that of the weight-1
/// leading part (the two are mu-constant deformations of each other),
/// while the Tjurina subspectrum uses the leading weight system on the
/// Tjurina algebra of f itself and is flagged as a model in reports.
#pragma once

#include <algorithm>
#include <vector>

#include "checks.hpp"
#include "fixtures.hpp"
#include "ideal.hpp"
#include "order.hpp"
#include "spectrum_poly.hpp"

namespace hsinv {

// Splits a declared semi-weighted-homogeneous polynomial into its
// weight-1 part and the rest; rejects inputs that do not qualify.
struct SemiQhParts {
    MPoly leading;  // terms of valuation exactly 1
    MPoly higher;   // terms of valuation > 1
};

inline SemiQhParts split_semi_qh(const MPoly& f, const WeightSystem& w) {
    WeightSystem nw = w.normalized();
    SemiQhParts parts{MPoly(f.ring()), MPoly(f.ring())};
    for (const auto& [m, c] : f.terms()) {
        Rat v = nw.valuation(m);
        if (v == Rat(1)) parts.leading.add_term(m, c);
        else if (v > Rat(1)) parts.higher.add_term(m, c);
        else
            throw error("semi-quasi-homogeneous input has a term of valuation < 1: " +
                        MPoly::term(f.ring(), m, c).str());
    }
    if (parts.leading.is_zero())
        throw error("semi-quasi-homogeneous input has no weight-1 part");
    return parts;
}

// Spectrum multiset of f: valuations (shifted by the weight sum) of the
// standard monomial basis of the Milnor algebra. Total multiplicity is
// the Milnor number.
inline SpectrumPoly spectrum_qh(const MPoly& f, const WeightSystem& w, bool semi_qh = false) {
    WeightSystem nw = w.normalized();
    MPoly base = f;
    if (!is_quasi_homogeneous(f, nw)) {
        if (!semi_qh)
            throw error("spectrum: input is not quasi-homogeneous for the given weights "
                        "(declare it semi-quasi-homogeneous to use the leading part)");
        SemiQhParts parts = split_semi_qh(f, nw);
        base = parts.leading;
    }
    auto ord = MonomialOrder::local_wdegrevlex(nw);
    auto sb = compute_standard_basis(partials(base), ord);
    auto qb = quotient_basis(sb, f.ring()->size());
    if (!qb.finite)
        throw error("spectrum: Milnor number is not finite (non-isolated singularity)");
    return hilbert_series(qb, nw, nw.weight_sum());
}

// Tjurina subspectrum: valuations of the standard monomial basis of the
// Tjurina algebra of f. Equals the spectrum for quasi-homogeneous f.
inline SpectrumPoly tjurina_subspectrum(const MPoly& f, const WeightSystem& w,
                                        bool semi_qh = false) {
    WeightSystem nw = w.normalized();
    if (!is_quasi_homogeneous(f, nw)) {
        if (!semi_qh)
            throw error("tjurina subspectrum: input is not quasi-homogeneous for the given "
                        "weights");
        split_semi_qh(f, nw);  // validates the declaration
    }
    auto ord = MonomialOrder::local_wdegrevlex(nw);
    std::vector<MPoly> gens = partials(f);
    gens.push_back(f);
    auto sb = compute_standard_basis(gens, ord);
    auto qb = quotient_basis(sb, f.ring()->size());
    if (!qb.finite)
        throw error("tjurina subspectrum: Tjurina number is not finite");
    return hilbert_series(qb, nw, nw.weight_sum());
}

struct AlphaInvariants {
    ExtRat alpha_tilde;    // minimal spectral number
    ExtRat alpha_min_int;  // minimal integral spectral number, +inf if none
    Rat alpha_max_tj;      // maximal Tjurina subspectral number
};

inline AlphaInvariants alpha_invariants(const SpectrumPoly& sp, const SpectrumPoly& sptj) {
    if (sp.empty()) throw error("alpha_invariants: empty spectrum");
    if (sptj.empty()) throw error("alpha_invariants: empty Tjurina subspectrum");
    return AlphaInvariants{ExtRat(sp.min()), sp.min_integral(), sptj.max()};
}

// Multiset of pairwise sums; the spectrum of a join f(x) + g(y) in
// disjoint variables is the sumset of the factor spectra.
inline SpectrumPoly thom_sebastiani(const SpectrumPoly& a, const SpectrumPoly& b) {
    return a * b;
}

// Spectral symmetry about n/2 in n variables.
inline bool symmetry_check(const SpectrumPoly& sp, long n) {
    return sp.symmetric_about(Rat(n));
}

// Number of spectral numbers in (a, a+1], with multiplicity.
inline unsigned long semicontinuity_count(const SpectrumPoly& sp, const Rat& a) {
    return sp.count_in_unit_interval(a);
}

// Does some bijective renumbering pair each a in `upper` with a b in
// `lower` such that a - b is a non-negative integer? (Bipartite matching
// over the multisets, multiplicities respected.)
inline bool integral_shift_matching(const SpectrumPoly& upper, const SpectrumPoly& lower) {
    std::vector<Rat> as, bs;
    for (const auto& [a, m] : upper.entries())
        for (unsigned long i = 0; i < m; ++i) as.push_back(a);
    for (const auto& [b, m] : lower.entries())
        for (unsigned long i = 0; i < m; ++i) bs.push_back(b);
    if (as.size() != bs.size()) return false;
    size_t n = as.size();

    std::vector<std::vector<size_t>> adj(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rat d = as[i] - bs[j];
            if (d.sign() >= 0 && d.is_integer()) adj[i].push_back(j);
        }
    std::vector<int> match_of(n, -1);
    std::vector<bool> seen;
    auto augment = [&](auto&& self, size_t i) -> bool {
        for (size_t j : adj[i]) {
            if (seen[j]) continue;
            seen[j] = true;
            if (match_of[j] < 0 || self(self, static_cast<size_t>(match_of[j]))) {
                match_of[j] = static_cast<int>(i);
                return true;
            }
        }
        return false;
    };
    for (size_t i = 0; i < n; ++i) {
        seen.assign(n, false);
        if (!augment(augment, i)) return false;
    }
    return true;
}

// Checks a bundled root-multiset fixture: the spectral numbers must
// dominate the beta multiset by non-negative integer shifts under some
// renumbering, and the joined extrema must reproduce the frozen values.
inline std::vector<CheckResult> beta_fixture_check(const std::string& name) {
    const BetaFixture& fx = beta_fixture_by_name(name);
    std::vector<CheckResult> out;

    bool matched = integral_shift_matching(fx.alpha, fx.beta);
    out.push_back(matched
                      ? CheckResult::pass("integral-shift", "alpha_i - beta_i in Z>=0 after renumbering",
                                          "matched " + std::to_string(fx.alpha.total()) + " pairs")
                      : CheckResult::fail("integral-shift", "alpha_i - beta_i in Z>=0 after renumbering",
                                          "no perfect matching"));

    if (!fx.join_partner.empty()) {
        const BetaFixture& partner = beta_fixture_by_name(fx.join_partner);
        SpectrumPoly ja = fx.alpha * partner.alpha;
        SpectrumPoly jb = fx.beta * partner.beta;
        ExtRat a_int = ja.min_integral();
        ExtRat b_int = jb.min_integral();
        bool ok_a = a_int.str() == fx.joined_alpha_min_int;
        bool ok_b = b_int.str() == fx.joined_beta_min_int;
        std::string witness = "joined alpha min integral = " + a_int.str() +
                              ", joined beta min integral = " + b_int.str();
        out.push_back(ok_a && ok_b
                          ? CheckResult::pass("joined-extrema",
                                              "minimal integral members of the joined multisets",
                                              witness)
                          : CheckResult::fail("joined-extrema",
                                              "minimal integral members of the joined multisets",
                                              witness));
    }
    return out;
}

}  // namespace hsinv
