// Independent brute-force oracles used to cross-check the basis engines.
// Everything here is plain truncated linear algebra over monomial bases;
// none of it touches the Groebner/Mora code paths it verifies.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hsinv/matrix.hpp"
#include "hsinv/order.hpp"
#include "hsinv/poly.hpp"

namespace oracle {

using namespace hsinv;

// All monomials in n variables of total degree < bound, graded order.
inline std::vector<Monomial> monomials_below(size_t n, int bound) {
    std::vector<Monomial> out;
    Monomial cur(n, 0);
    auto rec = [&](auto&& self, size_t i, int left) -> void {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[i] = static_cast<uint32_t>(e);
            self(self, i + 1, left - e);
        }
        cur[i] = 0;
    };
    rec(rec, 0, bound - 1);
    return out;
}

inline int order_at_origin(const MPoly& f) {  // minimal total degree of a term
    int o = -1;
    for (const auto& [m, c] : f.terms()) {
        int d = total_degree(m);
        if (o < 0 || d < o) o = d;
    }
    return o;
}

// Sparse coefficient row of f over an indexed monomial basis; terms
// outside the basis are dropped (reduction mod m^N).
inline std::vector<std::pair<size_t, Rat>> sparse_row(const MPoly& f,
                                                      const std::map<Monomial, size_t>& index) {
    std::vector<std::pair<size_t, Rat>> row;
    for (const auto& [m, c] : f.terms()) {
        auto it = index.find(m);
        if (it != index.end()) row.emplace_back(it->second, c);
    }
    return row;
}

// Rows spanning the image of the ideal <gens> inside Q[x]/m^N.
inline SparseRows ideal_span_mod_power(const std::vector<MPoly>& gens, size_t n, int N,
                                       const std::map<Monomial, size_t>& index) {
    SparseRows rows;
    rows.ncols = index.size();
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        int ord = order_at_origin(g);
        for (const auto& m : monomials_below(n, N - ord))
            rows.rows.push_back(sparse_row(g.mono_shifted(m), index));
    }
    return rows;
}

inline std::map<Monomial, size_t> index_of(const std::vector<Monomial>& basis) {
    std::map<Monomial, size_t> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    return index;
}

// dim Q[x]/(<gens> + m^N).
inline size_t quotient_mod_power_dim(const std::vector<MPoly>& gens, size_t n, int N) {
    auto basis = monomials_below(n, N);
    auto index = index_of(basis);
    auto rows = ideal_span_mod_power(gens, n, N, index);
    return basis.size() - rows.rank();
}

// Local quotient dimension at the origin with a stabilization
// certificate: dim Q[x]/(I + m^N) is nondecreasing in N, and two equal
// consecutive values pin the local dimension exactly. nullopt = no
// stabilization up to the cap (in particular every infinite quotient).
struct LocalDim {
    std::optional<size_t> dim;
    int stabilized_at = -1;
};

inline LocalDim local_quotient_dim(const std::vector<MPoly>& gens, size_t n, int cap = 24) {
    size_t prev = 0;
    bool have_prev = false;
    for (int N = 1; N <= cap; ++N) {
        size_t d = quotient_mod_power_dim(gens, n, N);
        if (have_prev && d == prev) return {d, N};
        prev = d;
        have_prev = true;
    }
    return {std::nullopt, -1};
}

// Membership in the localized ideal at the origin, decided inside
// Q[x]/m^N for stabilized N.
inline bool local_membership(const MPoly& g, const std::vector<MPoly>& gens, size_t n,
                             int cap = 24) {
    LocalDim ld = local_quotient_dim(gens, n, cap);
    if (!ld.dim) throw error("oracle: no stabilization certificate up to cap");
    int N = ld.stabilized_at;
    auto basis = monomials_below(n, N);
    auto index = index_of(basis);
    auto rows = ideal_span_mod_power(gens, n, N, index);
    size_t base_rank = rows.rank();
    rows.rows.push_back(sparse_row(g, index));
    return rows.rank() == base_rank;
}

// Graded dimensions of the local quotient under the filtration by
// weighted valuation (quotient filtration), per valuation level.
inline std::map<Rat, size_t> local_graded_dims(const std::vector<MPoly>& gens, size_t n,
                                               const WeightSystem& w, int cap = 24) {
    LocalDim ld = local_quotient_dim(gens, n, cap);
    if (!ld.dim) throw error("oracle: no stabilization certificate up to cap");
    int N = ld.stabilized_at;
    auto basis = monomials_below(n, N);
    auto index = index_of(basis);
    auto span = ideal_span_mod_power(gens, n, N, index);
    size_t span_rank = span.rank();

    std::vector<Rat> levels;
    for (const auto& m : basis) levels.push_back(w.valuation(m));
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    // dim of the image of {val >= a} in the quotient, for each level a
    auto filtered_dim = [&](const Rat& a) -> size_t {
        SparseRows rows = span;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (w.valuation(basis[i]) < a) continue;
            rows.rows.push_back({{i, Rat(1)}});
        }
        return rows.rank() - span_rank;
    };

    std::map<Rat, size_t> out;
    for (size_t i = 0; i < levels.size(); ++i) {
        size_t here = filtered_dim(levels[i]);
        size_t above = (i + 1 < levels.size()) ? filtered_dim(levels[i + 1]) : 0;
        if (here > above) out[levels[i]] = here - above;
    }
    return out;
}

// Global membership: g in <gens> as polynomial ideals, searching for a
// representation with cofactor products of total degree <= D, doubling
// up to the cap. A positive answer is definitive; a negative answer is
// definitive only up to the cap.
inline bool global_membership(const MPoly& g, const std::vector<MPoly>& gens, size_t n,
                              int start = 6, int cap = 12) {
    for (int D = start; D <= cap; D *= 2) {
        int bound = std::max(D, g.degree()) + 1;
        auto basis = monomials_below(n, bound);
        auto index = index_of(basis);
        SparseRows rows;
        rows.ncols = basis.size();
        for (const auto& gi : gens) {
            if (gi.is_zero()) continue;
            int room = D - gi.degree();
            if (room < 0) continue;
            for (const auto& m : monomials_below(n, room + 1))
                rows.rows.push_back(sparse_row(gi.mono_shifted(m), index));
        }
        size_t base_rank = rows.rank();
        rows.rows.push_back(sparse_row(g, index));
        if (rows.rank() == base_rank) return true;
    }
    return false;
}

}  // namespace oracle
