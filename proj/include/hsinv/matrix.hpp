/// Exact linear algebra over Q: rank via fraction-free (Bareiss)
/// elimination on an integer-scaled copy, kernel bases and solving via
/// rational Gauss-Jordan. Rank extraction first peels structural
/// singleton rows/columns, which resolves most of the rank of the very
/// sparse monomial-map matrices this library produces.
#pragma once

#include <gmpxx.h>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace hsinv {

using QVec = std::vector<Rat>;

namespace detail {

// One-step fraction-free elimination; all divisions are exact.
inline size_t bareiss_rank(std::vector<std::vector<mpz_class>>& m) {
    if (m.empty()) return 0;
    size_t nrows = m.size(), ncols = m[0].size();
    mpz_class prev(1);
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < nrows; ++c) {
        size_t piv = nrows;
        for (size_t i = r; i < nrows; ++i)
            if (sgn(m[i][c]) != 0) { piv = i; break; }
        if (piv == nrows) continue;
        std::swap(m[piv], m[r]);
        for (size_t i = r + 1; i < nrows; ++i) {
            bool zi = sgn(m[i][c]) == 0;
            for (size_t j = c + 1; j < ncols; ++j) {
                if (zi && sgn(m[i][j]) == 0) continue;
                mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

}  // namespace detail

// Rows stored as sorted (column, value) pairs.
struct SparseRows {
    size_t ncols = 0;
    std::vector<std::vector<std::pair<size_t, Rat>>> rows;

    void add_row(std::vector<std::pair<size_t, Rat>> row) {
        for (auto& [c, v] : row)
            if (c >= ncols) ncols = c + 1;
        rows.push_back(std::move(row));
    }

    size_t rank() const {
        size_t nrows = rows.size();
        if (nrows == 0 || ncols == 0) return 0;

        // Integer-scale rows; drop explicit zeros.
        std::vector<std::vector<std::pair<size_t, mpz_class>>> m(nrows);
        for (size_t i = 0; i < nrows; ++i) {
            mpz_class scale(1);
            for (const auto& [c, v] : rows[i])
                mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.den().get_mpz_t());
            for (const auto& [c, v] : rows[i]) {
                if (v.is_zero()) continue;
                m[i].emplace_back(c, mpz_class(v.num() * (scale / v.den())));
            }
        }

        std::vector<std::vector<size_t>> col_rows(ncols);
        std::vector<size_t> row_count(nrows, 0), col_count(ncols, 0);
        for (size_t i = 0; i < nrows; ++i) {
            row_count[i] = m[i].size();
            for (const auto& [c, v] : m[i]) {
                col_rows[c].push_back(i);
                ++col_count[c];
            }
        }

        std::vector<bool> row_live(nrows, true), col_live(ncols, true);
        size_t rank = 0;
        std::deque<std::pair<bool, size_t>> work;  // (is_row, index)
        for (size_t i = 0; i < nrows; ++i) work.push_back({true, i});
        for (size_t j = 0; j < ncols; ++j) work.push_back({false, j});

        // Pivoting on a singleton row or column leaves the remaining
        // minor unchanged, so these pivots are free and exact.
        auto eliminate = [&](size_t i, size_t j) {
            row_live[i] = false;
            col_live[j] = false;
            ++rank;
            for (const auto& [c, v] : m[i]) {
                if (!col_live[c]) continue;
                if (--col_count[c] == 1) work.push_back({false, c});
            }
            for (size_t r2 : col_rows[j]) {
                if (!row_live[r2]) continue;
                if (--row_count[r2] == 1) work.push_back({true, r2});
            }
        };

        while (!work.empty()) {
            auto [is_row, idx] = work.front();
            work.pop_front();
            if (is_row) {
                if (!row_live[idx]) continue;
                if (row_count[idx] == 0) { row_live[idx] = false; continue; }
                if (row_count[idx] != 1) continue;
                for (const auto& [c, v] : m[idx])
                    if (col_live[c]) { eliminate(idx, c); break; }
            } else {
                if (!col_live[idx] || col_count[idx] != 1) continue;
                for (size_t r2 : col_rows[idx])
                    if (row_live[r2]) { eliminate(r2, idx); break; }
            }
        }

        // Dense core of surviving rows/columns.
        std::vector<size_t> col_pos(ncols, 0);
        size_t live_cols = 0;
        for (size_t j = 0; j < ncols; ++j)
            if (col_live[j]) col_pos[j] = live_cols++;
        std::vector<std::vector<mpz_class>> core;
        for (size_t i = 0; i < nrows; ++i) {
            if (!row_live[i]) continue;
            std::vector<mpz_class> r(live_cols);
            bool any = false;
            for (const auto& [c, v] : m[i])
                if (col_live[c]) { r[col_pos[c]] = v; any = true; }
            if (any) core.push_back(std::move(r));
        }
        if (!core.empty() && live_cols > 0) rank += detail::bareiss_rank(core);
        return rank;
    }
};

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows, QVec(cols, Rat(0))) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rat& at(size_t i, size_t j) { return data_[i][j]; }
    const Rat& at(size_t i, size_t j) const { return data_[i][j]; }

    QVec apply(const QVec& x) const {
        if (x.size() != cols_) throw error("QMatrix: dimension mismatch in apply");
        QVec y(rows_, Rat(0));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (!data_[i][j].is_zero() && !x[j].is_zero()) y[i] += data_[i][j] * x[j];
        return y;
    }

    size_t rank() const { return rank_of_rows(data_); }

    // Basis of { x : M x = 0 }.
    std::vector<QVec> kernel_basis() const {
        std::vector<QVec> m = data_;
        std::vector<int> pivot_col_of_row;
        rref_inplace(m, pivot_col_of_row);
        std::vector<bool> is_pivot(cols_, false);
        for (int c : pivot_col_of_row)
            if (c >= 0) is_pivot[static_cast<size_t>(c)] = true;
        std::vector<QVec> basis;
        for (size_t fc = 0; fc < cols_; ++fc) {
            if (is_pivot[fc]) continue;
            QVec v(cols_, Rat(0));
            v[fc] = Rat(1);
            for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
                int pc = pivot_col_of_row[r];
                if (pc >= 0) v[static_cast<size_t>(pc)] = -m[r][fc];
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // One solution of M x = b, or nullopt when inconsistent.
    std::optional<QVec> solve(const QVec& b) const {
        if (b.size() != rows_) throw error("QMatrix: rhs length mismatch");
        std::vector<QVec> m = data_;
        for (size_t i = 0; i < rows_; ++i) m[i].push_back(b[i]);
        std::vector<int> pivot_col_of_row;
        rref_inplace(m, pivot_col_of_row);
        QVec x(cols_, Rat(0));
        for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
            int pc = pivot_col_of_row[r];
            if (pc < 0) continue;
            if (static_cast<size_t>(pc) == cols_) return std::nullopt;  // 0 = 1 row
            x[static_cast<size_t>(pc)] = m[r][cols_];
        }
        return x;
    }

    // Reduced row echelon form; pivot_col_of_row[r] = pivot column of row r
    // or -1 for zero rows.
    static void rref_inplace(std::vector<QVec>& m, std::vector<int>& pivot_col_of_row) {
        size_t nrows = m.size();
        size_t ncols = nrows ? m[0].size() : 0;
        pivot_col_of_row.assign(nrows, -1);
        size_t r = 0;
        for (size_t c = 0; c < ncols && r < nrows; ++c) {
            size_t piv = nrows;
            for (size_t i = r; i < nrows; ++i)
                if (!m[i][c].is_zero()) { piv = i; break; }
            if (piv == nrows) continue;
            std::swap(m[piv], m[r]);
            Rat inv = Rat(1) / m[r][c];
            for (size_t j = c; j < ncols; ++j)
                if (!m[r][j].is_zero()) m[r][j] *= inv;
            for (size_t i = 0; i < nrows; ++i) {
                if (i == r || m[i][c].is_zero()) continue;
                Rat factor = m[i][c];
                for (size_t j = c; j < ncols; ++j)
                    if (!m[r][j].is_zero()) m[i][j] -= factor * m[r][j];
            }
            pivot_col_of_row[r] = static_cast<int>(c);
            ++r;
        }
    }

    // Rank of the row span of a list of (dense) vectors.
    static size_t rank_of_rows(const std::vector<QVec>& rows) {
        if (rows.empty()) return 0;
        SparseRows sp;
        sp.ncols = rows[0].size();
        sp.rows.reserve(rows.size());
        for (const auto& r : rows) {
            std::vector<std::pair<size_t, Rat>> row;
            for (size_t j = 0; j < r.size(); ++j)
                if (!r[j].is_zero()) row.emplace_back(j, r[j]);
            sp.rows.push_back(std::move(row));
        }
        return sp.rank();
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<QVec> data_;
};

}  // namespace hsinv
