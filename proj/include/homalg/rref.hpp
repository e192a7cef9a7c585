#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "homalg/sparse.hpp"

namespace homalg {

/// Result of a reduced-row-echelon computation. `reduced` is the canonical
/// RREF (unique for the input matrix, independent of pivot order), with row i
/// carrying the i-th pivot; `pivot_cols` is strictly increasing.
template <class F>
struct Echelon {
    SparseMat<F> reduced;
    std::vector<std::uint32_t> pivot_cols;
    std::uint32_t rank = 0;
};

/// Reference implementation: textbook Gauss-Jordan, leftmost pivot column,
/// lowest row. Kept simple on purpose; the production rref() must agree with
/// it entry for entry.
template <class F>
Echelon<F> rref_serial(const F& f, const SparseMat<F>& m) {
    using Row = typename SparseMat<F>::Row;
    std::vector<Row> rows(m.rows());
    for (std::uint32_t i = 0; i < m.rows(); ++i) rows[i] = m.row(i);

    std::vector<std::uint32_t> pivot_cols;
    std::vector<std::uint32_t> pivot_rows;
    std::uint32_t next = 0;  // rows below this index are settled pivots
    for (std::uint32_t c = 0; c < m.cols() && next < m.rows(); ++c) {
        std::uint32_t pr = UINT32_MAX;
        for (std::uint32_t i = next; i < m.rows(); ++i)
            if (!rows[i].empty() && rows[i].front().col == c) { pr = i; break; }
        if (pr == UINT32_MAX) continue;
        std::swap(rows[next], rows[pr]);
        auto inv = f.inv(rows[next].front().val);
        for (auto& e : rows[next]) e.val = f.mul(e.val, inv);
        for (std::uint32_t i = 0; i < m.rows(); ++i) {
            if (i == next || rows[i].empty()) continue;
            auto it = std::lower_bound(rows[i].begin(), rows[i].end(), c,
                                       [](const auto& e, std::uint32_t col) { return e.col < col; });
            if (it == rows[i].end() || it->col != c) continue;
            rows[i] = SparseMat<F>::merge_rows(f, rows[i], f.neg(it->val), rows[next]);
        }
        pivot_cols.push_back(c);
        ++next;
    }
    Echelon<F> out;
    out.rank = next;
    out.pivot_cols = std::move(pivot_cols);
    out.reduced = SparseMat<F>(m.rows(), m.cols());
    for (std::uint32_t i = 0; i < next; ++i) out.reduced.set_row(i, std::move(rows[i]));
    return out;
}

/// Leftmost Gauss-Jordan over an arbitrary row list, with rows bucketed by
/// leading column so pivot discovery never rescans the matrix. Returns the
/// canonical RREF of the span of `rows`.
template <class F>
Echelon<F> canonical_rref_of_rows(const F& f, std::vector<typename SparseMat<F>::Row> rows,
                                  std::uint32_t nrows_out, std::uint32_t ncols) {
    using Entry = typename SparseMat<F>::Entry;
    using Row = typename SparseMat<F>::Row;

    std::vector<std::vector<std::uint32_t>> bucket(ncols);  // leading col -> row ids
    for (std::uint32_t i = 0; i < rows.size(); ++i)
        if (!rows[i].empty()) bucket[rows[i].front().col].push_back(i);

    std::vector<std::uint32_t> pivot_rows;  // settled, in pivot-col order
    std::vector<std::uint32_t> pivot_cols;
    for (std::uint32_t c = 0; c < ncols; ++c) {
        auto& cand = bucket[c];
        if (cand.empty()) continue;
        std::sort(cand.begin(), cand.end());
        std::uint32_t pr = UINT32_MAX;
        std::size_t start = 0;
        for (; start < cand.size(); ++start) {
            std::uint32_t i = cand[start];
            if (!rows[i].empty() && rows[i].front().col == c) { pr = i; break; }
        }
        if (pr == UINT32_MAX) { cand.clear(); continue; }
        auto inv = f.inv(rows[pr].front().val);
        for (auto& e : rows[pr]) e.val = f.mul(e.val, inv);
        for (std::size_t t = start + 1; t < cand.size(); ++t) {
            std::uint32_t i = cand[t];
            if (rows[i].empty() || rows[i].front().col != c) continue;  // stale
            rows[i] = SparseMat<F>::merge_rows(f, rows[i], f.neg(rows[i].front().val), rows[pr]);
            if (!rows[i].empty()) bucket[rows[i].front().col].push_back(i);
        }
        cand.clear();
        pivot_rows.push_back(pr);
        pivot_cols.push_back(c);
    }

    // Eliminate above: in reverse pivot order, the reducing rows are already
    // fully reduced, so each row needs one sweep over its pivot-col entries.
    std::vector<std::uint32_t> row_of_col(ncols, UINT32_MAX);
    for (std::uint32_t i = 0; i < pivot_rows.size(); ++i) row_of_col[pivot_cols[i]] = pivot_rows[i];
    std::vector<std::uint32_t> dirty;
    for (std::uint32_t i = static_cast<std::uint32_t>(pivot_rows.size()); i-- > 0;) {
        std::uint32_t r = pivot_rows[i];
        dirty.clear();
        for (const Entry& e : rows[r])
            if (e.col != pivot_cols[i] && row_of_col[e.col] != UINT32_MAX) dirty.push_back(e.col);
        for (std::uint32_t dc : dirty) {
            auto it = std::lower_bound(rows[r].begin(), rows[r].end(), dc,
                                       [](const Entry& e, std::uint32_t col) { return e.col < col; });
            if (it == rows[r].end() || it->col != dc) continue;
            rows[r] = SparseMat<F>::merge_rows(f, rows[r], f.neg(it->val), rows[row_of_col[dc]]);
        }
    }

    Echelon<F> out;
    out.rank = static_cast<std::uint32_t>(pivot_rows.size());
    out.pivot_cols = std::move(pivot_cols);
    out.reduced = SparseMat<F>(std::max(nrows_out, out.rank), ncols);
    for (std::uint32_t i = 0; i < out.rank; ++i) out.reduced.set_row(i, std::move(rows[pivot_rows[i]]));
    return out;
}

/// Production elimination. Pivots are chosen Markowitz-style (sparsest active
/// column, then sparsest row in it, ties broken by lowest index); row updates
/// within one pivot step are independent and run under OpenMP. The final
/// back-substitution renders the canonical RREF, so the output is identical
/// to rref_serial() regardless of pivot order or thread count.
template <class F>
Echelon<F> rref(const F& f, const SparseMat<F>& m) {
    using Entry = typename SparseMat<F>::Entry;
    using Row = typename SparseMat<F>::Row;

    const std::uint32_t nrows = m.rows(), ncols = m.cols();
    std::vector<Row> rows(nrows);
    std::size_t total_nnz = 0;
    for (std::uint32_t i = 0; i < nrows; ++i) {
        rows[i] = m.row(i);
        total_nnz += rows[i].size();
    }

    // Small or dense-ish problems do not repay the bookkeeping below.
    if (nrows <= 64 || total_nnz * 4 > (std::size_t)nrows * ncols) return rref_serial(f, m);

    std::vector<std::uint32_t> col_count(ncols, 0);
    std::vector<std::vector<std::uint32_t>> col_rows(ncols);  // lazily maintained
    for (std::uint32_t i = 0; i < nrows; ++i)
        for (const Entry& e : rows[i]) {
            ++col_count[e.col];
            col_rows[e.col].push_back(i);
        }
    std::set<std::pair<std::uint32_t, std::uint32_t>> agenda;  // (count, col)
    for (std::uint32_t c = 0; c < ncols; ++c)
        if (col_count[c]) agenda.insert({col_count[c], c});

    auto bump = [&](std::uint32_t c, int delta) {
        agenda.erase({col_count[c], c});
        col_count[c] += delta;
        if (col_count[c]) agenda.insert({col_count[c], c});
    };

    std::vector<char> settled(nrows, 0);  // row already used as a pivot
    std::vector<std::uint32_t> pivot_row_of;
    std::vector<std::uint32_t> pivot_col_of;

    std::vector<std::uint32_t> targets;
    while (!agenda.empty()) {
        std::uint32_t c = agenda.begin()->second;

        // Compact the candidate list for c and pick the sparsest row.
        auto& cand = col_rows[c];
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        std::uint32_t pr = UINT32_MAX;
        std::size_t pr_len = SIZE_MAX;
        std::size_t w = 0;
        for (std::uint32_t i : cand) {
            if (settled[i]) continue;
            auto it = std::lower_bound(rows[i].begin(), rows[i].end(), c,
                                       [](const Entry& e, std::uint32_t col) { return e.col < col; });
            if (it == rows[i].end() || it->col != c) continue;
            cand[w++] = i;
            if (rows[i].size() < pr_len || (rows[i].size() == pr_len && i < pr)) {
                pr = i;
                pr_len = rows[i].size();
            }
        }
        cand.resize(w);
        if (pr == UINT32_MAX) {  // stale column
            agenda.erase({col_count[c], c});
            col_count[c] = 0;
            continue;
        }

        // Normalize the pivot row and retire it from the active set.
        {
            auto it = std::lower_bound(rows[pr].begin(), rows[pr].end(), c,
                                       [](const Entry& e, std::uint32_t col) { return e.col < col; });
            auto inv = f.inv(it->val);
            for (auto& e : rows[pr]) e.val = f.mul(e.val, inv);
        }
        settled[pr] = 1;
        pivot_row_of.push_back(pr);
        pivot_col_of.push_back(c);
        for (const Entry& e : rows[pr]) bump(e.col, -1);

        targets.clear();
        for (std::uint32_t i : cand)
            if (i != pr) targets.push_back(i);

        // Independent row eliminations; deltas are gathered per target and
        // folded into the column bookkeeping serially afterwards.
        std::vector<std::vector<std::uint32_t>> added(targets.size()), removed(targets.size());
        const Row& prow = rows[pr];
#pragma omp parallel for schedule(dynamic, 8) if (targets.size() > 8)
        for (std::size_t t = 0; t < targets.size(); ++t) {
            std::uint32_t i = targets[t];
            auto it = std::lower_bound(rows[i].begin(), rows[i].end(), c,
                                       [](const Entry& e, std::uint32_t col) { return e.col < col; });
            Row merged = SparseMat<F>::merge_rows(f, rows[i], f.neg(it->val), prow);
            // support diff (both sorted)
            auto ia = rows[i].begin();
            auto ib = merged.begin();
            while (ia != rows[i].end() || ib != merged.end()) {
                if (ib == merged.end() || (ia != rows[i].end() && ia->col < ib->col))
                    removed[t].push_back((ia++)->col);
                else if (ia == rows[i].end() || ib->col < ia->col)
                    added[t].push_back((ib++)->col);
                else { ++ia; ++ib; }
            }
            rows[i] = std::move(merged);
        }
        for (std::size_t t = 0; t < targets.size(); ++t) {
            for (std::uint32_t col : added[t]) {
                bump(col, +1);
                col_rows[col].push_back(targets[t]);
            }
            for (std::uint32_t col : removed[t]) bump(col, -1);
        }
    }

    // Clean pivot rows in reverse settle order. A settled row can hold a
    // pivot column only if that column was settled later, so the reducing
    // rows are already clean and one sweep per row suffices.
    const std::uint32_t rank = static_cast<std::uint32_t>(pivot_row_of.size());
    std::vector<std::uint32_t> row_of_col(ncols, UINT32_MAX);
    for (std::uint32_t i = 0; i < rank; ++i) row_of_col[pivot_col_of[i]] = pivot_row_of[i];
    std::vector<std::uint32_t> dirty;
    for (std::uint32_t i = rank; i-- > 0;) {
        std::uint32_t r = pivot_row_of[i];
        std::uint32_t pc = pivot_col_of[i];
        dirty.clear();
        for (const Entry& e : rows[r])
            if (e.col != pc && row_of_col[e.col] != UINT32_MAX) dirty.push_back(e.col);
        for (std::uint32_t dc : dirty) {
            auto it = std::lower_bound(rows[r].begin(), rows[r].end(), dc,
                                       [](const Entry& e, std::uint32_t col) { return e.col < col; });
            if (it == rows[r].end() || it->col != dc) continue;
            rows[r] = SparseMat<F>::merge_rows(f, rows[r], f.neg(it->val), rows[row_of_col[dc]]);
        }
    }

    // Markowitz may have settled a column basis other than the leftmost one;
    // a leftmost pass over the rank surviving rows restores the canonical
    // RREF. The rows are near-orthogonal at this point, so the pass is cheap.
    std::vector<Row> basis(rank);
    for (std::uint32_t i = 0; i < rank; ++i) basis[i] = std::move(rows[pivot_row_of[i]]);
    return canonical_rref_of_rows(f, std::move(basis), nrows, ncols);
}

template <class F>
std::uint32_t rank(const F& f, const SparseMat<F>& m) {
    return rref(f, m).rank;
}

/// Canonical kernel basis read off the RREF: one column per free column,
/// which carries a unit there and -R[i][free] at pivot column i. Columns of
/// the result are linearly independent and span ker(m).
template <class F>
SparseMat<F> kernel_basis(const F& f, const SparseMat<F>& m) {
    Echelon<F> e = rref(f, m);
    return kernel_from_echelon(f, e, m.cols());
}

template <class F>
SparseMat<F> kernel_from_echelon(const F& f, const Echelon<F>& e, std::uint32_t ncols) {
    std::vector<char> is_pivot(ncols, 0);
    for (std::uint32_t c : e.pivot_cols) is_pivot[c] = 1;
    std::uint32_t nullity = ncols - e.rank;
    SparseMat<F> k(ncols, nullity);
    std::vector<std::uint32_t> col_of_free(ncols, UINT32_MAX);
    {
        std::uint32_t j = 0;
        for (std::uint32_t c = 0; c < ncols; ++c)
            if (!is_pivot[c]) col_of_free[c] = j++;
    }
    for (std::uint32_t c = 0; c < ncols; ++c)
        if (!is_pivot[c]) k.set(f, c, col_of_free[c], f.one());
    for (std::uint32_t i = 0; i < e.rank; ++i) {
        for (const auto& en : e.reduced.row(i)) {
            if (en.col == e.pivot_cols[i]) continue;
            if (col_of_free[en.col] == UINT32_MAX) continue;
            k.set(f, e.pivot_cols[i], col_of_free[en.col], f.neg(en.val));
        }
    }
    return k;
}

/// Incrementally maintained row space in echelon form (rows keyed by leading
/// column, each scaled monic). Supports membership tests and residue
/// extraction without re-running a full elimination.
template <class F>
class IncrementalBasis {
public:
    using Row = typename SparseMat<F>::Row;

    explicit IncrementalBasis(const F& f) : f_(f) {}

    std::uint32_t rank() const { return static_cast<std::uint32_t>(rows_.size()); }

    /// Reduce v against the current basis; the returned residue is zero iff
    /// v lies in the span.
    Row residue(Row v) const {
        while (!v.empty()) {
            auto it = rows_.find(v.front().col);
            if (it == rows_.end()) break;
            v = SparseMat<F>::merge_rows(f_, v, f_.neg(v.front().val), it->second);
        }
        return v;
    }

    /// Add v to the span. Returns true when v was independent.
    bool add(Row v) {
        v = residue(std::move(v));
        if (v.empty()) return false;
        auto inv = f_.inv(v.front().val);
        for (auto& e : v) e.val = f_.mul(e.val, inv);
        // keep later reductions short: strip known leading columns from the tail
        std::uint32_t lead = v.front().col;
        rows_.emplace(lead, std::move(v));
        return true;
    }

    bool contains(Row v) const { return residue(std::move(v)).empty(); }

    /// Basis row with the given leading column, or nullptr.
    const Row* row_with_lead(std::uint32_t col) const {
        auto it = rows_.find(col);
        return it == rows_.end() ? nullptr : &it->second;
    }

    const std::map<std::uint32_t, Row>& rows() const { return rows_; }

private:
    const F f_;
    std::map<std::uint32_t, Row> rows_;
};

/// Exact linear solve m*x = b; returns the canonical solution (free variables
/// zero) or nothing when b is outside the column span.
template <class F>
std::optional<std::vector<typename F::Val>> solve(const F& f, const SparseMat<F>& m,
                                                  const std::vector<typename F::Val>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
    SparseMat<F> aug(m.rows(), m.cols() + 1);
    for (std::uint32_t i = 0; i < m.rows(); ++i) {
        auto row = m.row(i);
        if (!f.is_zero(b[i])) row.push_back({m.cols(), b[i]});
        aug.set_row(i, std::move(row));
    }
    Echelon<F> e = rref(f, aug);
    std::vector<typename F::Val> x(m.cols(), f.zero());
    for (std::uint32_t i = 0; i < e.rank; ++i) {
        if (e.pivot_cols[i] == m.cols()) return std::nullopt;  // inconsistent
        x[e.pivot_cols[i]] = e.reduced.get(f, i, m.cols());
    }
    return x;
}

}  // namespace homalg
