#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "homalg/field.hpp"

namespace homalg {

/// Sparse matrix over a field policy F. Rows hold entries sorted by column;
/// stored entries are always nonzero. Values are immutable by convention once
/// a matrix is handed to another component.
template <class F>
class SparseMat {
public:
    using Val = typename F::Val;
    struct Entry {
        std::uint32_t col;
        Val val;
        bool operator==(const Entry& o) const { return col == o.col && val == o.val; }
    };
    using Row = std::vector<Entry>;

    SparseMat() = default;
    SparseMat(std::uint32_t rows, std::uint32_t cols) : ncols_(cols), rows_(rows) {}

    static SparseMat identity(const F& f, std::uint32_t n) {
        SparseMat m(n, n);
        for (std::uint32_t i = 0; i < n; ++i) m.rows_[i].push_back({i, f.one()});
        return m;
    }

    std::uint32_t rows() const { return static_cast<std::uint32_t>(rows_.size()); }
    std::uint32_t cols() const { return ncols_; }
    const Row& row(std::uint32_t i) const { return rows_[i]; }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& r : rows_) n += r.size();
        return n;
    }

    Val get(const F& f, std::uint32_t r, std::uint32_t c) const {
        const Row& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const Entry& e, std::uint32_t col) { return e.col < col; });
        return (it != row.end() && it->col == c) ? it->val : f.zero();
    }

    /// Insert, overwrite, or erase (when v == 0) a single entry.
    void set(const F& f, std::uint32_t r, std::uint32_t c, const Val& v) {
        assert(r < rows() && c < ncols_);
        Row& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const Entry& e, std::uint32_t col) { return e.col < col; });
        if (it != row.end() && it->col == c) {
            if (f.is_zero(v)) row.erase(it);
            else it->val = v;
        } else if (!f.is_zero(v)) {
            row.insert(it, Entry{c, v});
        }
    }

    void add_to(const F& f, std::uint32_t r, std::uint32_t c, const Val& v) {
        set(f, r, c, f.add(get(f, r, c), v));
    }

    /// Replace a whole row; entries must be sorted by column and nonzero.
    void set_row(std::uint32_t i, Row row) { rows_[i] = std::move(row); }

    SparseMat transpose() const {
        SparseMat t(ncols_, rows());
        for (std::uint32_t i = 0; i < rows(); ++i)
            for (const Entry& e : rows_[i]) t.rows_[e.col].push_back({i, e.val});
        return t;
    }

    static SparseMat mul(const F& f, const SparseMat& a, const SparseMat& b) {
        if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in mul");
        SparseMat c(a.rows(), b.cols());
        std::vector<Val> acc(b.cols(), f.zero());
        std::vector<std::uint32_t> touched;
        for (std::uint32_t i = 0; i < a.rows(); ++i) {
            touched.clear();
            for (const Entry& ea : a.rows_[i]) {
                for (const Entry& eb : b.rows_[ea.col]) {
                    if (f.is_zero(acc[eb.col])) touched.push_back(eb.col);
                    acc[eb.col] = f.add(acc[eb.col], f.mul(ea.val, eb.val));
                }
            }
            std::sort(touched.begin(), touched.end());
            for (std::uint32_t c2 : touched) {
                if (!f.is_zero(acc[c2])) c.rows_[i].push_back({c2, acc[c2]});
                acc[c2] = f.zero();
            }
        }
        return c;
    }

    /// a + s*b
    static SparseMat axpy(const F& f, const SparseMat& a, const Val& s, const SparseMat& b) {
        if (a.rows() != b.rows() || a.cols() != b.cols())
            throw std::invalid_argument("matrix shape mismatch in axpy");
        SparseMat c(a.rows(), a.cols());
        for (std::uint32_t i = 0; i < a.rows(); ++i)
            c.rows_[i] = merge_rows(f, a.rows_[i], s, b.rows_[i]);
        return c;
    }

    /// row_a + s*row_b, entries sorted, zeros dropped.
    static Row merge_rows(const F& f, const Row& a, const Val& s, const Row& b) {
        Row out;
        out.reserve(a.size() + b.size());
        auto ia = a.begin(), ib = b.begin();
        while (ia != a.end() || ib != b.end()) {
            if (ib == b.end() || (ia != a.end() && ia->col < ib->col)) {
                out.push_back(*ia++);
            } else if (ia == a.end() || ib->col < ia->col) {
                Val v = f.mul(s, ib->val);
                if (!f.is_zero(v)) out.push_back({ib->col, v});
                ++ib;
            } else {
                Val v = f.add(ia->val, f.mul(s, ib->val));
                if (!f.is_zero(v)) out.push_back({ia->col, v});
                ++ia; ++ib;
            }
        }
        return out;
    }

    /// Matrix-vector product over dense column vectors.
    static std::vector<Val> apply(const F& f, const SparseMat& m, const std::vector<Val>& x) {
        if (x.size() != m.cols()) throw std::invalid_argument("shape mismatch in apply");
        std::vector<Val> y(m.rows(), f.zero());
        for (std::uint32_t i = 0; i < m.rows(); ++i)
            for (const Entry& e : m.rows_[i]) y[i] = f.add(y[i], f.mul(e.val, x[e.col]));
        return y;
    }

    bool is_zero() const {
        for (const auto& r : rows_) if (!r.empty()) return false;
        return true;
    }

    bool operator==(const SparseMat& o) const {
        return ncols_ == o.ncols_ && rows_ == o.rows_;
    }

    /// Stack b below a (matching column counts).
    static SparseMat vstack(const SparseMat& a, const SparseMat& b) {
        assert(a.cols() == b.cols());
        SparseMat c(a.rows() + b.rows(), a.cols());
        for (std::uint32_t i = 0; i < a.rows(); ++i) c.rows_[i] = a.rows_[i];
        for (std::uint32_t i = 0; i < b.rows(); ++i) c.rows_[a.rows() + i] = b.rows_[i];
        return c;
    }

private:
    std::uint32_t ncols_ = 0;
    std::vector<Row> rows_;
};

}  // namespace homalg
