#pragma once

#include <map>
#include <vector>

#include "homalg/rmodule.hpp"

namespace homalg {

/// Matrix with polynomial entries (over a quotient ring's presentation).
template <class F>
struct PolyMat {
    std::uint32_t rows = 0, cols = 0;
    struct Cell {
        std::uint32_t r, c;
        Poly<F> p;
    };
    std::vector<Cell> cells;

    const Poly<F>* at(std::uint32_t r, std::uint32_t c) const {
        for (const auto& cell : cells)
            if (cell.r == r && cell.c == c) return &cell.p;
        return nullptr;
    }
};

/// Finite complex of free R-modules with polynomial differentials; ranks and
/// generator internal degrees per homological degree lo, lo+1, ...
template <class F>
struct FreeComplexR {
    const QuotientRing<F>* ring = nullptr;
    int lo = 0;
    std::vector<std::vector<int>> gen_degrees;  // [i] = degrees at homological lo+i
    std::vector<PolyMat<F>> diffs;              // diffs[i]: lo+i -> lo+i-1 (diffs[0] unused)

    int hi() const { return lo + static_cast<int>(gen_degrees.size()) - 1; }
    std::uint32_t rank_at(int n) const {
        int i = n - lo;
        return (i >= 0 && i < (int)gen_degrees.size())
                   ? static_cast<std::uint32_t>(gen_degrees[i].size())
                   : 0;
    }

    void validate() const {
        const F& f = ring->field();
        for (std::size_t i = 1; i + 1 < diffs.size(); ++i) {
            // (d_{i}) (d_{i+1}) = 0 over R
            const PolyMat<F>& a = diffs[i];
            const PolyMat<F>& b = diffs[i + 1];
            for (std::uint32_t r = 0; r < a.rows; ++r)
                for (std::uint32_t c = 0; c < b.cols; ++c) {
                    Poly<F> s;
                    for (const auto& ca : a.cells)
                        if (ca.r == r)
                            for (const auto& cb : b.cells)
                                if (cb.c == c && cb.r == ca.c)
                                    s = poly_add(f, s, poly_mul(f, ca.p, cb.p));
                    if (!ring->normal_form(s).is_zero())
                        throw std::invalid_argument("free complex differential does not square to zero");
                }
        }
    }

    /// Expand the strand at homological degree n to a k-basis: pairs
    /// (generator g, ring basis monomial mu), ordered g-major.
    std::uint32_t k_dim(int n) const { return rank_at(n) * ring->dim(); }

    /// k-linear matrix of d_n : (F_n)_k -> (F_{n-1})_k.
    SparseMat<F> k_diff(int n) const {
        const F& f = ring->field();
        std::uint32_t rd = ring->dim();
        SparseMat<F> m(k_dim(n - 1), k_dim(n));
        int i = n - lo;
        if (i <= 0 || i >= (int)diffs.size()) return m;
        for (const auto& cell : diffs[i].cells) {
            for (std::uint32_t mu = 0; mu < rd; ++mu) {
                Poly<F> prod = ring->normal_form(poly_mul(
                    f, cell.p, Poly<F>::term(f, ring->basis_mono(mu), f.one())));
                for (const auto& t : prod.terms)
                    m.add_to(f, cell.r * rd + ring->basis_index(t.m), cell.c * rd + mu, t.c);
            }
        }
        return m;
    }
};

/// Koszul complex on x_1..x_e over R: rank C(e,n) at homological degree n,
/// d(e_S) = sum over s in S of (sign) x_s e_{S minus s}.
template <class F>
FreeComplexR<F> koszul_complex(const QuotientRing<F>& r) {
    const F& f = r.field();
    std::uint32_t e = r.nvars();
    FreeComplexR<F> k;
    k.ring = &r;
    k.lo = 0;
    // enumerate subsets of each size in increasing mask order
    std::vector<std::vector<std::uint32_t>> subsets(e + 1);
    for (std::uint32_t mask = 0; mask < (1u << e); ++mask)
        subsets[std::popcount(mask)].push_back(mask);
    std::vector<std::map<std::uint32_t, std::uint32_t>> pos(e + 1);
    for (std::uint32_t n = 0; n <= e; ++n)
        for (std::uint32_t i = 0; i < subsets[n].size(); ++i) pos[n][subsets[n][i]] = i;

    k.gen_degrees.resize(e + 1);
    k.diffs.resize(e + 1);
    for (std::uint32_t n = 0; n <= e; ++n)
        k.gen_degrees[n].assign(subsets[n].size(), (int)n);
    for (std::uint32_t n = 1; n <= e; ++n) {
        PolyMat<F>& d = k.diffs[n];
        d.rows = static_cast<std::uint32_t>(subsets[n - 1].size());
        d.cols = static_cast<std::uint32_t>(subsets[n].size());
        for (std::uint32_t ci = 0; ci < subsets[n].size(); ++ci) {
            std::uint32_t mask = subsets[n][ci];
            int t = 0;
            for (std::uint32_t v = 0; v < e; ++v) {
                if (!(mask & (1u << v))) continue;
                ++t;  // v is the t-th element of S (1-based)
                std::uint32_t sub = mask & ~(1u << v);
                auto c = (t % 2 == 1) ? f.one() : f.neg(f.one());
                d.cells.push_back({pos[n - 1].at(sub), ci,
                                   Poly<F>::term(f, Mono::var(e, v), c)});
            }
        }
    }
    k.validate();
    return k;
}

template <class F>
std::vector<typename F::Val> row_to_dense(const F& f, const typename SparseMat<F>::Row& r,
                                          std::uint32_t n) {
    std::vector<typename F::Val> v(n, f.zero());
    for (const auto& e : r) v[e.col] = e.val;
    return v;
}

/// Homology of a finite free complex, per homological degree, returned both
/// as dimensions and as graded R-modules (for Loewy-length bookkeeping).
template <class F>
struct RComplexHomology {
    std::map<int, std::uint32_t> dims;
    std::map<int, RModule<F>> modules;
};

template <class F>
RComplexHomology<F> ring_complex_homology(const FreeComplexR<F>& c) {
    const F& f = c.ring->field();
    RComplexHomology<F> out;
    for (int n = c.lo; n <= c.hi(); ++n) {
        SparseMat<F> dn = c.k_diff(n);
        SparseMat<F> dn1 = c.k_diff(n + 1);
        SparseMat<F> z = kernel_basis(f, dn);
        IncrementalBasis<F> bspan(f);
        auto bt = dn1.transpose();
        for (std::uint32_t j = 0; j < bt.rows(); ++j) bspan.add(bt.row(j));

        // representatives: cycle columns extending the boundary span
        std::vector<typename SparseMat<F>::Row> reps;
        auto zt = z.transpose();
        IncrementalBasis<F> full = bspan;
        for (std::uint32_t i = 0; i < zt.rows(); ++i)
            if (full.add(zt.row(i))) reps.push_back(zt.row(i));

        std::uint32_t hdim = static_cast<std::uint32_t>(reps.size());
        out.dims[n] = hdim;

        // module structure on representatives
        RModule<F> h;
        h.ring = c.ring;
        std::uint32_t rd = c.ring->dim();
        h.degrees.resize(hdim);
        for (std::uint32_t i = 0; i < hdim; ++i) {
            // internal degree of a homogeneous representative
            if (reps[i].empty()) throw std::logic_error("empty representative");
            std::uint32_t idx = reps[i].front().col;
            int gd = c.gen_degrees[n - c.lo][idx / rd];
            h.degrees[i] = gd + c.ring->basis_degree(idx % rd);
        }
        // solve for coordinates: [reps | boundary basis] * coeffs = x_v * rep
        SparseMat<F> solve_mat(c.k_dim(n),
                               hdim + static_cast<std::uint32_t>(bspan.rows().size()));
        {
            std::uint32_t col = 0;
            for (std::uint32_t i = 0; i < hdim; ++i, ++col)
                for (const auto& e : reps[i]) solve_mat.set(f, e.col, col, e.val);
            for (const auto& [lead, row] : bspan.rows()) {
                for (const auto& e : row) solve_mat.set(f, e.col, col, e.val);
                ++col;
            }
        }
        for (std::uint32_t v = 0; v < c.ring->nvars(); ++v) {
            SparseMat<F> act(hdim, hdim);
            if (hdim) {
                // x_v acting on the strand: block diagonal per generator
                for (std::uint32_t i = 0; i < hdim; ++i) {
                    typename SparseMat<F>::Row img;
                    std::map<std::uint32_t, typename F::Val> acc;
                    for (const auto& e : reps[i]) {
                        std::uint32_t g = e.col / rd, mu = e.col % rd;
                        for (std::uint32_t tr = 0; tr < rd; ++tr) {
                            auto val = c.ring->var_op(v).get(f, tr, mu);
                            if (!f.is_zero(val)) {
                                auto& slot = acc[g * rd + tr];
                                slot = f.add(slot, f.mul(val, e.val));
                            }
                        }
                    }
                    for (auto& [pos2, val] : acc)
                        if (!f.is_zero(val)) img.push_back({pos2, val});
                    auto sol = solve(f, solve_mat, row_to_dense(f, img, c.k_dim(n)));
                    if (!sol) throw std::logic_error("homology action left the cycle space");
                    for (std::uint32_t i2 = 0; i2 < hdim; ++i2)
                        if (!f.is_zero((*sol)[i2])) act.set(f, i2, i, (*sol)[i2]);
                }
            }
            h.actions.push_back(std::move(act));
        }
        h.validate();
        out.modules.emplace(n, std::move(h));
    }
    return out;
}

}  // namespace homalg
