#pragma once

#include <map>
#include <vector>

#include "homalg/algebra.hpp"
#include "homalg/dgmod.hpp"

namespace homalg {

/// Image of a column vector (sparse row representation) under a matrix.
template <class F>
typename SparseMat<F>::Row mat_apply_row(const F& f, const SparseMat<F>& a,
                                         const typename SparseMat<F>::Row& v) {
    typename SparseMat<F>::Row out;
    for (std::uint32_t i = 0; i < a.rows(); ++i) {
        typename F::Val s = f.zero();
        auto it = v.begin();
        for (const auto& e : a.row(i)) {
            while (it != v.end() && it->col < e.col) ++it;
            if (it != v.end() && it->col == e.col) s = f.add(s, f.mul(e.val, it->val));
        }
        if (!f.is_zero(s)) out.push_back({i, s});
    }
    return out;
}

/// Fully reduce v against the span: clears every coordinate at a leading
/// column, scanning left to right (each merge only touches later columns).
template <class F>
typename SparseMat<F>::Row reduce_all(const F& f, const IncrementalBasis<F>& span,
                                      typename SparseMat<F>::Row v) {
    std::size_t i = 0;
    while (i < v.size()) {
        auto red = span.row_with_lead(v[i].col);
        if (!red) {
            ++i;
            continue;
        }
        v = SparseMat<F>::merge_rows(f, v, f.neg(v[i].val), *red);
        // entries before position i are unchanged by the merge
    }
    return v;
}

/// Finite graded module over an Artinian quotient ring: k-basis with internal
/// degrees and one degree +1 action matrix per variable. Frozen after
/// validation.
template <class F>
struct RModule {
    const QuotientRing<F>* ring = nullptr;
    std::vector<int> degrees;
    std::vector<SparseMat<F>> actions;

    std::uint32_t dim() const { return static_cast<std::uint32_t>(degrees.size()); }

    void validate() const {
        const F& f = ring->field();
        if (actions.size() != ring->nvars())
            throw std::invalid_argument("one action matrix per variable required");
        for (std::uint32_t v = 0; v < actions.size(); ++v) {
            const auto& a = actions[v];
            if (a.rows() != dim() || a.cols() != dim())
                throw std::invalid_argument("action matrix has wrong shape");
            for (std::uint32_t i = 0; i < a.rows(); ++i)
                for (const auto& e : a.row(i))
                    if (degrees[i] != degrees[e.col] + 1)
                        throw std::invalid_argument("module action is not degree 1");
        }
        for (std::uint32_t v = 0; v < actions.size(); ++v)
            for (std::uint32_t w = v + 1; w < actions.size(); ++w) {
                auto vw = SparseMat<F>::mul(f, actions[v], actions[w]);
                auto wv = SparseMat<F>::mul(f, actions[w], actions[v]);
                if (!SparseMat<F>::axpy(f, vw, f.neg(f.one()), wv).is_zero())
                    throw std::invalid_argument("module actions do not commute");
            }
        for (const auto& g : ring->groebner())
            if (!evaluate(g).is_zero())
                throw std::invalid_argument("module actions violate the ring relations");
    }

    /// Evaluate a polynomial on the (commuting) action matrices.
    SparseMat<F> evaluate(const Poly<F>& p) const {
        const F& f = ring->field();
        SparseMat<F> out(dim(), dim());
        for (const auto& t : p.terms) {
            SparseMat<F> m = SparseMat<F>::identity(f, dim());
            for (std::uint32_t v = 0; v < ring->nvars(); ++v)
                for (int k = 0; k < t.m.e[v]; ++k) m = SparseMat<F>::mul(f, actions[v], m);
            out = SparseMat<F>::axpy(f, out, t.c, m);
        }
        return out;
    }

    SparseMat<F> act(const Poly<F>& p) const { return evaluate(ring->normal_form(p)); }
};

/// R as a module over itself.
template <class F>
RModule<F> ring_as_module(const QuotientRing<F>& r) {
    RModule<F> m;
    m.ring = &r;
    m.degrees.resize(r.dim());
    for (std::uint32_t i = 0; i < r.dim(); ++i) m.degrees[i] = r.basis_degree(i);
    for (std::uint32_t v = 0; v < r.nvars(); ++v) m.actions.push_back(r.var_op(v));
    m.validate();
    return m;
}

template <class F>
RModule<F> residue_field_rmodule(const QuotientRing<F>& r) {
    RModule<F> m;
    m.ring = &r;
    m.degrees = {0};
    m.actions.assign(r.nvars(), SparseMat<F>(1, 1));
    m.validate();
    return m;
}

/// Free module R^s with generators in the given internal degrees.
template <class F>
RModule<F> free_rmodule(const QuotientRing<F>& r, const std::vector<int>& gen_degrees) {
    const F& f = r.field();
    std::uint32_t s = static_cast<std::uint32_t>(gen_degrees.size());
    std::uint32_t d = r.dim();
    RModule<F> m;
    m.ring = &r;
    m.degrees.resize((std::size_t)s * d);
    for (std::uint32_t g = 0; g < s; ++g)
        for (std::uint32_t i = 0; i < d; ++i)
            m.degrees[g * d + i] = gen_degrees[g] + r.basis_degree(i);
    for (std::uint32_t v = 0; v < r.nvars(); ++v) {
        SparseMat<F> a(s * d, s * d);
        for (std::uint32_t g = 0; g < s; ++g)
            for (std::uint32_t i = 0; i < d; ++i)
                for (const auto& e : r.var_op(v).row(i)) a.set(f, g * d + i, g * d + e.col, e.val);
        m.actions.push_back(std::move(a));
    }
    m.validate();
    return m;
}

/// Quotient of m by the submodule generated by the given vectors. The span is
/// closed under the variable actions, then the quotient basis is the set of
/// non-leading coordinates with reduced induced actions.
template <class F>
RModule<F> quotient_module(const RModule<F>& m,
                           std::vector<typename SparseMat<F>::Row> gens) {
    const F& f = m.ring->field();
    IncrementalBasis<F> span(f);
    std::vector<typename SparseMat<F>::Row> queue;
    for (auto& g : gens)
        if (span.add(g)) queue.push_back(std::move(g));
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        auto cur = queue[qi];
        for (std::uint32_t v = 0; v < m.ring->nvars(); ++v) {
            auto img = mat_apply_row(f, m.actions[v], cur);
            if (span.add(img)) queue.push_back(std::move(img));
        }
    }

    std::vector<std::uint32_t> free_idx;
    std::vector<std::uint32_t> pos(m.dim(), UINT32_MAX);
    for (std::uint32_t i = 0; i < m.dim(); ++i)
        if (!span.row_with_lead(i)) {
            pos[i] = static_cast<std::uint32_t>(free_idx.size());
            free_idx.push_back(i);
        }

    RModule<F> q;
    q.ring = m.ring;
    q.degrees.resize(free_idx.size());
    for (std::uint32_t j = 0; j < free_idx.size(); ++j) q.degrees[j] = m.degrees[free_idx[j]];
    for (std::uint32_t v = 0; v < m.ring->nvars(); ++v) {
        SparseMat<F> a(static_cast<std::uint32_t>(free_idx.size()),
                       static_cast<std::uint32_t>(free_idx.size()));
        for (std::uint32_t j = 0; j < free_idx.size(); ++j) {
            typename SparseMat<F>::Row e{{free_idx[j], f.one()}};
            auto img = reduce_all(f, span, mat_apply_row(f, m.actions[v], e));
            for (const auto& en : img) {
                if (pos[en.col] == UINT32_MAX)
                    throw std::logic_error("quotient reduction left a leading coordinate");
                a.set(f, pos[en.col], j, en.val);
            }
        }
        q.actions.push_back(std::move(a));
    }
    q.validate();
    return q;
}

/// R/(x_i : i in kill) as an R-module.
template <class F>
RModule<F> cyclic_quotient_rmodule(const QuotientRing<F>& r, const std::vector<std::uint32_t>& kill) {
    const F& f = r.field();
    RModule<F> reg = ring_as_module(r);
    std::vector<typename SparseMat<F>::Row> gens;
    for (std::uint32_t v : kill) {
        if (v < 1 || v > r.nvars()) throw std::invalid_argument("kill index outside 1..e");
        typename SparseMat<F>::Row one{{0u, f.one()}};  // basis index 0 is the monomial 1
        gens.push_back(mat_apply_row(f, reg.actions[v - 1], one));
    }
    return quotient_module(reg, std::move(gens));
}

/// Least l with m^l * M = 0, by iterating the variable actions.
template <class F>
int loewy_length(const RModule<F>& m) {
    const F& f = m.ring->field();
    if (m.dim() == 0) return 0;
    std::vector<typename SparseMat<F>::Row> layer;
    for (std::uint32_t i = 0; i < m.dim(); ++i) layer.push_back({{i, f.one()}});
    int l = 0;
    while (!layer.empty()) {
        ++l;
        IncrementalBasis<F> next(f);
        std::vector<typename SparseMat<F>::Row> nxt;
        for (const auto& v : layer)
            for (std::uint32_t g = 0; g < m.ring->nvars(); ++g) {
                auto img = mat_apply_row(f, m.actions[g], v);
                if (next.add(img)) nxt.push_back(std::move(img));
            }
        layer = std::move(nxt);
        if (l > (int)m.dim() + 1) throw std::logic_error("Loewy iteration failed to terminate");
    }
    return l;
}

}  // namespace homalg
