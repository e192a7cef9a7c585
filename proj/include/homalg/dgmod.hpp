#pragma once

#include <map>
#include <string>
#include <vector>

#include "homalg/algebra.hpp"

namespace homalg {

/// Finite complex of k-vector spaces: basis elements with homological degrees
/// and a square-zero degree -1 differential.
template <class F>
struct KComplex {
    F field;
    std::vector<int> degrees;
    SparseMat<F> diff;

    std::uint32_t dim() const { return static_cast<std::uint32_t>(degrees.size()); }

    void validate() const {
        if (diff.rows() != dim() || diff.cols() != dim())
            throw std::invalid_argument("complex differential has wrong shape");
        for (std::uint32_t i = 0; i < diff.rows(); ++i)
            for (const auto& e : diff.row(i))
                if (degrees[i] != degrees[e.col] - 1)
                    throw std::invalid_argument("differential entry violates degree -1");
        if (!SparseMat<F>::mul(field, diff, diff).is_zero())
            throw std::invalid_argument("differential does not square to zero");
    }
};

/// Finite DG module over an exterior algebra: graded k-basis, one action
/// matrix per algebra generator, and a square-zero degree -1 differential
/// compatible with the actions (Leibniz) and the exterior relations.
/// Construction fails loudly on any violated invariant; after that the value
/// is frozen.
template <class F>
struct DGModule {
    const ExteriorAlgebra* over = nullptr;
    F field;
    std::vector<int> degrees;
    std::vector<SparseMat<F>> actions;
    SparseMat<F> diff;

    std::uint32_t dim() const { return static_cast<std::uint32_t>(degrees.size()); }
    int min_degree() const {
        int m = INT32_MAX;
        for (int d : degrees) m = std::min(m, d);
        return dim() ? m : 0;
    }
    int max_degree() const {
        int m = INT32_MIN;
        for (int d : degrees) m = std::max(m, d);
        return dim() ? m : 0;
    }

    void validate() const {
        const F& f = field;
        if (!over) throw std::invalid_argument("DG module without algebra");
        if (actions.size() != over->gens())
            throw std::invalid_argument("one action matrix per generator required");
        if (diff.rows() != dim() || diff.cols() != dim())
            throw std::invalid_argument("differential has wrong shape");
        for (std::uint32_t g = 0; g < over->gens(); ++g) {
            const auto& a = actions[g];
            if (a.rows() != dim() || a.cols() != dim())
                throw std::invalid_argument("action matrix has wrong shape");
            int dg = over->gen_degrees()[g];
            for (std::uint32_t i = 0; i < a.rows(); ++i)
                for (const auto& e : a.row(i))
                    if (degrees[i] != degrees[e.col] + dg)
                        throw std::invalid_argument("action entry violates generator degree");
        }
        for (std::uint32_t i = 0; i < diff.rows(); ++i)
            for (const auto& e : diff.row(i))
                if (degrees[i] != degrees[e.col] - 1)
                    throw std::invalid_argument("differential entry violates degree -1");
        if (!SparseMat<F>::mul(f, diff, diff).is_zero())
            throw std::invalid_argument("differential does not square to zero");
        // Leibniz with d_Lambda = 0 and odd generators: d*a + a*d = 0
        for (std::uint32_t g = 0; g < over->gens(); ++g) {
            auto da = SparseMat<F>::mul(f, diff, actions[g]);
            auto ad = SparseMat<F>::mul(f, actions[g], diff);
            if (!SparseMat<F>::axpy(f, da, f.one(), ad).is_zero())
                throw std::invalid_argument("Leibniz rule fails for generator " +
                                            std::to_string(g + 1));
        }
        // exterior relations: squares and anticommutators vanish
        for (std::uint32_t g = 0; g < over->gens(); ++g) {
            if (!SparseMat<F>::mul(f, actions[g], actions[g]).is_zero())
                throw std::invalid_argument("action of generator " + std::to_string(g + 1) +
                                            " does not square to zero");
            for (std::uint32_t h = g + 1; h < over->gens(); ++h) {
                auto gh = SparseMat<F>::mul(f, actions[g], actions[h]);
                auto hg = SparseMat<F>::mul(f, actions[h], actions[g]);
                if (!SparseMat<F>::axpy(f, gh, f.one(), hg).is_zero())
                    throw std::invalid_argument("actions fail anticommutativity");
            }
        }
    }

    /// Action of the basis monomial with the given index, as a matrix
    /// (product of generator actions in increasing index order).
    SparseMat<F> monomial_action(std::uint32_t basis_index) const {
        std::uint32_t mask = over->mask_of(basis_index);
        SparseMat<F> m = SparseMat<F>::identity(field, dim());
        for (std::uint32_t g = over->gens(); g-- > 0;)
            if (mask & (1u << g)) m = SparseMat<F>::mul(field, actions[g], m);
        return m;
    }
};

/// The residue field k as a DG module (one generator in degree 0).
template <class F>
DGModule<F> residue_field_module(const F& f, const ExteriorAlgebra& a) {
    DGModule<F> u;
    u.over = &a;
    u.field = f;
    u.degrees = {0};
    u.actions.assign(a.gens(), SparseMat<F>(1, 1));
    u.diff = SparseMat<F>(1, 1);
    u.validate();
    return u;
}

/// The algebra as a module over itself (zero differential).
template <class F>
DGModule<F> algebra_as_module(const F& f, const ExteriorAlgebra& a) {
    DGModule<F> u;
    u.over = &a;
    u.field = f;
    u.degrees.resize(a.dim());
    for (std::uint32_t i = 0; i < a.dim(); ++i) u.degrees[i] = a.degree(i);
    for (std::uint32_t g = 0; g < a.gens(); ++g) u.actions.push_back(exterior_gen_op(f, a, g));
    u.diff = SparseMat<F>(a.dim(), a.dim());
    u.validate();
    return u;
}

/// Lambda/(xi_i : i in kill): square-free monomials avoiding the killed
/// generators, killed generators acting as zero.
template <class F>
DGModule<F> quotient_dg_module(const F& f, const ExteriorAlgebra& a,
                               const std::vector<std::uint32_t>& kill) {
    std::uint32_t kill_mask = 0;
    for (std::uint32_t g : kill) {
        if (g < 1 || g > a.gens())
            throw std::invalid_argument("kill index outside 1..c");
        kill_mask |= 1u << (g - 1);
    }
    std::vector<std::uint32_t> keep;  // algebra basis indices that survive
    std::vector<std::uint32_t> pos(a.dim(), UINT32_MAX);
    for (std::uint32_t i = 0; i < a.dim(); ++i)
        if (!(a.mask_of(i) & kill_mask)) {
            pos[i] = static_cast<std::uint32_t>(keep.size());
            keep.push_back(i);
        }
    DGModule<F> u;
    u.over = &a;
    u.field = f;
    u.degrees.resize(keep.size());
    for (std::uint32_t j = 0; j < keep.size(); ++j) u.degrees[j] = a.degree(keep[j]);
    for (std::uint32_t g = 0; g < a.gens(); ++g) {
        SparseMat<F> m(static_cast<std::uint32_t>(keep.size()),
                       static_cast<std::uint32_t>(keep.size()));
        if (!(kill_mask & (1u << g))) {
            std::uint32_t gi = a.index_of(1u << g);
            for (std::uint32_t j = 0; j < keep.size(); ++j) {
                std::uint32_t out;
                int sign;
                if (a.product(gi, keep[j], out, sign) && pos[out] != UINT32_MAX)
                    m.set(f, pos[out], j, sign > 0 ? f.one() : f.neg(f.one()));
            }
        }
        u.actions.push_back(std::move(m));
    }
    u.diff = SparseMat<F>(static_cast<std::uint32_t>(keep.size()),
                          static_cast<std::uint32_t>(keep.size()));
    u.validate();
    return u;
}

/// U tensor_k C for a finite complex C of k-spaces: degrees add, the
/// differential is the signed total differential, actions ride on the U
/// factor.
template <class F>
DGModule<F> tensor_free(const DGModule<F>& u, const KComplex<F>& c) {
    const F& f = u.field;
    c.validate();
    DGModule<F> t;
    t.over = u.over;
    t.field = f;
    std::uint32_t n = u.dim(), m = c.dim();
    t.degrees.resize((std::size_t)n * m);
    auto idx = [m](std::uint32_t a, std::uint32_t b) { return a * m + b; };
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < m; ++b) t.degrees[idx(a, b)] = u.degrees[a] + c.degrees[b];
    SparseMat<F> d(n * m, n * m);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < m; ++b) {
            // d(u ox v) = du ox v + (-1)^{|u|} u ox dv
            for (std::uint32_t i = 0; i < n; ++i) {
                auto v = u.diff.get(f, i, a);
                if (!f.is_zero(v)) d.set(f, idx(i, b), idx(a, b), v);
            }
            auto sgn = (u.degrees[a] % 2 == 0) ? f.one() : f.neg(f.one());
            for (std::uint32_t j = 0; j < m; ++j) {
                auto v = c.diff.get(f, j, b);
                if (!f.is_zero(v)) d.set(f, idx(a, j), idx(a, b), f.mul(sgn, v));
            }
        }
    t.diff = std::move(d);
    for (std::uint32_t g = 0; g < u.over->gens(); ++g) {
        SparseMat<F> ag(n * m, n * m);
        for (std::uint32_t a = 0; a < n; ++a)
            for (const auto& e : u.actions[g].row(a)) {
                // row a, col e.col in u-action
                for (std::uint32_t b = 0; b < m; ++b) ag.set(f, idx(a, b), idx(e.col, b), e.val);
            }
        t.actions.push_back(std::move(ag));
    }
    t.validate();
    return t;
}

/// Per-degree homology dimensions with representative cycle columns.
template <class F>
struct HomologyData {
    std::map<int, std::uint32_t> dims;
    std::map<int, SparseMat<F>> reps;  // columns: cycle representatives in the strand basis
    std::map<int, std::vector<std::uint32_t>> strand;  // strand basis: module indices

    std::uint32_t total() const {
        std::uint32_t t = 0;
        for (auto& [d, v] : dims) t += v;
        return t;
    }
    std::vector<int> support() const {
        std::vector<int> s;
        for (auto& [d, v] : dims)
            if (v) s.push_back(d);
        return s;
    }
};

/// Homology of the strand decomposition of (degrees, diff). Representatives
/// are canonical kernel-basis columns completing a basis of the boundaries.
template <class F>
HomologyData<F> complex_homology(const F& f, const std::vector<int>& degrees,
                                 const SparseMat<F>& diff) {
    HomologyData<F> h;
    if (degrees.empty()) return h;
    std::map<int, std::vector<std::uint32_t>> strands;
    for (std::uint32_t i = 0; i < degrees.size(); ++i) strands[degrees[i]].push_back(i);
    auto dt = diff.transpose();  // row j = column j of diff

    for (auto& [n, basis] : strands) {
        auto lower = strands.find(n - 1);
        auto upper = strands.find(n + 1);
        std::uint32_t dn = static_cast<std::uint32_t>(basis.size());
        std::map<std::uint32_t, std::uint32_t> pos;
        for (std::uint32_t i = 0; i < dn; ++i) pos[basis[i]] = i;

        SparseMat<F> dmat(lower == strands.end() ? 0 : (std::uint32_t)lower->second.size(), dn);
        if (lower != strands.end()) {
            std::map<std::uint32_t, std::uint32_t> lpos;
            for (std::uint32_t i = 0; i < lower->second.size(); ++i) lpos[lower->second[i]] = i;
            for (std::uint32_t j = 0; j < dn; ++j)
                for (const auto& e : dt.row(basis[j])) dmat.set(f, lpos.at(e.col), j, e.val);
        }
        SparseMat<F> z = kernel_basis(f, dmat);  // dn x (cycle count)

        IncrementalBasis<F> span(f);
        if (upper != strands.end()) {
            for (std::uint32_t j = 0; j < upper->second.size(); ++j) {
                typename SparseMat<F>::Row brow;
                for (const auto& e : dt.row(upper->second[j])) brow.push_back({pos.at(e.col), e.val});
                span.add(std::move(brow));
            }
        }
        std::uint32_t brank = span.rank();
        if (z.cols() < brank) throw std::logic_error("boundaries exceed cycles");
        std::uint32_t hdim = z.cols() - brank;

        SparseMat<F> reps(dn, hdim);
        if (hdim > 0) {
            auto zt = z.transpose();
            std::uint32_t got = 0;
            for (std::uint32_t zi = 0; zi < zt.rows() && got < hdim; ++zi) {
                if (span.add(zt.row(zi))) {
                    for (const auto& e : zt.row(zi)) reps.set(f, e.col, got, e.val);
                    ++got;
                }
            }
            if (got != hdim) throw std::logic_error("cycle representatives incomplete");
        }
        h.dims[n] = hdim;
        h.reps[n] = std::move(reps);
        h.strand[n] = basis;
    }
    return h;
}

template <class F>
HomologyData<F> homology(const DGModule<F>& u) {
    return complex_homology(u.field, u.degrees, u.diff);
}

template <class F>
HomologyData<F> homology(const KComplex<F>& c) {
    return complex_homology(c.field, c.degrees, c.diff);
}

}  // namespace homalg
