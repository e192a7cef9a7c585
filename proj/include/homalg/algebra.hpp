#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "homalg/groebner.hpp"
#include "homalg/poly.hpp"
#include "homalg/rref.hpp"
#include "homalg/sparse.hpp"

namespace homalg {

/// Exterior algebra on alternating generators xi_1..xi_c of positive odd
/// degrees. The monomial basis consists of all square-free monomials, listed
/// lexicographically by index word: (), (1), (1,2), (1,2,3), (1,3), (2), ...
/// Frozen after construction; all queries are read-only.
class ExteriorAlgebra {
public:
    explicit ExteriorAlgebra(std::vector<int> degrees);

    std::uint32_t gens() const { return c_; }
    const std::vector<int>& gen_degrees() const { return degrees_; }
    std::uint32_t dim() const { return static_cast<std::uint32_t>(masks_.size()); }
    int top_degree() const { return top_degree_; }

    std::uint32_t mask_of(std::uint32_t basis_index) const { return masks_[basis_index]; }
    std::uint32_t index_of(std::uint32_t mask) const { return index_of_mask_[mask]; }
    int degree(std::uint32_t basis_index) const { return basis_degree_[basis_index]; }

    /// Product xi_S * xi_T: zero when the supports meet, otherwise the basis
    /// index of the union with the Koszul sign.
    bool product(std::uint32_t a, std::uint32_t b, std::uint32_t& out_index, int& out_sign) const;

    /// Indices of basis monomials of the given total degree, ascending.
    const std::vector<std::uint32_t>& basis_of_degree(int d) const;

    std::string basis_label(std::uint32_t basis_index) const;

private:
    std::uint32_t c_;
    std::vector<int> degrees_;
    std::vector<std::uint32_t> masks_;          // basis index -> generator mask
    std::vector<std::uint32_t> index_of_mask_;  // mask -> basis index
    std::vector<int> basis_degree_;
    int top_degree_;
    std::vector<std::vector<std::uint32_t>> by_degree_;
    std::vector<std::uint32_t> empty_;
};

/// Matrix of left multiplication by xi_{gen+1} on the monomial basis.
template <class F>
SparseMat<F> exterior_gen_op(const F& f, const ExteriorAlgebra& a, std::uint32_t gen) {
    SparseMat<F> m(a.dim(), a.dim());
    std::uint32_t gi = a.index_of(1u << gen);
    for (std::uint32_t j = 0; j < a.dim(); ++j) {
        std::uint32_t out;
        int sign;
        if (a.product(gi, j, out, sign))
            m.set(f, out, j, sign > 0 ? f.one() : f.neg(f.one()));
    }
    return m;
}

/// Finite-dimensional graded quotient k[x_1..x_e]/I with deg x_i = 1,
/// presented by homogeneous relations of degree >= 2. Construction computes
/// the reduced degrevlex Groebner basis, certifies finite dimension, and
/// freezes the standard-monomial basis together with multiplication data.
template <class F>
class QuotientRing {
public:
    QuotientRing(const F& f, std::uint32_t nvars, std::vector<Poly<F>> relations)
        : field_(f), nvars_(nvars), relations_(relations) {
        for (const auto& r : relations) {
            if (r.is_zero()) continue;
            for (const auto& t : r.terms) {
                if (t.m.deg() == 1)
                    throw std::invalid_argument(
                        "relation '" + r.str(field_) +
                        "' has a linear part; eliminate the variable first");
                if (t.m.deg() == 0)
                    throw std::invalid_argument("relation '" + r.str(field_) +
                                                "' has a constant term");
            }
            if (!r.homogeneous())
                throw std::invalid_argument("relation '" + r.str(field_) +
                                            "' is not homogeneous (v1 accepts graded input only)");
        }
        gb_ = groebner_basis(field_, std::move(relations));
        // zero-dimensionality: a pure power of every variable must lead
        for (std::uint32_t v = 0; v < nvars_; ++v) {
            bool found = false;
            for (const auto& g : gb_) {
                const Mono& m = g.lm();
                bool pure = m.e[v] > 0;
                for (std::uint32_t w = 0; w < nvars_ && pure; ++w)
                    if (w != v && m.e[w]) pure = false;
                if (pure) { found = true; break; }
            }
            if (!found)
                throw std::invalid_argument(
                    "infinite-dimensional quotient: no pure power of x" + std::to_string(v + 1) +
                    " in the leading ideal");
        }
        enumerate_basis();
        build_var_ops();
    }

    const F& field() const { return field_; }
    std::uint32_t nvars() const { return nvars_; }
    std::uint32_t edim() const { return nvars_; }
    const std::vector<Poly<F>>& groebner() const { return gb_; }
    const std::vector<Poly<F>>& relations() const { return relations_; }

    std::uint32_t dim() const { return static_cast<std::uint32_t>(basis_.size()); }
    const std::vector<Mono>& basis() const { return basis_; }
    const Mono& basis_mono(std::uint32_t i) const { return basis_[i]; }
    int basis_degree(std::uint32_t i) const { return basis_[i].deg(); }
    int top_degree() const { return top_degree_; }
    /// Loewy length of the ring itself: m^l = 0, m^{l-1} != 0.
    int loewy_length() const { return top_degree_ + 1; }
    std::uint32_t hilbert(int d) const {
        return d >= 0 && d <= top_degree_ ? hilbert_[d] : 0;
    }
    std::uint32_t basis_index(const Mono& m) const {
        auto it = index_.find(key(m));
        if (it == index_.end()) throw std::logic_error("not a standard monomial");
        return it->second;
    }
    bool is_standard(const Mono& m) const { return index_.count(key(m)) != 0; }

    /// Unique remainder modulo the reduced Groebner basis.
    Poly<F> normal_form(const Poly<F>& p) const {
        if (!p.is_zero() && p.terms.front().m.e.size() != nvars_)
            throw std::invalid_argument("polynomial uses variables outside x1..x" +
                                        std::to_string(nvars_));
        return reduce_full(field_, p, gb_);
    }

    /// Coordinates of normal_form(p) in the standard-monomial basis.
    std::vector<typename F::Val> to_coords(const Poly<F>& p) const {
        Poly<F> nf = normal_form(p);
        std::vector<typename F::Val> v(dim(), field_.zero());
        for (const auto& t : nf.terms) v[basis_index(t.m)] = t.c;
        return v;
    }

    /// Matrix of left multiplication by x_v on the standard basis.
    const SparseMat<F>& var_op(std::uint32_t v) const { return var_ops_[v]; }

    /// Matrix of left multiplication by a homogeneous element.
    SparseMat<F> mult_operator(const Poly<F>& a) const {
        if (!a.is_zero() && !a.homogeneous())
            throw std::invalid_argument("mult_operator requires a homogeneous element");
        SparseMat<F> m(dim(), dim());
        for (std::uint32_t j = 0; j < dim(); ++j) {
            Poly<F> pj = Poly<F>::term(field_, basis_[j], field_.one());
            Poly<F> prod = normal_form(poly_mul(field_, a, pj));
            for (const auto& t : prod.terms) m.set(field_, basis_index(t.m), j, t.c);
        }
        return m;
    }

    /// Indices of standard monomials of total degree d, ascending.
    const std::vector<std::uint32_t>& basis_of_degree(int d) const {
        static const std::vector<std::uint32_t> none;
        return (d >= 0 && d <= top_degree_) ? by_degree_[d] : none;
    }

private:
    static std::string key(const Mono& m) {
        return std::string(m.e.begin(), m.e.end());
    }

    void enumerate_basis() {
        // standard monomials: not divisible by any GB leading monomial
        std::vector<Mono> leads;
        for (const auto& g : gb_) leads.push_back(g.lm());
        auto is_std = [&](const Mono& m) {
            for (const auto& l : leads)
                if (l.divides(m)) return false;
            return true;
        };
        std::vector<Mono> cur{Mono::one(nvars_)};
        std::vector<Mono> all{Mono::one(nvars_)};
        while (!cur.empty()) {
            std::vector<Mono> next;
            for (const auto& m : cur) {
                for (std::uint32_t v = 0; v < nvars_; ++v) {
                    Mono m2 = m.mul(Mono::var(nvars_, v));
                    // avoid duplicates: only extend by variables <= first support var
                    bool lead_ok = true;
                    for (std::uint32_t w = 0; w < v; ++w)
                        if (m.e[w]) { lead_ok = false; break; }
                    if (!lead_ok) continue;
                    if (is_std(m2)) next.push_back(m2);
                }
            }
            for (auto& m : next) all.push_back(m);
            cur = std::move(next);
        }
        std::sort(all.begin(), all.end(), [](const Mono& a, const Mono& b) {
            if (a.deg() != b.deg()) return a.deg() < b.deg();
            return !degrevlex_less(a, b) && !(a == b);  // descending within a degree
        });
        basis_ = std::move(all);
        top_degree_ = basis_.back().deg();
        hilbert_.assign(top_degree_ + 1, 0);
        by_degree_.assign(top_degree_ + 1, {});
        for (std::uint32_t i = 0; i < basis_.size(); ++i) {
            index_[key(basis_[i])] = i;
            hilbert_[basis_[i].deg()]++;
            by_degree_[basis_[i].deg()].push_back(i);
        }
    }

    void build_var_ops() {
        for (std::uint32_t v = 0; v < nvars_; ++v)
            var_ops_.push_back(mult_operator(Poly<F>::term(field_, Mono::var(nvars_, v), field_.one())));
    }

    F field_;
    std::uint32_t nvars_;
    std::vector<Poly<F>> relations_;
    std::vector<Poly<F>> gb_;
    std::vector<Mono> basis_;
    std::map<std::string, std::uint32_t> index_;
    std::vector<std::uint32_t> hilbert_;
    std::vector<std::vector<std::uint32_t>> by_degree_;
    std::vector<SparseMat<F>> var_ops_;
    int top_degree_ = 0;
};

/// The polynomial coordinate ring S on chi_1..chi_c with positive weights
/// w_i = d_i + 1. The paper's generators sit in negative cohomological
/// degree; reported degrees use the positive-weight convention.
class PolyCoordRing {
public:
    explicit PolyCoordRing(std::vector<int> weights) : weights_(std::move(weights)) {
        for (int w : weights_)
            if (w <= 0) throw std::invalid_argument("weights must be positive");
    }

    std::uint32_t vars() const { return static_cast<std::uint32_t>(weights_.size()); }
    const std::vector<int>& weights() const { return weights_; }

    /// dim_k S_n = #monomials of weight n = coefficient of t^n in
    /// 1/prod(1 - t^{w_i}).
    std::uint64_t piece_dim(int n) const;

    /// Exponent tuples of weight n, in lexicographic order.
    std::vector<std::vector<int>> monomials_of_weight(int n) const;

private:
    std::vector<int> weights_;
};

}  // namespace homalg
