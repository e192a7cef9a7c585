#pragma once

#include <set>
#include <tuple>
#include <vector>

#include "homalg/poly.hpp"

namespace homalg {

/// Total reduction of p modulo G: the remainder has no term divisible by any
/// leading monomial of G. G entries must be monic and nonzero.
template <class F>
Poly<F> reduce_full(const F& f, Poly<F> p, const std::vector<Poly<F>>& basis) {
    Poly<F> rem;
    while (!p.is_zero()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.lm().divides(p.lm())) {
                p = poly_sub(f, p, poly_mul_term(f, g, p.lm().div(g.lm()), p.lc()));
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.terms.push_back(p.terms.front());
            p.terms.erase(p.terms.begin());
        }
    }
    return rem;
}

/// Buchberger with the coprimality criterion; returns the reduced Groebner
/// basis (monic, tails reduced, sorted ascending by leading monomial), which
/// is unique for the fixed degrevlex order.
template <class F>
std::vector<Poly<F>> groebner_basis(const F& f, std::vector<Poly<F>> gens) {
    std::vector<Poly<F>> g;
    for (auto& p : gens)
        if (!p.is_zero()) g.push_back(poly_monic(f, p));

    // pair queue ordered by (lcm degree, lcm, i, j) for determinism
    struct PairKey {
        int deg;
        Mono lcm;
        std::size_t i, j;
        bool operator<(const PairKey& o) const {
            if (deg != o.deg) return deg < o.deg;
            if (!(lcm == o.lcm)) return degrevlex_less(lcm, o.lcm);
            return std::tie(i, j) < std::tie(o.i, o.j);
        }
    };
    std::set<PairKey> pairs;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Mono l = g[i].lm().lcm(g[j].lm());
            pairs.insert({l.deg(), l, i, j});
        }
    };
    for (std::size_t j = 0; j < g.size(); ++j) push_pairs(j);

    while (!pairs.empty()) {
        PairKey k = *pairs.begin();
        pairs.erase(pairs.begin());
        const auto& a = g[k.i];
        const auto& b = g[k.j];
        if (a.lm().coprime(b.lm())) continue;
        Mono l = a.lm().lcm(b.lm());
        Poly<F> s = poly_sub(f, poly_mul_term(f, a, l.div(a.lm()), f.one()),
                             poly_mul_term(f, b, l.div(b.lm()), f.one()));
        Poly<F> r = reduce_full(f, std::move(s), g);
        if (!r.is_zero()) {
            g.push_back(poly_monic(f, r));
            push_pairs(g.size() - 1);
        }
    }

    // minimalize: drop elements whose lead divides by another lead
    std::vector<Poly<F>> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (i == j) continue;
            if (g[j].lm().divides(g[i].lm()) && !(g[j].lm() == g[i].lm() && j > i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    // inter-reduce tails
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly<F>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = poly_monic(f, reduce_full(f, minimal[i], others));
    }
    std::sort(minimal.begin(), minimal.end(),
              [](const Poly<F>& a, const Poly<F>& b) { return degrevlex_less(a.lm(), b.lm()); });
    return minimal;
}

}  // namespace homalg
