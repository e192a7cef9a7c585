#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "homalg/field.hpp"

namespace homalg {

/// Monomial in x_1..x_e, all variables of internal degree 1.
struct Mono {
    std::vector<std::uint8_t> e;

    static Mono one(std::uint32_t nvars) { return Mono{std::vector<std::uint8_t>(nvars, 0)}; }
    static Mono var(std::uint32_t nvars, std::uint32_t i) {
        Mono m = one(nvars);
        m.e[i] = 1;
        return m;
    }

    int deg() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const { return deg() == 0; }

    bool divides(const Mono& o) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Mono mul(const Mono& o) const {
        Mono r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = static_cast<std::uint8_t>(r.e[i] + o.e[i]);
        return r;
    }
    Mono div(const Mono& o) const {
        Mono r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = static_cast<std::uint8_t>(r.e[i] - o.e[i]);
        return r;
    }
    Mono lcm(const Mono& o) const {
        Mono r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = std::max(r.e[i], o.e[i]);
        return r;
    }
    bool coprime(const Mono& o) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }
    bool operator==(const Mono& o) const { return e == o.e; }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!s.empty()) s += "*";
            s += "x" + std::to_string(i + 1);
            if (e[i] > 1) s += "^" + std::to_string((int)e[i]);
        }
        return s.empty() ? "1" : s;
    }
};

/// Degree-reverse-lexicographic order with x_1 > x_2 > ... > x_e.
inline bool degrevlex_less(const Mono& a, const Mono& b) {
    int da = a.deg(), db = b.deg();
    if (da != db) return da < db;
    for (std::size_t i = a.e.size(); i-- > 0;) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];  // larger trailing exponent = smaller
    }
    return false;
}

inline bool mono_lt_total(const Mono& a, const Mono& b) { return degrevlex_less(a, b); }

/// Polynomial with terms sorted descending in degrevlex; leading term first.
template <class F>
struct Poly {
    using Val = typename F::Val;
    struct Term {
        Mono m;
        Val c;
    };
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Mono& lm() const { return terms.front().m; }
    const Val& lc() const { return terms.front().c; }
    int deg() const { return is_zero() ? -1 : terms.front().m.deg(); }

    bool homogeneous() const {
        for (const auto& t : terms)
            if (t.m.deg() != deg()) return false;
        return true;
    }

    static Poly zero() { return {}; }
    static Poly term(const F& f, Mono m, Val c) {
        Poly p;
        if (!f.is_zero(c)) p.terms.push_back({std::move(m), std::move(c)});
        return p;
    }

    std::string str(const F& f) const {
        if (is_zero()) return "0";
        std::string s;
        for (const auto& t : terms) {
            if (!s.empty()) s += " + ";
            std::string cs = f.str(t.c);
            if (t.m.is_one()) s += cs;
            else if (cs == "1") s += t.m.str();
            else s += cs + "*" + t.m.str();
        }
        return s;
    }
};

template <class F>
Poly<F> poly_add(const F& f, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r;
    auto ia = a.terms.begin(), ib = b.terms.begin();
    while (ia != a.terms.end() || ib != b.terms.end()) {
        if (ib == b.terms.end() || (ia != a.terms.end() && degrevlex_less(ib->m, ia->m))) {
            r.terms.push_back(*ia++);
        } else if (ia == a.terms.end() || degrevlex_less(ia->m, ib->m)) {
            r.terms.push_back(*ib++);
        } else {
            auto c = f.add(ia->c, ib->c);
            if (!f.is_zero(c)) r.terms.push_back({ia->m, c});
            ++ia; ++ib;
        }
    }
    return r;
}

template <class F>
Poly<F> poly_scale(const F& f, const Poly<F>& a, const typename F::Val& s) {
    Poly<F> r;
    if (f.is_zero(s)) return r;
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) r.terms.push_back({t.m, f.mul(t.c, s)});
    return r;
}

template <class F>
Poly<F> poly_sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
    return poly_add(f, a, poly_scale(f, b, f.neg(f.one())));
}

template <class F>
Poly<F> poly_mul_term(const F& f, const Poly<F>& a, const Mono& m, const typename F::Val& c) {
    Poly<F> r;
    if (f.is_zero(c)) return r;
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) r.terms.push_back({t.m.mul(m), f.mul(t.c, c)});
    return r;  // multiplying by a fixed monomial preserves the term order
}

template <class F>
Poly<F> poly_mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r;
    for (const auto& t : b.terms) r = poly_add(f, r, poly_mul_term(f, a, t.m, t.c));
    return r;
}

template <class F>
Poly<F> poly_monic(const F& f, const Poly<F>& a) {
    if (a.is_zero()) return a;
    return poly_scale(f, a, f.inv(a.lc()));
}

/// Parse an integer-coefficient polynomial in x1..x<nvars>; `^` for powers,
/// `*` optional between factors. Throws std::invalid_argument with a
/// character position on malformed input.
template <class F>
Poly<F> parse_poly(const F& f, std::uint32_t nvars, const std::string& text) {
    Poly<F> result;
    std::size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(i) +
                                    ": " + msg);
    };
    auto parse_uint = [&]() -> long long {
        std::size_t start = i;
        long long v = 0;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) {
            v = v * 10 + (text[i] - '0');
            if (v > 1'000'000'000LL) fail("number too large");
            ++i;
        }
        if (i == start) fail("expected a number");
        return v;
    };

    skip();
    if (i >= text.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
        skip();
        if (i >= text.size()) {
            if (first) fail("empty polynomial");
            break;
        }
        long long sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
            while (i < text.size() && (text[i] == '+' || text[i] == '-')) {
                if (text[i] == '-') sign = -sign;
                ++i;
                skip();
            }
        } else if (!first) {
            fail("expected '+' or '-' between terms");
        }
        // one term: product of factors
        long long coeff = sign;
        Mono m = Mono::one(nvars);
        bool any_factor = false;
        while (true) {
            skip();
            if (i < text.size() && text[i] == '*') {
                if (!any_factor) fail("unexpected '*'");
                ++i;
                skip();
            }
            if (i < text.size() && std::isdigit((unsigned char)text[i])) {
                long long v = parse_uint();
                coeff *= v;
                if (coeff > (1LL << 50) || coeff < -(1LL << 50)) fail("coefficient too large");
                any_factor = true;
                continue;
            }
            if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) {
                ++i;
                long long vi = parse_uint();
                if (vi < 1 || vi > nvars)
                    fail("variable x" + std::to_string(vi) + " outside x1..x" +
                         std::to_string(nvars));
                long long pw = 1;
                skip();
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    skip();
                    pw = parse_uint();
                    if (pw > 200) fail("exponent too large");
                }
                m.e[vi - 1] = static_cast<std::uint8_t>(m.e[vi - 1] + pw);
                any_factor = true;
                continue;
            }
            break;
        }
        if (!any_factor) fail("expected a term");
        result = poly_add(f, result, Poly<F>::term(f, m, f.from_int(coeff)));
        first = false;
    }
    return result;
}

}  // namespace homalg
