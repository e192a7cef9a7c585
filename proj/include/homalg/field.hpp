#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace homalg {

enum class FieldKind { prime, rational };

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Runtime description of the coefficient field.
struct FieldSpec {
    FieldKind kind = FieldKind::prime;
    std::uint32_t p = 101;  // meaningful only when kind == prime

    void validate() const {
        if (kind == FieldKind::prime && !is_prime(p))
            throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
    }
    bool operator==(const FieldSpec& o) const {
        return kind == o.kind && (kind == FieldKind::rational || p == o.p);
    }
    std::string describe() const {
        return kind == FieldKind::prime ? "prime:" + std::to_string(p) : "rational";
    }
};

/// Arithmetic in F_p for prime p < 2^31. Values are canonical residues in [0, p).
class Fp {
public:
    using Val = std::uint32_t;

    Fp() : p_(101) {}  // project-wide default field
    explicit Fp(std::uint32_t p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
    }

    std::uint32_t modulus() const { return p_; }
    FieldSpec spec() const { return FieldSpec{FieldKind::prime, p_}; }

    Val zero() const { return 0; }
    Val one() const { return 1; }
    bool is_zero(Val a) const { return a == 0; }

    Val add(Val a, Val b) const {
        Val s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Val sub(Val a, Val b) const { return a >= b ? a - b : a + p_ - b; }
    Val neg(Val a) const { return a == 0 ? 0 : p_ - a; }
    Val mul(Val a, Val b) const {
        return static_cast<Val>((std::uint64_t)a * b % p_);
    }
    Val inv(Val a) const {
        if (a == 0) throw std::domain_error("division by zero in F_p");
        // extended Euclid on (a, p)
        std::int64_t t = 0, nt = 1, r = p_, nr = a;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += p_;
        return static_cast<Val>(t);
    }
    Val from_int(long long n) const {
        long long r = n % (long long)p_;
        if (r < 0) r += p_;
        return static_cast<Val>(r);
    }
    std::string str(Val a) const { return std::to_string(a); }

    static constexpr bool is_prime_field = true;

private:
    std::uint32_t p_;
};

/// Exact rational arithmetic via GMP. mpq_class values stay in lowest terms
/// with positive denominator.
class Rq {
public:
    using Val = mpq_class;

    FieldSpec spec() const { return FieldSpec{FieldKind::rational, 0}; }

    Val zero() const { return Val(0); }
    Val one() const { return Val(1); }
    bool is_zero(const Val& a) const { return sgn(a) == 0; }

    Val add(const Val& a, const Val& b) const { return a + b; }
    Val sub(const Val& a, const Val& b) const { return a - b; }
    Val neg(const Val& a) const { return -a; }
    Val mul(const Val& a, const Val& b) const { return a * b; }
    Val inv(const Val& a) const {
        if (sgn(a) == 0) throw std::domain_error("division by zero in Q");
        return 1 / a;
    }
    Val from_int(long long n) const { return Val((long)n); }
    std::string str(const Val& a) const { return a.get_str(); }

    static constexpr bool is_prime_field = false;
};

}  // namespace homalg
