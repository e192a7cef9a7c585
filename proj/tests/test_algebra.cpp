#include "doctest.h"

#include "homalg/algebra.hpp"

using namespace homalg;

namespace {

std::vector<Poly<Fp>> squares_ideal(const Fp& f, std::uint32_t e) {
    std::vector<Poly<Fp>> rels;
    for (std::uint32_t i = 0; i < e; ++i)
        rels.push_back(parse_poly(f, e, "x" + std::to_string(i + 1) + "^2"));
    return rels;
}

// Relations of the Gorenstein non-ci example ring for c variables:
// x_h^2 - x_{h+1}^2 (1 <= h < c) together with all x_i x_j (i < j).
std::vector<Poly<Fp>> gorenstein_relations(const Fp& f, std::uint32_t c) {
    std::vector<Poly<Fp>> rels;
    for (std::uint32_t h = 1; h < c; ++h)
        rels.push_back(parse_poly(f, c, "x" + std::to_string(h) + "^2 - x" +
                                            std::to_string(h + 1) + "^2"));
    for (std::uint32_t i = 1; i <= c; ++i)
        for (std::uint32_t j = i + 1; j <= c; ++j)
            rels.push_back(parse_poly(f, c, "x" + std::to_string(i) + "*x" + std::to_string(j)));
    return rels;
}

}  // namespace

TEST_CASE("exterior algebra on two degree-1 generators") {
    ExteriorAlgebra a({1, 1});
    CHECK(a.dim() == 4);
    std::multiset<int> degs;
    for (std::uint32_t i = 0; i < a.dim(); ++i) degs.insert(a.degree(i));
    CHECK(degs == std::multiset<int>{0, 1, 1, 2});
}

TEST_CASE("exterior algebra on one degree-3 generator") {
    ExteriorAlgebra a({3});
    CHECK(a.dim() == 2);
    CHECK(a.degree(0) == 0);
    CHECK(a.degree(1) == 3);
    CHECK(a.top_degree() == 3);
}

TEST_CASE("sign rule: xi2*xi1 = -xi1xi2 and xi1xi2*xi3 = xi1xi2xi3") {
    ExteriorAlgebra a({1, 1, 1});
    std::uint32_t out;
    int sign;
    REQUIRE(a.product(a.index_of(0b010), a.index_of(0b001), out, sign));
    CHECK(out == a.index_of(0b011));
    CHECK(sign == -1);
    REQUIRE(a.product(a.index_of(0b011), a.index_of(0b100), out, sign));
    CHECK(out == a.index_of(0b111));
    CHECK(sign == 1);
    // squares vanish
    CHECK(!a.product(a.index_of(0b001), a.index_of(0b001), out, sign));
}

TEST_CASE("even or non-positive exterior degrees are rejected") {
    CHECK_THROWS_AS(ExteriorAlgebra({2}), std::invalid_argument);
    CHECK_THROWS_AS(ExteriorAlgebra({1, -3}), std::invalid_argument);
    CHECK_THROWS_AS(ExteriorAlgebra({0}), std::invalid_argument);
}

TEST_CASE("exterior dimension and Hilbert function are binomial") {
    ExteriorAlgebra a({1, 1, 1, 1});
    CHECK(a.dim() == 16);
    int binom[5] = {1, 4, 6, 4, 1};
    for (int j = 0; j <= 4; ++j)
        CHECK(a.basis_of_degree(j).size() == (std::size_t)binom[j]);
}

TEST_CASE("generator operators anticommute and square to zero") {
    Fp f(101);
    ExteriorAlgebra a({1, 1, 1});
    for (std::uint32_t i = 0; i < 3; ++i) {
        auto mi = exterior_gen_op(f, a, i);
        CHECK(SparseMat<Fp>::mul(f, mi, mi).is_zero());
        for (std::uint32_t j = i + 1; j < 3; ++j) {
            auto mj = exterior_gen_op(f, a, j);
            auto anti = SparseMat<Fp>::axpy(f, SparseMat<Fp>::mul(f, mi, mj), f.one(),
                                            SparseMat<Fp>::mul(f, mj, mi));
            CHECK(anti.is_zero());
        }
    }
}

TEST_CASE("quotient by squares of three variables") {
    Fp f(101);
    QuotientRing<Fp> r(f, 3, squares_ideal(f, 3));
    CHECK(r.dim() == 8);
    CHECK(r.loewy_length() == 4);  // m^4 = 0, x1x2x3 != 0
    CHECK(r.top_degree() == 3);
    CHECK(r.hilbert(0) == 1);
    CHECK(r.hilbert(1) == 3);
    CHECK(r.hilbert(2) == 3);
    CHECK(r.hilbert(3) == 1);
}

TEST_CASE("Gorenstein non-ci example ring with c=3") {
    Fp f(101);
    QuotientRing<Fp> r(f, 3, gorenstein_relations(f, 3));
    REQUIRE(r.dim() == 5);
    CHECK(r.basis()[0].str() == "1");
    CHECK(r.basis()[1].str() == "x1");
    CHECK(r.basis()[2].str() == "x2");
    CHECK(r.basis()[3].str() == "x3");
    // all three squares coincide; degrevlex reduction lands on x3^2
    CHECK(r.basis()[4].str() == "x3^2");
    CHECK(r.loewy_length() == 3);

    // normal forms: x1*x2 -> 0, x2^2 -> the socle representative, 1 -> 1
    CHECK(r.normal_form(parse_poly(f, 3, "x1*x2")).is_zero());
    auto nf = r.normal_form(parse_poly(f, 3, "x2^2"));
    REQUIRE(nf.terms.size() == 1);
    CHECK(nf.lm().str() == "x3^2");
    auto nf1 = r.normal_form(parse_poly(f, 3, "x1^2"));
    REQUIRE(nf1.terms.size() == 1);
    CHECK(nf1.lm().str() == "x3^2");
    auto one = r.normal_form(parse_poly(f, 3, "1"));
    REQUIRE(one.terms.size() == 1);
    CHECK(one.lm().is_one());

    // x1 multiplication has rank 2: 1 -> x1 -> x1^2 -> 0
    auto mx = r.mult_operator(parse_poly(f, 3, "x1"));
    CHECK(rank(f, mx) == 2);
}

TEST_CASE("one-variable quotient k[x]/(x^2)") {
    Fp f(101);
    QuotientRing<Fp> r(f, 1, {parse_poly(f, 1, "x1^2")});
    CHECK(r.dim() == 2);
    auto mx = r.mult_operator(parse_poly(f, 1, "x1"));
    CHECK(!mx.is_zero());
    CHECK(SparseMat<Fp>::mul(f, mx, mx).is_zero());  // nilpotent Jordan block
}

TEST_CASE("quotient construction errors") {
    Fp f(101);
    // not zero-dimensional
    CHECK_THROWS_WITH_AS(QuotientRing<Fp>(f, 2, {parse_poly(f, 2, "x1^2")}),
                         doctest::Contains("infinite-dimensional"), std::invalid_argument);
    // linear part
    CHECK_THROWS_WITH_AS(QuotientRing<Fp>(f, 2, {parse_poly(f, 2, "x1^2 - x2")}),
                         doctest::Contains("linear part"), std::invalid_argument);
    // inhomogeneous of degrees >= 2
    CHECK_THROWS_WITH_AS(QuotientRing<Fp>(f, 2, {parse_poly(f, 2, "x1^2 + x2^3")}),
                         doctest::Contains("homogeneous"), std::invalid_argument);
    // variables outside range
    CHECK_THROWS_AS(parse_poly(f, 2, "x3^2"), std::invalid_argument);
}

TEST_CASE("normal form is a projection and multiplicative mod I") {
    Fp f(101);
    QuotientRing<Fp> r(f, 3, gorenstein_relations(f, 3));
    auto p = parse_poly(f, 3, "x1^2 + 2*x2^2 - x1*x3 + 5");
    auto n1 = r.normal_form(p);
    auto n2 = r.normal_form(n1);
    CHECK(poly_sub(f, n1, n2).is_zero());
    // multiplicative: nf(a*b) = nf(nf(a)*nf(b))
    auto a = parse_poly(f, 3, "x1 + x2");
    auto b = parse_poly(f, 3, "x1 - x3");
    auto lhs = r.normal_form(poly_mul(f, a, b));
    auto rhs = r.normal_form(poly_mul(f, r.normal_form(a), r.normal_form(b)));
    CHECK(poly_sub(f, lhs, rhs).is_zero());
}

TEST_CASE("redundant relation reduces away") {
    Fp f(101);
    // x1*x2 - x2*x1 is zero; the remaining two quadrics present dim 4
    std::vector<Poly<Fp>> rels = {parse_poly(f, 2, "x1^2"), parse_poly(f, 2, "x2^2"),
                                  parse_poly(f, 2, "x1*x2 - x2*x1")};
    QuotientRing<Fp> r(f, 2, rels);
    CHECK(r.dim() == 4);
    CHECK(r.groebner().size() == 2);
}

TEST_CASE("ring Loewy length via iterated multiplication operators") {
    Fp f(101);
    QuotientRing<Fp> r(f, 1, {parse_poly(f, 1, "x1^3")});
    CHECK(r.dim() == 3);
    CHECK(r.loewy_length() == 3);  // m^3 = 0 != m^2
    // oracle: iterate the span of products of variable operators
    auto mx = r.var_op(0);
    auto m2 = SparseMat<Fp>::mul(f, mx, mx);
    auto m3 = SparseMat<Fp>::mul(f, m2, mx);
    CHECK(!m2.is_zero());
    CHECK(m3.is_zero());
}

TEST_CASE("polynomial coordinate ring piece dimensions") {
    PolyCoordRing s({2, 2});
    // 1/(1-t^2)^2 = 1 + 2t^2 + 3t^4 + ...
    CHECK(s.piece_dim(0) == 1);
    CHECK(s.piece_dim(1) == 0);
    CHECK(s.piece_dim(2) == 2);
    CHECK(s.piece_dim(4) == 3);
    CHECK(s.piece_dim(6) == 4);
    CHECK(s.monomials_of_weight(4).size() == 3);

    PolyCoordRing t({2, 4});
    // 1/((1-t^2)(1-t^4)): degree 8 piece has dim 3 (chi1^4, chi1^2 chi2, chi2^2)
    CHECK(t.piece_dim(8) == 3);
}
