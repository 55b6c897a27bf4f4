#include <doctest.h>

#include "jacsyz/parser.hpp"
#include "jacsyz/univariate.hpp"

using namespace jacsyz;

namespace {

// Builds a univariate polynomial over Q from integer coefficients, ascending.
UniPoly U(std::initializer_list<long> coeffs) {
    std::vector<FieldElement> c;
    for (long v : coeffs) c.push_back(FieldElement(v));
    return UniPoly(FieldDescriptor::rationals(), std::move(c));
}

} // namespace

TEST_CASE("univariate division, gcd, and squarefree part") {
    // (x^2-1)(x+2) = x^3 + 2x^2 - x - 2 and (x-1)(x+2) = x^2 + x - 2
    UniPoly a = U({-2, -1, 2, 1});
    UniPoly b = U({-2, 1, 1});
    auto [q, r] = a.divmod(b);
    CHECK(r.is_zero());
    CHECK(q.degree() == 1);
    CHECK((q * b - a).is_zero());

    UniPoly g = gcd(a, U({-2, 1, 1}) * U({3, 1}));
    CHECK(g.degree() == 2); // common part (x-1)(x+2)
    CHECK(a.divmod(g).second.is_zero());

    // (x-1)^2 (x+3)
    UniPoly p = U({-1, 1}) * U({-1, 1}) * U({3, 1});
    UniPoly sf = p.squarefree_part();
    CHECK(sf.degree() == 2);
    CHECK((sf - U({-3, 2, 1}).monic()).is_zero());
}

TEST_CASE("resultant agrees with the product formula") {
    // res(x^2-1, x-2) = (1-2)(-1-2) = 3
    FieldElement r = resultant(U({-1, 0, 1}), U({-2, 1}));
    CHECK(r.coords()[0] == Rational(3));
    // swapped arguments: (-1)^{2*1} keeps the sign
    CHECK(resultant(U({-2, 1}), U({-1, 0, 1})).coords()[0] == Rational(3));
    // common root => zero
    CHECK(resultant(U({-1, 0, 1}), U({-1, 1})).is_zero());
    // res(2x+1, 3) = 3^1
    CHECK(resultant(U({1, 2}), U({3})).coords()[0] == Rational(3));
}

TEST_CASE("interpolation recovers a polynomial from values") {
    auto Q = FieldDescriptor::rationals();
    UniPoly p = U({1, 0, 1}); // x^2 + 1
    std::vector<FieldElement> xs, ys;
    for (long t : {0L, 1L, 2L}) {
        xs.push_back(FieldElement(t));
        ys.push_back(p.eval(FieldElement(t)));
    }
    UniPoly q = interpolate(Q, xs, ys);
    CHECK((p - q).is_zero());
}

TEST_CASE("rational root extraction") {
    // x(2x-3)(x+5)(3x-1)
    UniPoly p = U({0, 1}) * U({-3, 2}) * U({5, 1}) * U({-1, 3});
    auto roots = rational_roots(p);
    REQUIRE(roots.size() == 4);
    CHECK(roots[0] == Rational(-5));
    CHECK(roots[1] == Rational(0));
    CHECK(roots[2] == Rational(1, 3));
    CHECK(roots[3] == Rational(3, 2));

    CHECK(rational_roots(U({1, 0, 1})).empty());   // x^2+1
    CHECK(rational_roots(U({-2, 0, 1})).empty());  // x^2-2
}

TEST_CASE("pollard rho handles large factors in root candidates") {
    // (x - 1000003)(1000033 x - 1): coefficients need factoring beyond
    // trial division range
    UniPoly p = U({-1000003, 1}) * U({-1, 1000033});
    auto roots = rational_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Rational(1, 1000033));
    CHECK(roots[1] == Rational(1000003));
}

TEST_CASE("root search over Q(i) is complete") {
    auto Qi = parse_field("Q(i) minpoly t^2+1");
    FieldElement i = FieldElement::generator(Qi);
    FieldElement one = FieldElement::one(Qi);

    auto lin = [&](const FieldElement& root) {
        return UniPoly(Qi, {-root, one}); // x - root
    };

    SUBCASE("x^2+1") {
        UniPoly p(Qi, {one, FieldElement::zero(Qi), one});
        auto rs = roots_in_field(p, Qi);
        CHECK(rs.complete);
        REQUIRE(rs.roots.size() == 2);
        CHECK(p.eval(rs.roots[0]).is_zero());
        CHECK(p.eval(rs.roots[1]).is_zero());
        CHECK((rs.roots[0] + rs.roots[1]).is_zero());
    }
    SUBCASE("mixed rational and imaginary roots with a Q(i)-irreducible part") {
        // (x-2)(x^2+1)(x^2-2): roots in Q(i) are 2, i, -i
        UniPoly p = lin(FieldElement(2).embedded_into(Qi)) *
                    UniPoly(Qi, {one, FieldElement::zero(Qi), one}) *
                    UniPoly(Qi, {FieldElement(-2).embedded_into(Qi),
                                 FieldElement::zero(Qi), one});
        auto rs = roots_in_field(p, Qi);
        CHECK(rs.complete);
        REQUIRE(rs.roots.size() == 3);
        for (const auto& r : rs.roots) CHECK(p.eval(r).is_zero());
    }
    SUBCASE("genuinely complex root with both coordinates nonzero") {
        FieldElement z = FieldElement(3).embedded_into(Qi) +
                         FieldElement(-5).embedded_into(Qi) * i; // 3 - 5i
        UniPoly p = lin(z) * lin(one + i) * lin(FieldElement(7).embedded_into(Qi));
        auto rs = roots_in_field(p, Qi);
        CHECK(rs.complete);
        REQUIRE(rs.roots.size() == 3);
        bool found = false;
        for (const auto& r : rs.roots)
            if ((r - z).is_zero()) found = true;
        CHECK(found);
    }
    SUBCASE("repeated roots are reported once") {
        UniPoly p = lin(i) * lin(i) * lin(-i);
        auto rs = roots_in_field(p, Qi);
        REQUIRE(rs.roots.size() == 2);
    }
}

TEST_CASE("root search in a cubic extension finds rational roots only") {
    auto K = parse_field("Q(c) minpoly t^3-2");
    FieldElement c = FieldElement::generator(K);
    FieldElement one = FieldElement::one(K);
    // (x-2)(x-c): the rational root is found, c is honestly out of scope
    UniPoly p = UniPoly(K, {-FieldElement(2).embedded_into(K), one}) *
                UniPoly(K, {-c, one});
    auto rs = roots_in_field(p, K);
    CHECK_FALSE(rs.complete);
    REQUIRE(rs.roots.size() == 1);
    CHECK((rs.roots[0] - FieldElement(2).embedded_into(K)).is_zero());
}
