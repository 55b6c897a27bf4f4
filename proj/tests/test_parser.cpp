#include <doctest.h>

#include <sstream>

#include "jacsyz/parser.hpp"

using namespace jacsyz;

TEST_CASE("parse/print round trip is the identity on canonical form") {
    auto r = Ring::projective(2);
    for (const char* src :
         {"x1^2*x2 - x0^2*(x0+x2)", "3*x0^4 - 4/7*x1*x2^3 + x2^4", "0", "x0 + x0",
          "(x0^2+x1^2)^3 - 4*x0^2*x1^2*x2^2"}) {
        Polynomial p = parse_polynomial(src, r);
        CHECK(parse_polynomial(p.str(), r) == p);
    }
}

TEST_CASE("syntax errors carry line and column") {
    auto r = Ring::projective(2);
    try {
        parse_polynomial("x0 +\n  x9", r);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 3);
    }
    CHECK_THROWS_AS(parse_polynomial("x0 + ", r), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x0 ^ x1", r), ParseError);
    CHECK_THROWS_AS(parse_polynomial("(x0 + x1", r), ParseError);
}

TEST_CASE("field declarations") {
    CHECK(parse_field("Q")->is_rational());
    auto F = parse_field("Q(i) minpoly t^2+1");
    CHECK(F->degree() == 2);
    CHECK(F->generator_name == "i");
    FieldElement i = FieldElement::generator(F);
    CHECK((i * i) == FieldElement(-1).embedded_into(F));
    CHECK_THROWS_AS(parse_field("Q(a) minpoly 2*t^2+1"), PreconditionError);
    CHECK_THROWS_AS(parse_field("Q(a) minpoly t+1"), PreconditionError);
}

TEST_CASE(".poly files parse ring header and body") {
    std::istringstream in(
        "# nodal cubic\n"
        "ring x0..x2 over Q\n"
        "x1^2*x2 - x0^2*(x0+x2)\n");
    PolyFile pf = read_poly_stream(in);
    CHECK(pf.ring->nvars() == 3);
    CHECK(pf.f == parse_polynomial("x1^2*x2 - x0^3 - x0^2*x2", pf.ring));

    std::istringstream ext(
        "ring x0..x2 over Q(i) minpoly t^2+1\n"
        "(x0^2+x1^2)^3 - 4*x0^2*x1^2*x2^2\n");
    PolyFile pe = read_poly_stream(ext);
    CHECK(pe.ring->field->degree() == 2);

    std::istringstream bad("x0+x1\n");
    CHECK_THROWS_AS(read_poly_stream(bad), PreconditionError);
}

TEST_CASE("field elements in point coordinates") {
    auto F = parse_field("Q(alpha) minpoly t^2+1");
    CHECK(parse_field_element("-alpha", F) == -FieldElement::generator(F));
    CHECK(parse_field_element("2/3", F) == FieldElement(2, 3).embedded_into(F));
    CHECK(parse_field_element("1 - alpha", F) ==
          FieldElement::one(F) - FieldElement::generator(F));
}
