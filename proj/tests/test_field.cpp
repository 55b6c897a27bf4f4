#include <doctest.h>

#include "jacsyz/field.hpp"

using namespace jacsyz;

namespace {
FieldPtr gaussian() {
    // Q(i), t^2 + 1
    return FieldDescriptor::extension({Rational(1), Rational(0), Rational(1)}, "i");
}
} // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
    FieldElement a(1, 3), b(2, 5);
    CHECK((a + b) == FieldElement(11, 15));
    CHECK((a * b) == FieldElement(2, 15));
    CHECK((a - a).is_zero());
    CHECK(a.inverse() == FieldElement(3, 1));
    CHECK_THROWS_AS(FieldElement(0, 1).inverse(), PreconditionError);
}

TEST_CASE("extension arithmetic in Q(i)") {
    auto F = gaussian();
    FieldElement i = FieldElement::generator(F);
    CHECK((i * i) == FieldElement(-1, 1).embedded_into(F));
    // (1 + i)(1 - i) = 2
    FieldElement one = FieldElement::one(F);
    CHECK(((one + i) * (one - i)) == FieldElement(2, 1).embedded_into(F));
    // 1/i = -i
    CHECK(i.inverse() == -i);
    // (3 + 4i)^-1 = (3 - 4i)/25
    FieldElement z = FieldElement(3) + i * FieldElement(4);
    FieldElement w = z.inverse();
    CHECK((z * w) == one);
    CHECK(w == (FieldElement(3, 25) - i * FieldElement(4, 25)));
}

TEST_CASE("reducible minimal polynomial surfaces as an inversion error") {
    // t^2 - 1 is reducible; t - 1 is a zero divisor.
    auto F = FieldDescriptor::extension({Rational(-1), Rational(0), Rational(1)}, "a");
    FieldElement z = FieldElement::generator(F) - FieldElement::one(F);
    CHECK_THROWS_AS(z.inverse(), PreconditionError);
}

TEST_CASE("mixing distinct extensions is rejected") {
    auto F = gaussian();
    auto G = FieldDescriptor::extension({Rational(-2), Rational(0), Rational(1)}, "s");
    CHECK_THROWS_AS(FieldElement::generator(F) + FieldElement::generator(G),
                    PreconditionError);
    // rationals embed into any extension
    CHECK((FieldElement(2) + FieldElement::zero(F)) == FieldElement(2).embedded_into(F));
}
