#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stdet/surd.hpp"

using namespace stdet;

TEST_CASE("construction rejects square and nonpositive radicands") {
    CHECK_THROWS_AS(QuadraticSurd(1, 1, 9), DomainError);
    CHECK_THROWS_AS(QuadraticSurd(1, 1, 0), DomainError);
    CHECK_THROWS_AS(QuadraticSurd(1, 1, -5), DomainError);
    CHECK_NOTHROW(QuadraticSurd(1, 1, 5));
    // (q-1)(q+3) = (q+1)^2 - 4 is never a perfect square for q >= 2.
    for (int q = 2; q <= 200; ++q) CHECK_NOTHROW(QuadraticSurd(0, 1, (q - 1) * (q + 3)));
}

TEST_CASE("field arithmetic in Q(sqrt(5))") {
    QuadraticSurd phi(mpq_class(1, 2), mpq_class(1, 2), 5); // golden ratio
    QuadraticSurd one = QuadraticSurd::rational(1, 5);

    // phi^2 = phi + 1
    CHECK(phi * phi == phi + one);
    // conjugate product is the norm: phi * conj(phi) = -1
    CHECK(phi * phi.conjugate() == QuadraticSurd::rational(-1, 5));
    // division round-trips
    QuadraticSurd x(mpq_class(3, 7), mpq_class(-2, 5), 5);
    CHECK(x / phi * phi == x);
    CHECK((x - x).is_rational());
    CHECK_THROWS_AS(x / QuadraticSurd::rational(0, 5), DomainError);
}

TEST_CASE("powers track Fibonacci via the golden ratio") {
    // phi^n = (L_n + F_n sqrt(5)) / 2, so the b-part of phi^10 is F_10/2.
    QuadraticSurd phi(mpq_class(1, 2), mpq_class(1, 2), 5);
    QuadraticSurd p10 = phi.pow(10);
    CHECK(p10.b() == mpq_class(55, 2));
    CHECK(p10.a() == mpq_class(123, 2)); // L_10 = 123
    CHECK(phi.pow(0) == QuadraticSurd::rational(1, 5));
}

TEST_CASE("to_integer guards rationality and integrality") {
    CHECK(QuadraticSurd::rational(42, 5).to_integer() == 42);
    CHECK_THROWS(QuadraticSurd(1, 1, 5).to_integer());
    CHECK_THROWS(QuadraticSurd::rational(mpq_class(1, 2), 5).to_integer());
}

TEST_CASE("mixing radicands is rejected") {
    QuadraticSurd a(1, 1, 5), b(1, 1, 7);
    CHECK_THROWS_AS(a + b, DomainError);
    CHECK_THROWS_AS(a * b, DomainError);
}
