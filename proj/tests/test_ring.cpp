#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "stdet/ring.hpp"

using namespace stdet;

TEST_CASE("descriptor parsing and canonicalization") {
    CHECK(parse_descriptor("F(5)").text() == "F(5)");
    CHECK(parse_descriptor("Z(3^2)").text() == "Z(3^2)");
    CHECK(parse_descriptor("FU(2,2)").text() == "FU(2,2)");
    CHECK(parse_descriptor("F(2^2)").text() == "F(4)");
    CHECK(parse_descriptor("F(4)").text() == "F(4)");
    CHECK(parse_descriptor("Z(9)").text() == "Z(3^2)");
    CHECK(parse_descriptor("FU(2^2,2)").text() == "FU(4,2)");
    CHECK(parse_descriptor("GR(2^2,2)").text() == "GR(2^2,2)");
    CHECK(parse_descriptor("GR(4,2)").text() == "GR(2^2,2)");

    // Degenerate parameters collapse to the smallest kind.
    CHECK(parse_descriptor("Z(5^1)").text() == "F(5)");
    CHECK(parse_descriptor("FU(4,1)").text() == "F(4)");
    CHECK(parse_descriptor("GR(2^3,1)").text() == "Z(2^3)");
    CHECK(parse_descriptor("GR(3^1,2)").text() == "F(9)");

    CHECK_THROWS_AS(parse_descriptor("F(6)"), DomainError);     // not a prime power
    CHECK_THROWS_AS(parse_descriptor("F(4^2)"), DomainError);   // explicit base must be prime
    CHECK_THROWS_AS(parse_descriptor("Z(0^2)"), DomainError);
    CHECK_THROWS_AS(parse_descriptor("F(5"), ParseError);
    CHECK_THROWS_AS(parse_descriptor("Q(5)"), ParseError);
    CHECK_THROWS_AS(parse_descriptor("FU(2;2)"), ParseError);
    CHECK_THROWS_AS(parse_descriptor("F(2^30)"), DomainError);  // size cap
}

TEST_CASE("least irreducible follows the declared tuple order") {
    // Exhaustive check for degree 2 over F_2: x^2, x^2+x, x^2+1 are all
    // reducible, so the first irreducible is x^2+x+1.
    CHECK(least_irreducible(2, 2) == std::vector<uint32_t>{1, 1, 1});
    CHECK(least_irreducible(2, 3) == std::vector<uint32_t>{1, 0, 1, 1}); // x^3+x^2+1
    CHECK(least_irreducible(3, 2) == std::vector<uint32_t>{1, 0, 1});    // x^2+1
    CHECK(parse_descriptor("F(4)").modulus == std::vector<uint32_t>{1, 1, 1});
}

TEST_CASE("modular arithmetic and inverses") {
    auto R = Ring::build("Z(3^2)");
    CHECK(R->size() == 9);
    CHECK(R->q() == 3);
    CHECK(R->e() == 2);
    CHECK(R->gamma() == 3);
    CHECK(R->unit_count() == 6);
    CHECK(R->mul(4, 7) == 1);
    CHECK(R->inv(4) == 7);
    CHECK_THROWS_AS(R->inv(3), DomainError);
    for (uint32_t a = 0; a < 9; ++a) CHECK(R->add(a, R->neg(a)) == 0);
}

TEST_CASE("extension field arithmetic reduces by the constructed modulus") {
    auto F4 = Ring::build("F(4)");
    // Element x has index 2; x*x = x+1 (index 3) under x^2+x+1.
    CHECK(F4->mul(2, 2) == 3);
    CHECK(F4->mul(2, 3) == 1); // x(x+1) = x^2+x = 1
    CHECK(F4->display(3) == "1+x");

    auto F9 = Ring::build("F(9)");
    // Modulus x^2+1: x*x = -1 = 2.
    CHECK(F9->mul(3, 3) == 2);
    for (uint32_t a = 1; a < 9; ++a) CHECK(F9->mul(a, F9->inv(a)) == 1);
}

TEST_CASE("valuation follows the ideal chain") {
    auto R = Ring::build("Z(3^2)");
    CHECK(R->valuation(3) == 1);
    CHECK(R->valuation(0) == 2);
    CHECK(R->valuation(4) == 0);

    auto Z8 = Ring::build("Z(2^3)");
    CHECK(Z8->valuation(4) == 2);
    CHECK(Z8->valuation(6) == 1);
    CHECK(Z8->valuation(7) == 0);

    // v(xy) = min(v(x) + v(y), e) on every small ring.
    for (const char* desc : {"F(4)", "Z(2^3)", "Z(3^2)", "FU(2,2)", "FU(3,2)", "GR(2^2,2)", "Z(2^4)"}) {
        auto ring = Ring::build(desc);
        REQUIRE(ring->size() <= 512);
        for (uint32_t a = 0; a < ring->size(); ++a)
            for (uint32_t b = 0; b < ring->size(); ++b) {
                uint32_t expected = std::min(ring->valuation(a) + ring->valuation(b), ring->e());
                CHECK(ring->valuation(ring->mul(a, b)) == expected);
            }
    }
}

TEST_CASE("layer cardinalities match the chain-ring structure") {
    for (const char* desc : {"Z(3^2)", "Z(2^3)", "FU(3,2)", "GR(2^2,2)", "FU(3,3)"}) {
        auto R = Ring::build(desc);
        const uint64_t q = R->q(), e = R->e();
        uint64_t qe1 = 1;
        for (uint32_t i = 0; i + 1 < e; ++i) qe1 *= q;
        CHECK(R->units().size() == (q - 1) * qe1);
        CHECK(R->unit_count() == (q - 1) * qe1);
        // |gamma^j R| = q^(e-j)
        for (uint32_t j = 0; j <= e; ++j) {
            uint64_t expect = 1;
            for (uint32_t i = 0; i < e - j; ++i) expect *= q;
            uint64_t ideal = 0;
            for (uint32_t a = 0; a < R->size(); ++a)
                if (R->valuation(a) >= j) ++ideal;
            CHECK(ideal == expect);
        }
    }
    auto Z9 = Ring::build("Z(3^2)");
    CHECK(Z9->layer(1) == std::vector<uint32_t>{3, 6});
    CHECK(Z9->layer(2) == std::vector<uint32_t>{0});
    auto F4 = Ring::build("F(4)");
    CHECK(F4->elements().size() == 4);
    CHECK(F4->units().size() == 3);
}

TEST_CASE("square classes: spec examples") {
    auto Z9 = Ring::build("Z(3^2)");
    CHECK(Z9->square_class(4) == SquareClass::qr_unit);
    CHECK(Z9->square_class(2) == SquareClass::nqr_unit);
    CHECK(Z9->square_class(3) == SquareClass::non_unit);

    auto FU22 = Ring::build("FU(2,2)");
    CHECK(FU22->square_class(3) == SquareClass::nqr_unit); // 1+u
    CHECK(FU22->square_class(1) == SquareClass::qr_unit);

    // Z_8: squares of units are exactly {1}.
    auto Z8 = Ring::build("Z(2^3)");
    std::set<uint32_t> unit_squares;
    for (uint32_t u : Z8->units()) unit_squares.insert(Z8->mul(u, u));
    CHECK(unit_squares == std::set<uint32_t>{1});
    CHECK(Z8->square_class(1) == SquareClass::qr_unit);
    for (uint32_t u : {3u, 5u, 7u}) CHECK(Z8->square_class(u) == SquareClass::nqr_unit);
}

TEST_CASE("square class equals explicit square-set membership") {
    for (const char* desc :
         {"F(3)", "F(5)", "F(9)", "F(7)", "Z(3^2)", "Z(5^2)", "Z(3^3)", "FU(3,2)", "FU(5,2)", "Z(2^3)",
          "FU(2,2)", "FU(4,2)", "GR(2^2,2)", "GR(3^2,2)"}) {
        auto R = Ring::build(desc);
        REQUIRE(R->size() <= 512);
        std::set<uint32_t> squares;
        for (uint32_t u : R->units()) squares.insert(R->mul(u, u));
        for (uint32_t a = 0; a < R->size(); ++a) {
            SquareClass expect = !R->is_unit(a)             ? SquareClass::non_unit
                                 : squares.count(a) ? SquareClass::qr_unit
                                                    : SquareClass::nqr_unit;
            CHECK(R->square_class(a) == expect);
        }
        // Odd q: the two unit classes have equal size (q-1)q^(e-1)/2.
        if (R->q() % 2 == 1) {
            uint64_t qr = 0, nqr = 0;
            for (uint32_t a = 0; a < R->size(); ++a) {
                if (R->square_class(a) == SquareClass::qr_unit) ++qr;
                if (R->square_class(a) == SquareClass::nqr_unit) ++nqr;
            }
            CHECK(qr == nqr);
            CHECK(qr == R->unit_count() / 2);
        }
    }
}

TEST_CASE("quadratic character: multiplicativity and chi(-1)") {
    for (uint64_t q : {3u, 5u, 7u, 9u, 11u, 13u, 25u, 27u, 49u}) {
        auto F = Ring::build("F(" + std::to_string(q) + ")");
        for (uint32_t a = 0; a < F->size(); ++a)
            for (uint32_t b = 0; b < F->size(); ++b)
                CHECK(F->quadratic_character(F->mul(a, b)) ==
                      F->quadratic_character(a) * F->quadratic_character(b));
        int chi_m1 = F->quadratic_character(F->neg(1));
        CHECK(chi_m1 == (q % 4 == 1 ? 1 : -1));
    }
    auto Z9 = Ring::build("Z(3^2)");
    CHECK(Z9->quadratic_character(2) == -1);
    CHECK(Z9->quadratic_character(3) == 0);
    auto F5 = Ring::build("F(5)");
    CHECK(F5->quadratic_character(4) == 1);
    CHECK(F5->quadratic_character(2) == -1);
    auto F4 = Ring::build("F(4)");
    CHECK_THROWS_AS(F4->quadratic_character(1), DomainError);
}

TEST_CASE("chain-ring square classes match residue-field classes (odd q)") {
    for (const char* desc : {"Z(3^2)", "Z(3^3)", "Z(5^2)", "FU(3,2)", "FU(3,3)", "GR(3^2,2)"}) {
        auto R = Ring::build(desc);
        auto F = R->residue_field();
        for (uint32_t u : R->units())
            CHECK(R->square_class(u) == F->square_class(R->reduce(u, 1)));
    }
}

TEST_CASE("quotients are ring homomorphisms with the right structure") {
    auto Z27 = Ring::build("Z(3^3)");
    CHECK(Z27->quotient_descriptor(1).text() == "F(3)");
    CHECK(Z27->quotient_descriptor(2).text() == "Z(3^2)");
    CHECK(Z27->quotient_descriptor(3).text() == "Z(3^3)");
    for (uint32_t a = 0; a < 27; ++a) CHECK(Z27->reduce(a, 1) == a % 3);

    auto FU33 = Ring::build("FU(3,3)");
    CHECK(FU33->quotient_descriptor(2).text() == "FU(3,2)");
    auto FU32 = FU33->quotient(2);

    // Exhaustive homomorphism table comparison, 27 elements.
    for (uint32_t a = 0; a < 27; ++a) {
        for (uint32_t b = 0; b < 27; ++b) {
            CHECK(FU33->reduce(FU33->add(a, b), 2) == FU32->add(FU33->reduce(a, 2), FU33->reduce(b, 2)));
            CHECK(FU33->reduce(FU33->mul(a, b), 2) == FU32->mul(FU33->reduce(a, 2), FU33->reduce(b, 2)));
        }
    }

    // Composition: R -> R/g^t -> (R/g^t)/g^s equals R -> R/g^s for s <= t.
    for (const char* desc : {"Z(2^4)", "FU(3,3)", "GR(2^3,2)"}) {
        auto R = Ring::build(desc);
        for (uint32_t t = 1; t <= R->e(); ++t) {
            auto Q = R->quotient(t);
            for (uint32_t s = 1; s <= t; ++s) {
                for (uint32_t a = 0; a < R->size(); ++a)
                    CHECK(Q->reduce(R->reduce(a, t), s) == R->reduce(a, s));
            }
        }
    }

    CHECK_THROWS_AS(Z27->quotient_descriptor(0), DomainError);
    CHECK_THROWS_AS(Z27->quotient_descriptor(4), DomainError);
}

TEST_CASE("galois ring GR(2^2,2)") {
    auto R = Ring::build("GR(2^2,2)");
    CHECK(R->size() == 16);
    CHECK(R->q() == 4);
    CHECK(R->e() == 2);
    CHECK(R->unit_count() == 12);
    CHECK(R->gamma() == 2);
    CHECK(R->residue_field()->name() == "F(4)");
    // Reduction mod gamma is a homomorphism onto F_4.
    auto F4 = R->residue_field();
    for (uint32_t a = 0; a < 16; ++a)
        for (uint32_t b = 0; b < 16; ++b) {
            CHECK(R->reduce(R->mul(a, b), 1) == F4->mul(R->reduce(a, 1), R->reduce(b, 1)));
            CHECK(R->reduce(R->add(a, b), 1) == F4->add(R->reduce(a, 1), R->reduce(b, 1)));
        }
}

TEST_CASE("ring axioms hold on every supported kind (spot sample)") {
    for (const char* desc : {"F(8)", "F(9)", "Z(2^3)", "FU(4,2)", "GR(3^2,2)"}) {
        auto R = Ring::build(desc);
        const uint32_t S = R->size();
        for (uint32_t a = 0; a < S; ++a) {
            CHECK(R->add(a, 0) == a);
            CHECK(R->mul(a, 1) == a);
            CHECK(R->mul(a, 0) == 0);
            for (uint32_t b = 0; b < S; ++b) {
                CHECK(R->add(a, b) == R->add(b, a));
                CHECK(R->mul(a, b) == R->mul(b, a));
                for (uint32_t c : {0u, 1u, S - 1, (a * 7 + b) % S})
                    CHECK(R->mul(a, R->add(b, c)) == R->add(R->mul(a, b), R->mul(a, c)));
            }
        }
    }
}

TEST_CASE("element display") {
    auto FU22 = Ring::build("FU(2,2)");
    CHECK(FU22->display(0) == "0");
    CHECK(FU22->display(1) == "1");
    CHECK(FU22->display(2) == "u");
    CHECK(FU22->display(3) == "1+u");
    auto F9 = Ring::build("F(9)");
    CHECK(F9->display(5) == "2+x");
    auto GR = Ring::build("GR(2^2,2)");
    CHECK(GR->display(7) == "3+x");
    auto FU42 = Ring::build("FU(4,2)");
    CHECK(FU42->display(12) == "(1+x)u");
}

TEST_CASE("square multiset counts every element once") {
    for (const char* desc : {"F(5)", "Z(2^3)", "FU(3,2)"}) {
        auto R = Ring::build(desc);
        uint64_t total = 0;
        for (auto [v, m] : R->square_multiset()) {
            (void)v;
            total += m;
        }
        CHECK(total == R->size());
    }
}
