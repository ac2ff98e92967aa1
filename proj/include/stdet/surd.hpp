#pragma once

#include <string>

#include <gmpxx.h>

#include "stdet/errors.hpp"

namespace stdet {

// Exact arithmetic in Q(sqrt(D)) for a fixed positive non-square D:
// values a + b*sqrt(D) with rational a, b.  Since D is not a perfect
// square the representation is unique, so equality and "is rational"
// are exact tests.  Mixing values with different D is an error.
class QuadraticSurd {
public:
    QuadraticSurd() = default;
    QuadraticSurd(mpq_class a, mpq_class b, mpz_class d);

    static QuadraticSurd rational(mpq_class a, mpz_class d) { return {std::move(a), 0, std::move(d)}; }

    const mpq_class& a() const { return a_; }
    const mpq_class& b() const { return b_; }
    const mpz_class& d() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    // Requires a rational value with denominator 1.
    mpz_class to_integer() const;

    QuadraticSurd operator+(const QuadraticSurd& o) const;
    QuadraticSurd operator-(const QuadraticSurd& o) const;
    QuadraticSurd operator*(const QuadraticSurd& o) const;
    QuadraticSurd operator/(const QuadraticSurd& o) const;
    QuadraticSurd conjugate() const { return {a_, -b_, d_}; }
    QuadraticSurd pow(uint64_t n) const;

    bool operator==(const QuadraticSurd& o) const { return a_ == o.a_ && b_ == o.b_ && d_ == o.d_; }

    std::string str() const;

private:
    void check_same(const QuadraticSurd& o) const;
    mpq_class a_ = 0;
    mpq_class b_ = 0;
    mpz_class d_ = 0;
};

} // namespace stdet
