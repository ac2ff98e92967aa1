#include "stdet/surd.hpp"

namespace stdet {

QuadraticSurd::QuadraticSurd(mpq_class a, mpq_class b, mpz_class d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (d_ <= 0) throw DomainError("surd radicand must be positive");
    mpz_class root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), d_.get_mpz_t());
    if (rem == 0) throw DomainError("surd radicand " + d_.get_str() + " is a perfect square");
    a_.canonicalize();
    b_.canonicalize();
}

void QuadraticSurd::check_same(const QuadraticSurd& o) const {
    if (d_ != o.d_) throw DomainError("mixing surds over different radicands");
}

mpz_class QuadraticSurd::to_integer() const {
    if (!is_rational()) throw std::logic_error("surd " + str() + " is irrational");
    if (a_.get_den() != 1) throw std::logic_error("surd " + str() + " is not an integer");
    return a_.get_num();
}

QuadraticSurd QuadraticSurd::operator+(const QuadraticSurd& o) const {
    check_same(o);
    return {a_ + o.a_, b_ + o.b_, d_};
}

QuadraticSurd QuadraticSurd::operator-(const QuadraticSurd& o) const {
    check_same(o);
    return {a_ - o.a_, b_ - o.b_, d_};
}

QuadraticSurd QuadraticSurd::operator*(const QuadraticSurd& o) const {
    check_same(o);
    return {a_ * o.a_ + b_ * o.b_ * d_, a_ * o.b_ + b_ * o.a_, d_};
}

QuadraticSurd QuadraticSurd::operator/(const QuadraticSurd& o) const {
    check_same(o);
    // Rationalize: norm(a + b sqrt(D)) = a^2 - b^2 D, nonzero for nonzero
    // values because D is not a square.
    mpq_class norm = o.a_ * o.a_ - o.b_ * o.b_ * d_;
    if (norm == 0) throw DomainError("division by zero surd");
    QuadraticSurd num = *this * o.conjugate();
    return {num.a_ / norm, num.b_ / norm, d_};
}

QuadraticSurd QuadraticSurd::pow(uint64_t n) const {
    QuadraticSurd result = rational(1, d_);
    QuadraticSurd base = *this;
    while (n) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

std::string QuadraticSurd::str() const {
    return a_.get_str() + " + " + b_.get_str() + "*sqrt(" + d_.get_str() + ")";
}

} // namespace stdet
