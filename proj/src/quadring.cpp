#include "dtn/quadring.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace dtn {

namespace {

std::string describe(const mpz_class& a, const mpz_class& b, unsigned e,
                     const mpz_class& d) {
    std::ostringstream os;
    os << "(" << a.get_str() << " + " << b.get_str() << "*sqrt(" << d.get_str()
       << "))/2^" << e;
    return os.str();
}

} // namespace

QuadElem::QuadElem(mpz_class a, mpz_class b, unsigned e, mpz_class d)
    : a_(std::move(a)), b_(std::move(b)), e_(e), d_(std::move(d)) {
    if (d_ <= 0) {
        throw std::invalid_argument("QuadElem: radicand must be positive, got " +
                                    d_.get_str());
    }
    if (mpz_perfect_square_p(d_.get_mpz_t())) {
        throw std::invalid_argument(
            "QuadElem: radicand must not be a perfect square, got " + d_.get_str());
    }
    canonicalize();
}

void QuadElem::canonicalize() {
    while (e_ > 0 && mpz_even_p(a_.get_mpz_t()) && mpz_even_p(b_.get_mpz_t())) {
        a_ >>= 1;
        b_ >>= 1;
        --e_;
    }
}

void QuadElem::require_same_ring(const QuadElem& o) const {
    if (d_ != o.d_) {
        throw std::invalid_argument("QuadElem: mismatched radicands " +
                                    d_.get_str() + " vs " + o.d_.get_str());
    }
}

QuadElem QuadElem::operator+(const QuadElem& o) const {
    require_same_ring(o);
    const unsigned e = std::max(e_, o.e_);
    mpz_class a = a_ << (e - e_);
    mpz_class b = b_ << (e - e_);
    a += o.a_ << (e - o.e_);
    b += o.b_ << (e - o.e_);
    return QuadElem(std::move(a), std::move(b), e, d_);
}

QuadElem QuadElem::operator-(const QuadElem& o) const { return *this + (-o); }

QuadElem QuadElem::operator-() const { return QuadElem(-a_, -b_, e_, d_); }

QuadElem QuadElem::operator*(const QuadElem& o) const {
    require_same_ring(o);
    // (a1 + b1 s)(a2 + b2 s) = a1 a2 + b1 b2 d + (a1 b2 + b1 a2) s,  s^2 = d
    mpz_class a = a_ * o.a_ + b_ * o.b_ * d_;
    mpz_class b = a_ * o.b_ + b_ * o.a_;
    return QuadElem(std::move(a), std::move(b), e_ + o.e_, d_);
}

QuadElem QuadElem::conj() const { return QuadElem(a_, -b_, e_, d_); }

QuadElem QuadElem::pow(unsigned long k) const {
    QuadElem result = integer(1, d_);
    QuadElem base = *this;
    while (k > 0) {
        if (k & 1) {
            result = result * base;
        }
        k >>= 1;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

mpz_class QuadElem::to_integer() const {
    // In canonical form b == 0 forces e == 0 or odd a; only e == 0 divides.
    if (b_ != 0) {
        throw invariant_violation("QuadElem::to_integer: nonzero surd part in " +
                                  describe(a_, b_, e_, d_));
    }
    if (e_ != 0) {
        throw invariant_violation("QuadElem::to_integer: inexact division in " +
                                  describe(a_, b_, e_, d_));
    }
    return a_;
}

QuadElem QuadElem::div_sqrt_d() const {
    if (!mpz_divisible_p(a_.get_mpz_t(), d_.get_mpz_t())) {
        throw invariant_violation("QuadElem::div_sqrt_d: " + d_.get_str() +
                                  " does not divide rational part of " +
                                  describe(a_, b_, e_, d_));
    }
    mpz_class new_b;
    mpz_divexact(new_b.get_mpz_t(), a_.get_mpz_t(), d_.get_mpz_t());
    return QuadElem(b_, std::move(new_b), e_, d_);
}

QuadElem QuadElem::div_int(const mpz_class& v) const {
    if (v == 0) {
        throw std::invalid_argument("QuadElem::div_int: division by zero");
    }
    if (!mpz_divisible_p(a_.get_mpz_t(), v.get_mpz_t()) ||
        !mpz_divisible_p(b_.get_mpz_t(), v.get_mpz_t())) {
        throw invariant_violation("QuadElem::div_int: " + v.get_str() +
                                  " does not divide " + describe(a_, b_, e_, d_));
    }
    mpz_class a, b;
    mpz_divexact(a.get_mpz_t(), a_.get_mpz_t(), v.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), b_.get_mpz_t(), v.get_mpz_t());
    return QuadElem(std::move(a), std::move(b), e_, d_);
}

std::ostream& operator<<(std::ostream& os, const QuadElem& x) {
    return os << describe(x.a_, x.b_, x.e_, x.d_);
}

} // namespace dtn
