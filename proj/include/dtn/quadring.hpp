#pragma once

#include <gmpxx.h>

#include <iosfwd>

#include "dtn/errors.hpp"

namespace dtn {

// Exact element (a + b*sqrt(d)) / 2^e of the real quadratic ring Z[sqrt(d)]
// with denominators restricted to powers of two. d must not be a perfect
// square, so the canonical representation is unique: e is minimal (a and b
// never both even while e > 0). Every operation canonicalizes its result;
// equality is structural equality of canonical forms.
//
// Elements are immutable values and freely shareable across threads.
class QuadElem {
public:
    // Represents (a + b*sqrt(d)) / 2^e, canonicalized.
    QuadElem(mpz_class a, mpz_class b, unsigned e, mpz_class d);

    static QuadElem integer(const mpz_class& v, const mpz_class& d) {
        return QuadElem(v, 0, 0, d);
    }
    static QuadElem sqrt_d(const mpz_class& d) { return QuadElem(0, 1, 0, d); }

    const mpz_class& num_rational() const { return a_; }
    const mpz_class& num_surd() const { return b_; }
    unsigned log2_denom() const { return e_; }
    const mpz_class& radicand() const { return d_; }

    bool is_rational() const { return b_ == 0; }

    QuadElem operator+(const QuadElem& o) const;
    QuadElem operator-(const QuadElem& o) const;
    QuadElem operator*(const QuadElem& o) const;
    QuadElem operator-() const;

    // Conjugate (a - b*sqrt(d)) / 2^e. A ring homomorphism.
    QuadElem conj() const;

    // k-th power by binary exponentiation.
    QuadElem pow(unsigned long k) const;

    // Exact integer value. Throws invariant_violation when the surd part is
    // nonzero or the division by 2^e is inexact; either means a closed-form
    // algebra bug upstream.
    mpz_class to_integer() const;

    // Exact division by sqrt(d): (a + b*sqrt(d))/sqrt(d) = b + (a/d)*sqrt(d).
    // Throws invariant_violation unless d divides a.
    QuadElem div_sqrt_d() const;

    // Exact division by a nonzero integer; throws invariant_violation unless
    // it divides both numerators.
    QuadElem div_int(const mpz_class& v) const;

    bool operator==(const QuadElem& o) const {
        return a_ == o.a_ && b_ == o.b_ && e_ == o.e_ && d_ == o.d_;
    }
    bool operator!=(const QuadElem& o) const { return !(*this == o); }

    friend std::ostream& operator<<(std::ostream& os, const QuadElem& x);

private:
    void canonicalize();
    void require_same_ring(const QuadElem& o) const;

    mpz_class a_; // rational-part numerator
    mpz_class b_; // surd-part numerator
    unsigned e_;  // denominator is 2^e
    mpz_class d_; // radicand
};

} // namespace dtn
