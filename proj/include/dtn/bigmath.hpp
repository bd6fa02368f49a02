#pragma once

#include <gmpxx.h>

#include <optional>

#include "dtn/errors.hpp"

namespace dtn {

// Witness that value is a perfect square: root * root == value exactly.
struct SquareCertificate {
    mpz_class value;
    mpz_class root;

    bool operator==(const SquareCertificate& o) const {
        return value == o.value && root == o.root;
    }
};

// n-th triangular number n(n+1)/2. Rejects n <= 0.
mpz_class triangular(const mpz_class& n);

// floor(sqrt(x)). Rejects x < 0. Exact at perfect-square boundaries.
mpz_class isqrt(const mpz_class& x);

// Certificate iff x is a nonnegative perfect square; nullopt otherwise
// (negative inputs are never squares).
std::optional<SquareCertificate> square_certificate(const mpz_class& x);

// n with T_n == x, if such an index exists. Rejects x <= 0.
std::optional<mpz_class> tri_index_of(const mpz_class& x);

// 32x^2 + 4x(2y+1) + T_y, which equals T_{8x+y}. Computed from the
// polynomial, not by evaluating T_{8x+y}, so the two routes stay
// independent. Rejects x < 0, y < 0 or 8x+y < 1.
mpz_class tri_shift_identity(const mpz_class& x, const mpz_class& y);

} // namespace dtn
