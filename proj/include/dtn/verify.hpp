#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "dtn/bigmath.hpp"

namespace dtn {

// One pairwise check: product of the pair's elements plus n_param, with the
// square root when it exists. x and y are the caller's inputs (indices in
// indexed mode, raw elements otherwise).
struct PairCheck {
    mpz_class x;
    mpz_class y;
    mpz_class value;
    std::optional<mpz_class> root;
};

struct VerifyReport {
    mpz_class n_param;
    std::vector<mpz_class> inputs;
    bool raw = false;
    std::vector<PairCheck> pairs;
    bool verdict = false; // true iff every pair has a root
};

// D(n)-tuple check over triangular numbers: elements are T_a for each index
// a. Indices must be strictly increasing, >= 2 of them, n_param != 0.
VerifyReport verify_tuple(const std::vector<mpz_class>& indices,
                          const mpz_class& n_param);

// Same check on raw elements (not triangular-indexed).
VerifyReport verify_raw_tuple(const std::vector<mpz_class>& elements,
                              const mpz_class& n_param);

// Index 8r extending the D(m^2)-pair {T_a, T_b} with root r, when the
// pair-extension mechanism applies, i.e. r == T_a + m(2a+1) and
// r == T_b - m(2b+1) (both hold for b = a + 4m). The returned extension is
// verified before returning; nullopt when the mechanism's precondition
// fails. Rejects pairs whose product + m^2 is not a perfect square.
std::optional<mpz_class> extension_candidate(const mpz_class& a,
                                             const mpz_class& b,
                                             const mpz_class& m);

} // namespace dtn
