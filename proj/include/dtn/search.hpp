#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "dtn/construction.hpp"

namespace dtn {

// One D(m^2)-pair found by the scan: 1 <= a < b and
// T_a * T_b + m^2 = root^2.
struct PairHit {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    mpz_class root;

    bool operator==(const PairHit& o) const {
        return a == o.a && b == o.b && root == o.root;
    }
};

struct Classification {
    bool constructed = false;
    unsigned long k = 0; // meaningful when constructed

    bool operator==(const Classification& o) const {
        return constructed == o.constructed && (!constructed || k == o.k);
    }
};

struct SearchCounters {
    std::uint64_t pairs_tested = 0;
    std::uint64_t pairs_found = 0;
    std::uint64_t triangles_found = 0;

    bool operator==(const SearchCounters&) const = default;
};

struct SearchReport {
    mpz_class m;
    std::uint64_t bound = 0;
    std::vector<TripleRecord> triples; // lexicographic by indices
    SearchCounters counts;
    double wall_seconds = 0.0; // informational; excluded from deterministic output
};

// All pairs 1 <= a < b <= bound with T_a*T_b + m^2 a perfect square, sorted
// lexicographically. The scan is partitioned by rows of a across `jobs`
// OpenMP threads; the result is identical at any parallelism level.
std::vector<PairHit> d_square_pairs(const mpz_class& m, std::uint64_t bound,
                                    int jobs = 1);

// Bounded exhaustive search: enumerate the pair graph's triangles by sorted
// neighbor-list intersection, re-verify every triangle, classify it against
// the construction, and report deterministically.
SearchReport find_triples(const mpz_class& m, std::uint64_t bound,
                          int jobs = 1);

// constructed(k) if the construction run with (m, n=a) emits the triple
// (a, b, c) at step k (the family triple is constructed(0)); sporadic
// otherwise. Iterates while the middle index is <= b; growth is strict, so
// this terminates.
Classification classify(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                        const mpz_class& m);

// Confirms that the triple {T_n, T_{n+4m}, T_{8 r_1}} is not among the
// triples emitted by the construction started at N_0 = n + 4m, for any
// k <= bound_k. (Every such triple keeps n + 4m as its smallest index.)
bool second_element_remark_check(const mpz_class& m, const mpz_class& n,
                                 unsigned long bound_k);

} // namespace dtn
