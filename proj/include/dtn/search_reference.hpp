#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <vector>

#include "dtn/search.hpp"

// Serial reference implementations. Tests pin the OpenMP kernels against
// these; the benchmark tool compares their throughput. Production search
// never calls them.
namespace dtn::reference {

// Plain double loop over all pairs, no threading.
std::vector<PairHit> d_square_pairs_serial(const mpz_class& m,
                                           std::uint64_t bound);

// Naive O(bound^3) scan: every (a, b, c) tested from scratch with the
// floor-square-root route, independent of the pair-graph enumeration.
std::vector<std::array<std::uint64_t, 3>> find_triples_naive(
    const mpz_class& m, std::uint64_t bound);

} // namespace dtn::reference
