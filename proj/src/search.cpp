#include "dtn/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>
#include <utility>

#include "dtn/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dtn {

namespace {

void validate_search_args(const mpz_class& m, std::uint64_t bound,
                          std::uint64_t min_bound, int jobs) {
    if (m < 1) {
        throw std::invalid_argument("search: m must be >= 1");
    }
    if (bound < min_bound) {
        throw std::invalid_argument("search: bound must be >= " +
                                    std::to_string(min_bound));
    }
    if (jobs < 1) {
        throw std::invalid_argument("search: jobs must be >= 1");
    }
}

std::vector<mpz_class> triangular_table(std::uint64_t bound) {
    std::vector<mpz_class> tri(bound + 1);
    for (std::uint64_t i = 1; i <= bound; ++i) {
        tri[i] = tri[i - 1] + i;
    }
    return tri;
}

} // namespace

std::vector<PairHit> d_square_pairs(const mpz_class& m, std::uint64_t bound,
                                    int jobs) {
    validate_search_args(m, bound, 2, jobs);
    const std::vector<mpz_class> tri = triangular_table(bound);
    const mpz_class m2 = m * m;

    // One bucket per row of a. Buckets are written independently and
    // concatenated in row order, so the result does not depend on the
    // schedule or the thread count.
    std::vector<std::vector<PairHit>> rows(bound);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(jobs) if (jobs > 1)
#endif
    for (long long a = 1; a <= static_cast<long long>(bound) - 1; ++a) {
        auto& out = rows[static_cast<std::size_t>(a) - 1];
        mpz_class v, r;
        for (std::uint64_t b = static_cast<std::uint64_t>(a) + 1; b <= bound; ++b) {
            v = tri[static_cast<std::size_t>(a)] * tri[b] + m2;
            if (mpz_perfect_square_p(v.get_mpz_t())) {
                mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
                out.push_back(PairHit{static_cast<std::uint64_t>(a), b, r});
            }
        }
    }

    std::vector<PairHit> hits;
    for (auto& row : rows) {
        for (auto& hit : row) {
            hits.push_back(std::move(hit));
        }
    }
    return hits;
}

Classification classify(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                        const mpz_class& m) {
    if (!(a >= 1 && a < b && b < c)) {
        throw std::invalid_argument("classify: need 1 <= a < b < c");
    }
    TripleStream stream(ConstructionParams{m, mpz_class(a)});
    while (true) {
        const TripleRecord rec = stream.next();
        const mpz_class& mid = rec.indices[1];
        if (mid > b) {
            return {false, 0};
        }
        if (mid == b) {
            // Middle indices grow strictly, so this k is the only candidate.
            if (rec.indices[2] == c) {
                return {true, rec.provenance.k};
            }
            return {false, 0};
        }
    }
}

SearchReport find_triples(const mpz_class& m, std::uint64_t bound, int jobs) {
    validate_search_args(m, bound, 3, jobs);
    const auto t_start = std::chrono::steady_clock::now();

    SearchReport rep;
    rep.m = m;
    rep.bound = bound;

    const std::vector<PairHit> pairs = d_square_pairs(m, bound, jobs);
    rep.counts.pairs_tested = bound * (bound - 1) / 2;
    rep.counts.pairs_found = pairs.size();

    std::vector<std::vector<std::uint64_t>> adj(bound + 1); // forward edges
    std::map<std::pair<std::uint64_t, std::uint64_t>, mpz_class> roots;
    for (const auto& hit : pairs) {
        adj[hit.a].push_back(hit.b); // ascending, pairs are sorted
        roots.emplace(std::make_pair(hit.a, hit.b), hit.root);
    }

    const mpz_class m2 = m * m;
    for (const auto& hit : pairs) {
        std::vector<std::uint64_t> common;
        std::set_intersection(adj[hit.a].begin(), adj[hit.a].end(),
                              adj[hit.b].begin(), adj[hit.b].end(),
                              std::back_inserter(common));
        for (std::uint64_t c : common) { // c > b > a by construction
            const VerifyReport check =
                verify_tuple({mpz_class(hit.a), mpz_class(hit.b), mpz_class(c)}, m2);
            if (!check.verdict) {
                throw invariant_violation("find_triples: pair-graph triangle "
                                          "failed re-verification");
            }
            // The independently recomputed roots must match the scan's.
            if (*check.pairs[0].root != roots.at({hit.a, hit.b}) ||
                *check.pairs[1].root != roots.at({hit.a, c}) ||
                *check.pairs[2].root != roots.at({hit.b, c})) {
                throw invariant_violation("find_triples: root mismatch between "
                                          "scan and re-verification");
            }

            TripleRecord rec;
            rec.n_param = m2;
            rec.indices = {mpz_class(hit.a), mpz_class(hit.b), mpz_class(c)};
            rec.certificates = {
                SquareCertificate{check.pairs[0].value, *check.pairs[0].root},
                SquareCertificate{check.pairs[1].value, *check.pairs[1].root},
                SquareCertificate{check.pairs[2].value, *check.pairs[2].root}};
            const Classification cls = classify(hit.a, hit.b, c, m);
            rec.provenance = cls.constructed
                                 ? Provenance{ProvenanceTag::constructed, cls.k}
                                 : Provenance{ProvenanceTag::sporadic, 0};
            rep.triples.push_back(std::move(rec));
        }
    }
    // Pairs are lexicographic and c ascends within a pair, so triples are
    // already in lexicographic index order.
    rep.counts.triangles_found = rep.triples.size();
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
            .count();
    return rep;
}

bool second_element_remark_check(const mpz_class& m, const mpz_class& n,
                                 unsigned long bound_k) {
    const ConstructionParams base{m, n};
    const std::array<mpz_class, 3> target{n, n + 4 * m, 8 * pair_root(base)};
    TripleStream stream(ConstructionParams{m, n + 4 * m});
    for (unsigned long k = 0; k <= bound_k; ++k) {
        if (stream.next().indices == target) {
            return false;
        }
    }
    return true;
}

} // namespace dtn
