#include "dtn/search_reference.hpp"

#include "dtn/bigmath.hpp"

namespace dtn::reference {

std::vector<PairHit> d_square_pairs_serial(const mpz_class& m,
                                           std::uint64_t bound) {
    std::vector<PairHit> hits;
    const mpz_class m2 = m * m;
    mpz_class v, r;
    for (std::uint64_t a = 1; a < bound; ++a) {
        const mpz_class ta = triangular(mpz_class(a));
        for (std::uint64_t b = a + 1; b <= bound; ++b) {
            v = ta * triangular(mpz_class(b)) + m2;
            if (mpz_perfect_square_p(v.get_mpz_t())) {
                mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
                hits.push_back(PairHit{a, b, r});
            }
        }
    }
    return hits;
}

std::vector<std::array<std::uint64_t, 3>> find_triples_naive(
    const mpz_class& m, std::uint64_t bound) {
    std::vector<std::array<std::uint64_t, 3>> out;
    const mpz_class m2 = m * m;

    std::vector<mpz_class> tri(bound + 1);
    for (std::uint64_t i = 1; i <= bound; ++i) {
        tri[i] = tri[i - 1] + i;
    }

    const auto is_square = [&m2](const mpz_class& prod) {
        const mpz_class v = prod + m2;
        const mpz_class r = isqrt(v);
        return r * r == v;
    };

    for (std::uint64_t a = 1; a + 2 <= bound; ++a) {
        for (std::uint64_t b = a + 1; b + 1 <= bound; ++b) {
            if (!is_square(tri[a] * tri[b])) {
                continue;
            }
            for (std::uint64_t c = b + 1; c <= bound; ++c) {
                if (is_square(tri[a] * tri[c]) && is_square(tri[b] * tri[c])) {
                    out.push_back({a, b, c});
                }
            }
        }
    }
    return out;
}

} // namespace dtn::reference
