#include "dtn/bigmath.hpp"

#include <stdexcept>

namespace dtn {

mpz_class triangular(const mpz_class& n) {
    if (n <= 0) {
        throw std::invalid_argument("triangular: index must be >= 1, got " +
                                    n.get_str());
    }
    mpz_class t = n * (n + 1);
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), 2); // n(n+1) is even
    return t;
}

mpz_class isqrt(const mpz_class& x) {
    if (x < 0) {
        throw std::invalid_argument("isqrt: negative input " + x.get_str());
    }
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t()); // floor square root
    return r;
}

std::optional<SquareCertificate> square_certificate(const mpz_class& x) {
    if (x < 0) {
        return std::nullopt;
    }
    // mpz_perfect_square_p runs a quadratic-residue prefilter before any
    // root extraction; results are exact either way.
    if (!mpz_perfect_square_p(x.get_mpz_t())) {
        return std::nullopt;
    }
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), x.get_mpz_t());
    return SquareCertificate{x, root};
}

std::optional<mpz_class> tri_index_of(const mpz_class& x) {
    if (x <= 0) {
        throw std::invalid_argument("tri_index_of: input must be >= 1, got " +
                                    x.get_str());
    }
    // T_n = x  <=>  8x+1 = (2n+1)^2
    const mpz_class y = 8 * x + 1;
    if (!mpz_perfect_square_p(y.get_mpz_t())) {
        return std::nullopt;
    }
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), y.get_mpz_t()); // odd, since y is an odd square
    return mpz_class((r - 1) / 2);
}

mpz_class tri_shift_identity(const mpz_class& x, const mpz_class& y) {
    if (x < 0 || y < 0 || 8 * x + y < 1) {
        throw std::invalid_argument("tri_shift_identity: need x, y >= 0 and 8x+y >= 1");
    }
    const mpz_class ty = (y == 0) ? mpz_class(0) : triangular(y);
    return 32 * x * x + 4 * x * (2 * y + 1) + ty;
}

} // namespace dtn
