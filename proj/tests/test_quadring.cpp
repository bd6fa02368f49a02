#include <doctest.h>

#include <random>
#include <sstream>

#include "dtn/quadring.hpp"

using dtn::invariant_violation;
using dtn::QuadElem;

namespace {

QuadElem random_elem(std::mt19937_64& rng, const mpz_class& d) {
    std::uniform_int_distribution<long> coeff(-50, 50);
    std::uniform_int_distribution<unsigned> denom(0, 3);
    return QuadElem(coeff(rng), coeff(rng), denom(rng), d);
}

} // namespace

TEST_CASE("construction and canonical form") {
    const QuadElem x(4, 6, 2, 5); // (4 + 6*sqrt(5))/4 = (2 + 3*sqrt(5))/2
    CHECK(x.num_rational() == 2);
    CHECK(x.num_surd() == 3);
    CHECK(x.log2_denom() == 1);
    CHECK(x == QuadElem(2, 3, 1, 5));

    CHECK_THROWS_AS(QuadElem(1, 1, 0, 4), std::invalid_argument);  // square
    CHECK_THROWS_AS(QuadElem(1, 1, 0, 1), std::invalid_argument);  // square
    CHECK_THROWS_AS(QuadElem(1, 1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(QuadElem(1, 1, 0, -2), std::invalid_argument);

    std::ostringstream os;
    os << QuadElem(1, 2, 1, 5);
    CHECK(os.str() == "(1 + 2*sqrt(5))/2^1");
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(0x5eed5eed);
    const mpz_class d = 6; // n = 2: the ring the closed forms live in
    const QuadElem one = QuadElem::integer(1, d);
    const QuadElem zero = QuadElem::integer(0, d);

    for (int trial = 0; trial < 200; ++trial) {
        const QuadElem x = random_elem(rng, d);
        const QuadElem y = random_elem(rng, d);
        const QuadElem z = random_elem(rng, d);

        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * one == x);
        CHECK(x + zero == x);
        CHECK((x + y) - y == x);
        CHECK(x - x == zero);

        // Conjugation is a ring homomorphism fixing the rationals.
        CHECK((x + y).conj() == x.conj() + y.conj());
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK(x.conj().conj() == x);
        CHECK((x + x.conj()).is_rational()); // trace
        CHECK((x * x.conj()).is_rational()); // norm
    }
}

TEST_CASE("powers") {
    const mpz_class d = 2;
    const QuadElem a(3, 2, 0, d); // fundamental-unit shape: norm 9 - 8 = 1
    CHECK(a.pow(0) == QuadElem::integer(1, d));
    CHECK(a.pow(1) == a);
    CHECK(a.pow(2) == QuadElem(17, 12, 0, d));
    CHECK(a.pow(5) == a * a * a * a * a);
    CHECK(a * a.conj() == QuadElem::integer(1, d));

    // Norm 1 makes conj the inverse, so powers of a and conj(a) cancel.
    CHECK(a.pow(7) * a.conj().pow(7) == QuadElem::integer(1, d));
}

TEST_CASE("unit and eigenvalue identities used by the closed forms") {
    // alpha = 2n+1 + 2 sqrt(D), D = n(n+1); here n = 3, D = 12.
    const mpz_class d = 12;
    const QuadElem alpha(7, 2, 0, d);
    const QuadElem beta = alpha.conj();
    CHECK(alpha * beta == QuadElem::integer(1, d)); // (2n+1)^2 - 4D = 1
    CHECK(alpha + beta == QuadElem::integer(14, d));
    CHECK(alpha - beta == QuadElem(0, 4, 0, d));

    // (alpha^2 - 1)^2 == 16 D alpha^2, the collapse behind the t_k form.
    const QuadElem one = QuadElem::integer(1, d);
    const QuadElem lhs = (alpha.pow(2) - one) * (alpha.pow(2) - one);
    CHECK(lhs == QuadElem::integer(16 * d, d) * alpha.pow(2));

    // lambda1 + lambda2 = m and 64 lambda1 lambda2 = 16m^2 - D; m = 2.
    const QuadElem l1(8, 1, 3, d);
    const QuadElem l2 = l1.conj();
    CHECK(l1 + l2 == QuadElem::integer(2, d));
    CHECK(QuadElem::integer(64, d) * l1 * l2 == QuadElem::integer(64 - 12, d));
}

TEST_CASE("exactness guards") {
    const mpz_class d = 2;
    CHECK(QuadElem(6, 0, 1, 2).to_integer() == 3);
    CHECK_THROWS_AS(QuadElem(1, 1, 0, d).to_integer(), invariant_violation);
    CHECK_THROWS_AS(QuadElem(1, 0, 1, d).to_integer(), invariant_violation);

    CHECK(QuadElem(4, 6, 0, d).div_sqrt_d() == QuadElem(6, 2, 0, d));
    CHECK_THROWS_AS(QuadElem(3, 1, 0, d).div_sqrt_d(), invariant_violation);

    CHECK(QuadElem(6, 9, 1, d).div_int(3) == QuadElem(2, 3, 1, d));
    CHECK_THROWS_AS(QuadElem(6, 8, 0, d).div_int(4), invariant_violation);
    CHECK_THROWS_AS(QuadElem(6, 8, 0, d).div_int(0), std::invalid_argument);

    CHECK_THROWS_AS(QuadElem::integer(1, 2) + QuadElem::integer(1, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(QuadElem::integer(1, 2) * QuadElem::sqrt_d(3),
                    std::invalid_argument);
}
