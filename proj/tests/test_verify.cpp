#include <doctest.h>

#include "dtn/construction.hpp"
#include "dtn/verify.hpp"

using namespace dtn;

TEST_CASE("verify_tuple accepts the known D(1)-triples") {
    const VerifyReport rep = verify_tuple({1, 15, 90}, 1);
    CHECK(rep.verdict);
    REQUIRE(rep.pairs.size() == 3);
    CHECK(rep.pairs[0].value == 121);
    CHECK(rep.pairs[0].root == 11);
    CHECK(rep.pairs[1].value == 4096);
    CHECK(rep.pairs[1].root == 64);
    CHECK(rep.pairs[2].value == 491401);
    CHECK(rep.pairs[2].root == 701);

    const VerifyReport two = verify_tuple({2, 15, 153}, 1);
    CHECK(two.verdict);
    CHECK(two.pairs[0].root == 19);
    CHECK(two.pairs[1].root == 188);
    CHECK(two.pairs[2].root == 1189);
}

TEST_CASE("verify_tuple reports failing pairs with the non-square value") {
    const VerifyReport rep = verify_tuple({2, 3, 4}, 1);
    CHECK_FALSE(rep.verdict);
    REQUIRE(rep.pairs.size() == 3);
    CHECK(rep.pairs[0].value == 19); // T_2 T_3 + 1
    CHECK_FALSE(rep.pairs[0].root.has_value());
    CHECK(rep.pairs[1].value == 31);
    CHECK(rep.pairs[2].value == 61);

    // One bad pair poisons the verdict even when the others certify.
    const VerifyReport mixed = verify_tuple({1, 5, 6}, 1);
    CHECK_FALSE(mixed.verdict);
    CHECK(mixed.pairs[0].root == 4); // (1,5) still certifies
}

TEST_CASE("verify_raw_tuple handles literature tuples and negative n") {
    const VerifyReport fermat = verify_raw_tuple({1, 3, 8, 120}, 1);
    CHECK(fermat.verdict);
    REQUIRE(fermat.pairs.size() == 6);
    CHECK(fermat.pairs[5].value == 961); // 8·120 + 1
    CHECK(fermat.pairs[5].root == 31);

    // Products plus a negative n can go negative; never a square.
    const VerifyReport neg = verify_raw_tuple({1, 2}, -10);
    CHECK_FALSE(neg.verdict);
    CHECK(neg.pairs[0].value == -8);

    const VerifyReport ok = verify_raw_tuple({3, 5}, -14);
    CHECK(ok.verdict);
    CHECK(ok.pairs[0].root == 1);
}

TEST_CASE("verify input validation") {
    CHECK_THROWS_AS(verify_tuple({5}, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_tuple({1, 5}, 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_tuple({5, 5}, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_tuple({5, 3}, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_tuple({0, 3}, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_raw_tuple({-1, 3}, 1), std::invalid_argument);
}

TEST_CASE("every constructed triple passes the generic verifier") {
    for (const auto& p : {ConstructionParams{1, 1}, ConstructionParams{2, 1},
                          ConstructionParams{3, 7}, ConstructionParams{5, 4}}) {
        const mpz_class m2 = p.m * p.m;
        TripleStream stream(p);
        for (int k = 0; k < 5; ++k) {
            const TripleRecord rec = stream.next();
            const VerifyReport rep = verify_tuple(
                {rec.indices[0], rec.indices[1], rec.indices[2]}, m2);
            CHECK(rep.verdict);
            CHECK(rep.pairs[0].root == rec.certificates[0].root);
            CHECK(rep.pairs[1].root == rec.certificates[1].root);
            CHECK(rep.pairs[2].root == rec.certificates[2].root);
        }
    }
}

TEST_CASE("extension_candidate") {
    CHECK(extension_candidate(1, 5, 1) == 32);
    CHECK(extension_candidate(1, 9, 2) == 56);

    // (1,15) is a D(1)-pair, but its root 11 is not T_1 + 1·3, so the
    // mechanism does not apply.
    CHECK_FALSE(extension_candidate(1, 15, 1).has_value());

    // Not a D(1)-pair at all.
    CHECK_THROWS_AS(extension_candidate(2, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(extension_candidate(5, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(extension_candidate(1, 5, 0), std::invalid_argument);

    // On canonical pairs it reproduces the construction's third index.
    for (const auto& p : {ConstructionParams{1, 1}, ConstructionParams{2, 5},
                          ConstructionParams{4, 11}}) {
        CHECK(extension_candidate(p.n, p.n + 4 * p.m, p.m) ==
              8 * pair_root(p));
    }
}
