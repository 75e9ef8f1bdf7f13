#include "doctest.h"

#include "avf/errors.hpp"
#include "avf/oracle_ec.hpp"

using namespace avf;

TEST_CASE("small field arithmetic sanity")
{
    SmallField F9(3, 2, 100000);
    // q = 9, multiplicative order of every nonzero element divides 8
    for (SmallField::El a = 1; a < F9.q(); ++a) {
        CHECK(F9.pow(a, 8) == F9.one());
        CHECK(F9.mul(a, F9.inv(a)) == F9.one());
        CHECK(F9.add(a, F9.neg(a)) == F9.zero());
    }
    // addition matches digit arithmetic: (1 + x) + (2 + x) = 2x in F_9
    // packed: 1+x = 4, 2+x = 5, 2x = 6
    CHECK(F9.add(4, 5) == 6);

    SmallField F16(2, 4, 100000);
    for (SmallField::El a = 1; a < F16.q(); ++a) {
        CHECK(F16.mul(a, F16.inv(a)) == F16.one());
        CHECK(F16.add(a, a) == 0);
        // squaring table inverts Frobenius
        CHECK(F16.frob_sqrt(F16.mul(a, a)) == a);
    }
}

TEST_CASE("field embedding is a ring homomorphism")
{
    SmallField F2(2, 2, 100000);  // F_4
    SmallField F4(2, 4, 100000);  // F_16
    auto emb = F4.embed_from(F2);
    for (SmallField::El a = 0; a < F2.q(); ++a)
        for (SmallField::El b = 0; b < F2.q(); ++b) {
            CHECK(emb(F2.add(a, b)) == F4.add(emb(a), emb(b)));
            CHECK(emb(F2.mul(a, b)) == F4.mul(emb(a), emb(b)));
        }
    CHECK(emb(F2.one()) == F4.one());
}

TEST_CASE("ec_enumerate examples")
{
    // y^2 + y = x^3 over F_2: {inf, (0,0), (0,1)}
    EllipticCurve E{2, 1, {0, 0, 1, 0, 0}};
    auto g1 = ec_enumerate(E, 1);
    CHECK(g1.count == 3);
    CHECK(g1.structure.invariants == std::vector<Int>{3});

    // same curve over F_4: 9 points, full 3-torsion
    auto g2 = ec_enumerate(E, 2);
    CHECK(g2.count == 9);
    CHECK(g2.structure.invariants == std::vector<Int>{3, 3});

    // y^2 = x^3 + x over F_3: cyclic of order 4
    EllipticCurve E3{3, 1, {0, 0, 0, 1, 0}};
    auto g3 = ec_enumerate(E3, 1);
    CHECK(g3.count == 4);
    CHECK(g3.structure.invariants == std::vector<Int>{4});

    CHECK_THROWS_WITH_AS((void)ec_enumerate(E, 20), doctest::Contains("FieldTooLarge"), Error);
    // singular: y^2 = x^3
    EllipticCurve S{5, 1, {0, 0, 0, 0, 0}};
    CHECK_THROWS_AS((void)ec_enumerate(S, 1), Error);
}

TEST_CASE("ec_frobenius examples")
{
    EllipticCurve E{2, 1, {0, 0, 1, 0, 0}};
    CHECK(ec_frobenius(E).poly == IntPolynomial{2, 0, 1});

    EllipticCurve E3{3, 1, {0, 0, 0, 1, 0}};
    CHECK(ec_frobenius(E3).poly == IntPolynomial{3, 0, 1});

    // y^2 = x^3 + x + 1 over F_5: 9 points, a = -3
    EllipticCurve E5{5, 1, {0, 0, 0, 1, 1}};
    CHECK(ec_frobenius(E5).poly == IntPolynomial{5, 3, 1});
}

TEST_CASE("verify_ec examples")
{
    // y^2 = x^3 + x over F_3: oracle [4]; Z[sqrt-3] predicts [4], O_K predicts [2,2]
    EllipticCurve E3{3, 1, {0, 0, 0, 1, 0}};
    auto rep = verify_ec(E3, 1);
    CHECK(rep.pass);
    CHECK(rep.oracle_count == 4);
    CHECK(rep.oracle_structure.invariants == std::vector<Int>{4});
    REQUIRE(rep.predictions.size() == 2);
    // orders sorted by index in the maximal order: O_K first
    CHECK(rep.predictions[0].predicted->invariants == std::vector<Int>{2, 2});
    CHECK(rep.predictions[1].predicted->invariants == std::vector<Int>{4});
    REQUIRE(rep.match_set.size() == 1);
    CHECK(rep.match_set[0] == 1);

    // y^2 + y = x^3 over F_2, n = 2: oracle [3,3], maximal Z[sqrt-2] forced
    EllipticCurve E2{2, 1, {0, 0, 1, 0, 0}};
    auto rep2 = verify_ec(E2, 2);
    CHECK(rep2.pass);
    CHECK(rep2.oracle_structure.invariants == std::vector<Int>{3, 3});
    CHECK(rep2.predictions.size() == 1); // disc -8: Z[pi] is already maximal
    CHECK(rep2.match_set.size() == 1);
}

TEST_CASE("verify_ec detects the out-of-scope integral-pi case")
{
    // y^2 + y = x^3 over F_4 is supersingular with a = -4, pi = -2
    EllipticCurve E{2, 2, {0, 0, 1, 0, 0}};
    CHECK_THROWS_WITH_AS((void)verify_ec(E, 1), doctest::Contains("OutOfTheoremScope"), Error);
}

TEST_CASE("oracle invariants: at most 2 factors, smaller divides gcd(q^n - 1, larger)")
{
    for (std::uint32_t p : {2u, 3u, 5u}) {
        SplitMix64 rng(p);
        for (int trial = 0; trial < 12; ++trial) {
            EllipticCurve E{p, 1, {}};
            for (auto& c : E.a) c = static_cast<SmallField::El>(rng.below(p));
            unsigned n = 1 + static_cast<unsigned>(rng.below(3));
            try {
                auto g = ec_enumerate(E, n);
                REQUIRE(g.structure.invariants.size() <= 2);
                Int qn = pow_ui(Int(p), n);
                if (g.structure.invariants.size() == 2) {
                    const Int& small = g.structure.invariants[0];
                    CHECK(g.structure.invariants[1] % small == 0);
                    CHECK(mod_floor(qn - 1, small) == 0);
                }
                CHECK(g.count == g.structure.order());
            } catch (const Error& e) {
                CHECK(e.code() == errc::invalid_input); // singular curve rolled
            }
        }
    }
}
