#include "doctest.h"

#include "avf/errors.hpp"
#include "avf/oracle_jac2.hpp"

using namespace avf;

namespace {

// shared fixture pieces for y^2 = x^5 + 1 over F_3
struct Fix {
    HyperellipticCurve C{3, {1, 0, 0, 0, 0}};
    SmallField F{3, 1, 100000};
    std::array<SmallField::El, 5> f{1, 0, 0, 0, 0};
};

} // namespace

TEST_CASE("cantor group axioms on y^2 = x^5 + 1 over F_3")
{
    Fix fx;
    auto divisors_group = jac_enumerate(fx.C, 1);
    // identity and inverse laws on every element; closure and associativity
    // spot-checked on all triples of a small generating prefix
    MumfordDivisor id{};
    // re-enumerate the divisor list through the library path used by the oracle
    // (cantor ops are exercised through scalar multiples below)
    std::vector<MumfordDivisor> some;
    for (SmallField::El a = 0; a < fx.F.q(); ++a) {
        SmallField::El z = fx.F.add(fx.F.pow(a, 5), fx.F.one());
        SmallField::El r;
        if (z == 0) some.push_back({1, {fx.F.neg(a), 0}, {0, 0}});
        else if (fx.F.sqrt(z, &r)) some.push_back({1, {fx.F.neg(a), 0}, {r, 0}});
    }
    REQUIRE(!some.empty());
    for (const auto& D : some) {
        CHECK(cantor_add(fx.F, fx.f, D, id) == D);
        CHECK(cantor_add(fx.F, fx.f, D, cantor_neg(fx.F, D)) == id);
    }
    for (const auto& A : some)
        for (const auto& B : some)
            for (const auto& C2 : some) {
                auto ab_c = cantor_add(fx.F, fx.f, cantor_add(fx.F, fx.f, A, B), C2);
                auto a_bc = cantor_add(fx.F, fx.f, A, cantor_add(fx.F, fx.f, B, C2));
                CHECK(ab_c == a_bc);
            }
    // the whole group is killed by its exponent
    Int N = divisors_group.count;
    for (const auto& D : some) CHECK(cantor_mul(fx.F, fx.f, D, N) == id);
}

TEST_CASE("jac_enumerate double-entry bookkeeping")
{
    Fix fx;
    auto g = jac_enumerate(fx.C, 1);
    auto w = jac_frobenius(fx.C);
    CHECK(g.count == w.poly.eval(Int(1)));
    CHECK(g.structure.order() == g.count);
    CHECK(g.structure.invariants.size() <= 4);

    // identity is the unique degree-0 divisor: count over F_9 as well
    auto g2 = jac_enumerate(fx.C, 2);
    CHECK(g2.count == base_extension(w, 2).point_count);
}

TEST_CASE("jac_frobenius basics")
{
    Fix fx;
    auto w = jac_frobenius(fx.C);
    CHECK(w.g == 2);
    CHECK(w.q == 3);
    CHECK(w.poly.coeff(0) == 9); // constant = p^2

    // a1 = 0 when #C(F_p) = p + 1
    // y^2 = x^5 + x over F_5: #C = 5 + 1 = 6 gives s1 = 0
    HyperellipticCurve C5{5, {0, 1, 0, 0, 0}};
    auto w5 = jac_frobenius(C5);
    CHECK(w5.poly.coeff(3) == 0);

    CHECK_THROWS_AS((void)jac_frobenius(HyperellipticCurve{3, {0, 0, 0, 0, 0}}), Error); // x^5: repeated root
}

TEST_CASE("2-torsion count matches the squarefree-divisor description")
{
    for (auto C : {HyperellipticCurve{3, {1, 0, 0, 0, 0}}, HyperellipticCurve{3, {1, 2, 0, 1, 0}},
                   HyperellipticCurve{5, {1, 1, 0, 0, 0}}}) {
        try {
            for (unsigned n = 1; n <= 2; ++n) {
                SmallField F(C.p, n, 100000);
                SmallField base(C.p, 1, 100000);
                auto emb = F.embed_from(base);
                std::array<SmallField::El, 5> f{};
                for (int i = 0; i < 5; ++i) f[i] = emb(C.f[i]);

                // count divisors killed by 2 by enumeration
                auto dump = jac_enumerate(C, n);
                Int two_rank = 0;
                for (const Int& d : dump.structure.invariants)
                    if (mod_floor(d, 2) == 0) two_rank += 1;
                Int by_invariants = pow_ui(Int(2), two_rank.get_ui());

                // classical description: monic squarefree divisors of f of
                // degree <= 2 over F, plus the identity
                auto poly_eval = [&](SmallField::El x) {
                    SmallField::El acc = F.one();
                    for (int i = 4; i >= 0; --i) acc = F.add(F.mul(acc, x), f[i]);
                    return acc;
                };
                Int count = 1;
                for (SmallField::El a = 0; a < F.q(); ++a)
                    if (poly_eval(a) == 0) count += 1; // x - a divides f
                // degree-2 divisors: u | f with u monic quadratic
                for (SmallField::El u1 = 0; u1 < F.q(); ++u1)
                    for (SmallField::El u0 = 0; u0 < F.q(); ++u0) {
                        SmallField::El A = 0, B = 1;
                        for (int i = 4; i >= 0; --i) {
                            SmallField::El nA = F.add(F.mul(A, F.neg(u1)), B);
                            SmallField::El nB = F.mul(A, F.neg(u0));
                            A = nA;
                            B = F.add(nB, f[i]);
                        }
                        if (A == 0 && B == 0) count += 1;
                    }
                CHECK(by_invariants == count);
            }
        } catch (const Error&) {
            continue;
        }
    }
}

TEST_CASE("verify_jac on curves with forced maximal order")
{
    // search tiny curves over F_3 with irreducible ordinary P and
    // Z[pi,pibar] = O_K; those predictions are forced and must match
    int verified = 0;
    for (std::uint32_t packed = 0; packed < 243 && verified < 2; ++packed) {
        HyperellipticCurve C{3, {}};
        std::uint32_t v = packed;
        for (int i = 0; i < 5; ++i) {
            C.f[i] = v % 3;
            v /= 3;
        }
        try {
            WeilPolynomial w = jac_frobenius(C);
            if (w.d != 1 || !is_ordinary(w)) continue;
            NumberFieldOrder zpb = order_construct(w, OrderSpecZPiBar{});
            NumberFieldOrder omax = order_construct(w, OrderSpecMaximal{});
            if (!(zpb == omax)) continue;
            auto rep = verify_jac(C, 1);
            CHECK(rep.pass);
            CHECK(rep.structure_attempted);
            REQUIRE(rep.predictions.size() == 1);
            CHECK(rep.predictions[0].matches_oracle);
            ++verified;
        } catch (const Error&) {
            continue;
        }
    }
    CHECK(verified == 2);
}

TEST_CASE("verify_jac cardinality-only policy for d = 2")
{
    // y^2 = x^5 + x over F_5 is supersingular with P = (t^2 + 5)^2, so the
    // structure check is skipped by policy and only the cardinality is verified
    HyperellipticCurve C{5, {0, 1, 0, 0, 0}};
    WeilPolynomial w = jac_frobenius(C);
    REQUIRE(w.d == 2);
    CHECK(w.m == IntPolynomial{5, 0, 1});
    auto rep = verify_jac(C, 1);
    CHECK_FALSE(rep.structure_attempted);
    CHECK(rep.cardinality_ok);
    CHECK(rep.pass);
    CHECK(rep.predictions.empty());
}
