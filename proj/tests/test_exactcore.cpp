#include "doctest.h"

#include "avf/errors.hpp"
#include "avf/finite_field.hpp"
#include "avf/int_matrix.hpp"
#include "avf/integer_factor.hpp"
#include "avf/polynomial.hpp"
#include "avf/zz_factor.hpp"

#include <algorithm>

using namespace avf;

namespace {

IntMatrix mat(std::size_t r, std::size_t c, std::vector<long> v)
{
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < v.size(); ++i) m.entries[i] = v[i];
    return m;
}

IntMatrix random_unimodular(std::size_t n, SplitMix64& rng)
{
    // product of elementary row operations on the identity
    IntMatrix u = IntMatrix::identity(n);
    for (int step = 0; step < 12; ++step) {
        std::size_t i = rng.below(n), j = rng.below(n);
        if (i == j) continue;
        Int c = Int(rng.below(7)) - 3;
        for (std::size_t k = 0; k < n; ++k) u.at(i, k) += c * u.at(j, k);
    }
    return u;
}

} // namespace

TEST_CASE("hnf fixed points and canonical form")
{
    // [[2,1],[0,1]]: the entry above the pivot 1 reduces to 0, so the
    // canonical form of that lattice is [[2,0],[0,1]]; it is then a fixed point.
    auto m = mat(2, 2, {2, 1, 0, 1});
    auto r = hnf(m);
    CHECK(r.h == mat(2, 2, {2, 0, 0, 1}));
    CHECK(hnf(r.h).h == r.h);
    // a super-diagonal entry below the pivot is untouched
    auto m2 = mat(2, 2, {2, 1, 0, 3});
    CHECK(hnf(m2).h == m2);

    auto id = IntMatrix::identity(3);
    CHECK(hnf(id).h == id);

    auto sw = mat(2, 2, {0, 1, 1, 0});
    CHECK(hnf(sw).h == IntMatrix::identity(2));
}

TEST_CASE("hnf properties: U*M = H, |det U| = 1, idempotent")
{
    SplitMix64 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + rng.below(3);
        IntMatrix m(n, n);
        for (auto& e : m.entries) e = Int(rng.below(21)) - 10;
        auto r = hnf(m);
        CHECK(r.u * m == r.h);
        Int du = det(r.u);
        CHECK(abs(du) == 1);
        CHECK(hnf(r.h).h == r.h);
    }
}

TEST_CASE("snf invariants basics")
{
    CHECK(snf_invariants(mat(2, 2, {2, 0, 0, 4})) == std::vector<Int>{2, 4});
    CHECK(snf_invariants(IntMatrix::identity(3)) == std::vector<Int>{1, 1, 1});
    // [[-1,-3],[1,-1]]: det 4, entry gcd 1
    CHECK(snf_invariants(mat(2, 2, {-1, -3, 1, -1})) == std::vector<Int>{1, 4});
    CHECK_THROWS_AS((void)snf_invariants(mat(2, 2, {1, 2, 2, 4})), Error);
}

TEST_CASE("snf: divisibility chain, determinant product, unimodular invariance")
{
    SplitMix64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + rng.below(3);
        IntMatrix m(n, n);
        do {
            for (auto& e : m.entries) e = Int(rng.below(13)) - 6;
        } while (det(m) == 0);
        auto inv = snf_invariants(m);
        Int prod = 1;
        for (std::size_t i = 0; i < inv.size(); ++i) {
            prod *= inv[i];
            if (i + 1 < inv.size()) CHECK(inv[i + 1] % inv[i] == 0);
        }
        CHECK(prod == abs(det(m)));
        auto u = random_unimodular(n, rng);
        auto v = random_unimodular(n, rng);
        CHECK(snf_invariants(u * m * v) == inv);
    }
}

TEST_CASE("resultant examples and symmetry")
{
    IntPolynomial f{2, 0, 1};  // t^2 + 2
    CHECK(resultant(f, IntPolynomial{-1, 1}) == 3);       // Res(t^2+2, t-1) = P(1)
    CHECK(resultant(f, IntPolynomial{-1, 0, 1}) == 9);    // P(1) P(-1) = 3*3
    CHECK(resultant(f, IntPolynomial{1}) == 1);

    SplitMix64 rng(11);
    auto rand_poly = [&](int maxdeg) {
        std::vector<Int> c(1 + rng.below(maxdeg + 1));
        for (auto& x : c) x = Int(rng.below(9)) - 4;
        IntPolynomial p(std::move(c));
        if (p.is_zero()) p = IntPolynomial{1};
        return p;
    };
    for (int trial = 0; trial < 60; ++trial) {
        IntPolynomial a = rand_poly(4), b = rand_poly(4), c = rand_poly(3);
        Int lhs = resultant(a, b);
        Int sign = (a.degree() * b.degree()) % 2 == 0 ? 1 : -1;
        CHECK(lhs == sign * resultant(b, a));
        CHECK(resultant(a, b * c) == resultant(a, b) * resultant(a, c));
    }
}

TEST_CASE("sturm_count examples")
{
    CHECK(sturm_count(IntPolynomial{0, 1}, Rat(-1), Rat(1)) == 1);      // root at 0
    CHECK(sturm_count(IntPolynomial{-4, 1, 1}, Rat(-4), Rat(4)) == 2);  // (-1 +- sqrt17)/2
    CHECK(sturm_count(IntPolynomial{1, 0, 1}, Rat(-10), Rat(10)) == 0); // no real roots
    // half-open: root at the right endpoint counts, at the left does not
    CHECK(sturm_count(IntPolynomial{0, 1}, Rat(-1), Rat(0)) == 1);
    CHECK(sturm_count(IntPolynomial{0, 1}, Rat(0), Rat(1)) == 0);
}

TEST_CASE("sturm_count agrees with sign-scan oracle on random cubics")
{
    SplitMix64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Int> c(4);
        for (auto& x : c) x = Int(rng.below(7)) - 3;
        c[3] = Int(rng.below(3)) + 1;
        IntPolynomial h(std::move(c));
        IntPolynomial hs = squarefree_part(h);
        // oracle: scan a rational grid for sign changes over (-8, 8]; the
        // 1/512 step is below the Mahler root-separation bound for these
        // coefficient heights, so no cell holds two roots.
        long oracle = 0;
        const long den = 512;
        const long grid = den * 16;
        Rat prev = hs.eval(Rat(-8));
        for (long i = 1; i <= grid; ++i) {
            Rat x(-8 * den + i, den);
            Rat v = hs.eval(x);
            if (v == 0) {
                ++oracle;
                prev = 0;
            } else {
                if (prev != 0 && sgn(prev) != sgn(v)) ++oracle;
                prev = v;
            }
        }
        CHECK(sturm_count(hs, Rat(-8), Rat(8)) == oracle);
    }
}

TEST_CASE("sturm sqrt-interval endpoints handled exactly")
{
    // roots of t^2 - 4q t-ish boundary: h(y) = y^2 - 4q has roots exactly at +-2 sqrt(q)
    Int q = 2;
    IntPolynomial h{-4 * q, 0, 1}; // y^2 - 8
    // (-sqrt(8), sqrt(8)] contains +sqrt(8) only
    CHECK(sturm_count_sqrt_interval(h, 4 * q) == 1);
    // y^2 - 7 has both roots strictly inside (-sqrt8, sqrt8]
    CHECK(sturm_count_sqrt_interval(IntPolynomial{-7, 0, 1}, 8) == 2);
    // y^2 - 9 has none inside
    CHECK(sturm_count_sqrt_interval(IntPolynomial{-9, 0, 1}, 8) == 0);
}

TEST_CASE("factor_integer examples")
{
    auto f12 = factor_integer(12);
    REQUIRE(f12.size() == 2);
    CHECK(f12[0] == std::pair<Int, unsigned>{2, 2});
    CHECK(f12[1] == std::pair<Int, unsigned>{3, 1});

    auto f97 = factor_integer(97);
    REQUIRE(f97.size() == 1);
    CHECK(f97[0] == std::pair<Int, unsigned>{97, 1});

    auto f9991 = factor_integer(9991);
    REQUIRE(f9991.size() == 2);
    CHECK(f9991[0] == std::pair<Int, unsigned>{97, 1});
    CHECK(f9991[1] == std::pair<Int, unsigned>{103, 1});

    // roundtrip on a few larger ones
    SplitMix64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Int n = Int(rng.next() % 1000000000) + 2;
        Int prod = 1;
        for (auto& [p, e] : factor_integer(n)) {
            CHECK(is_prime(p));
            prod *= pow_ui(p, e);
        }
        CHECK(prod == n);
    }
}

TEST_CASE("ff_poly_factor examples")
{
    FFContext F2 = FFContext::prime_field(2);
    // t^2 + 1 = (t+1)^2 over F_2
    auto r = ff_poly_factor(F2, ffp_from_int_poly(F2, {1, 0, 1}));
    REQUIRE(r.factors.size() == 1);
    CHECK(r.factors[0].second == 2);
    CHECK(ffp_equal(r.factors[0].first, ffp_from_int_poly(F2, {1, 1})));

    FFContext F5 = FFContext::prime_field(5);
    // t^2 + 1 = (t+2)(t+3) over F_5
    auto r5 = ff_poly_factor(F5, ffp_from_int_poly(F5, {1, 0, 1}));
    REQUIRE(r5.factors.size() == 2);
    CHECK(r5.factors[0].second == 1);
    CHECK(r5.factors[1].second == 1);

    // irreducible input returns itself
    auto r3 = ff_poly_factor(F2, ffp_from_int_poly(F2, {1, 1, 1}));
    REQUIRE(r3.factors.size() == 1);
    CHECK(r3.factors[0].second == 1);
    CHECK(ffp_equal(r3.factors[0].first, ffp_from_int_poly(F2, {1, 1, 1})));
}

TEST_CASE("ff_poly_factor roundtrip over prime and extension fields")
{
    SplitMix64 rng(17);
    std::vector<FFContext> fields;
    fields.push_back(FFContext::prime_field(2));
    fields.push_back(FFContext::prime_field(3));
    fields.push_back(FFContext::prime_field(7));
    fields.push_back(FFContext::extension(2, {1, 1, 1}));     // F_4
    fields.push_back(FFContext::extension(3, {1, 2, 0, 1})); // F_27
    for (const auto& F : fields) {
        for (int trial = 0; trial < 15; ++trial) {
            FFPoly f;
            int deg = 1 + static_cast<int>(rng.below(6));
            for (int i = 0; i < deg; ++i) {
                FFElem e(F.k);
                for (unsigned j = 0; j < F.k; ++j) e[j] = Int(rng.next()) % F.p;
                f.push_back(e);
            }
            f.push_back(ff_one(F)); // monic
            ffp_trim(f);
            auto fac = ff_poly_factor(F, f);
            FFPoly prod{fac.unit};
            for (auto& [g, e] : fac.factors) {
                CHECK(ffp_is_irreducible(F, g));
                for (unsigned i = 0; i < e; ++i) prod = ffp_mul(F, prod, g);
            }
            CHECK(ffp_equal(prod, f));
        }
    }
}

TEST_CASE("zz_poly_factor examples")
{
    // paper class example: t^4 - 6 t^2 + 9 = (t^2 - 3)^2
    auto r = zz_poly_factor(IntPolynomial{9, 0, -6, 0, 1});
    REQUIRE(r.factors.size() == 1);
    CHECK(r.factors[0].first == IntPolynomial{-3, 0, 1});
    CHECK(r.factors[0].second == 2);

    CHECK(zz_is_irreducible(IntPolynomial{2, 0, 1}));

    auto r2 = zz_poly_factor(IntPolynomial{-1, 0, 1});
    REQUIRE(r2.factors.size() == 2);
    CHECK(r2.factors[0].first == IntPolynomial{-1, 1});
    CHECK(r2.factors[1].first == IntPolynomial{1, 1});

    CHECK_THROWS_AS((void)zz_poly_factor(IntPolynomial{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}),
                    Error);
}

TEST_CASE("zz_poly_factor roundtrip on random products")
{
    SplitMix64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        // build a product of small factors, factor it back, compare
        IntPolynomial f{Int(1 + rng.below(4))};
        int pieces = 1 + static_cast<int>(rng.below(3));
        for (int i = 0; i < pieces; ++i) {
            int deg = 1 + static_cast<int>(rng.below(3));
            std::vector<Int> c(deg + 1);
            for (auto& x : c) x = Int(rng.below(7)) - 3;
            c[deg] = 1 + Int(rng.below(2));
            unsigned e = 1 + static_cast<unsigned>(rng.below(2));
            f = f * pow(IntPolynomial(std::move(c)), e);
        }
        if (rng.below(2)) f = Int(-1) * f;
        if (f.degree() > kZZFactorDegreeCap) continue;
        auto fac = zz_poly_factor(f);
        CHECK(fac.product() == f);
        for (auto& [g, e] : fac.factors) {
            if (g.degree() >= 1) CHECK(zz_is_irreducible(g));
            else CHECK(is_prime(g.coeff(0)));
        }
    }
}
