#include "doctest.h"

#include "avf/errors.hpp"
#include "avf/ideal.hpp"
#include "avf/order.hpp"
#include "avf/weil.hpp"

#include <algorithm>

using namespace avf;

namespace {

FieldElt elt(const NumberField& K, std::vector<Rat> v)
{
    v.resize(K.degree(), Rat(0));
    return v;
}

NumberFieldOrder power_order(NumberFieldPtr K) { return NumberFieldOrder(K, QLattice::standard(K->degree())); }

} // namespace

TEST_CASE("order construction: Z[pi,pibar] examples")
{
    // P = (t^2-3)^2, q = 3: pibar = 3/pi = pi, so Z[pi,pibar] = Z[sqrt3]
    WeilPolynomial w = validate_weil(3, IntPolynomial{9, 0, -6, 0, 1});
    NumberFieldOrder O = order_construct(w, OrderSpecZPiBar{});
    CHECK(O.degree() == 2);
    CHECK(O.lattice() == QLattice::standard(2)); // basis {1, pi}

    // P = t^2 - t + 2, q = 2: pibar = 1 - pi, so Z[pi,pibar] = Z[pi]
    WeilPolynomial w2 = validate_weil(2, IntPolynomial{2, -1, 1});
    NumberFieldOrder A = order_construct(w2, OrderSpecZPiBar{});
    NumberFieldOrder B = order_construct(w2, OrderSpecZPi{});
    CHECK(A == B);
}

TEST_CASE("order from generators: non-monogenic cubic ring")
{
    // {1, 2a, 2a^2} with a^3 = 2: closed, full rank, index 4 in Z[a]
    NumberFieldPtr K = make_number_field(IntPolynomial{-2, 0, 0, 1});
    NumberFieldOrder O = order_from_gens(K, {elt(*K, {0, 2, 0}), elt(*K, {0, 0, 2})});
    CHECK(O.degree() == 3);
    CHECK(lattice_index(O.lattice(), QLattice::standard(3)) == 4);

    // 1/2 is not integral: module closure must fail
    CHECK_THROWS_AS((void)order_from_gens(K, {elt(*K, {Rat(1, 2), 0, 0})}), Error);
    // the span of {1} alone has rank 1 < 3
    CHECK_THROWS_AS((void)order_from_gens(K, std::vector<FieldElt>{}), Error);
}

TEST_CASE("maximal_order examples")
{
    // disc(t^2+3) = -12 -> O_K = Z[(1+sqrt-3)/2]
    NumberFieldOrder OK3 = maximal_order(make_number_field(IntPolynomial{3, 0, 1}));
    CHECK(lattice_index(QLattice::standard(2), OK3.lattice()) == 2);

    // t^2+2: already maximal
    NumberFieldOrder OK2 = maximal_order(make_number_field(IntPolynomial{2, 0, 1}));
    CHECK(OK2.lattice() == QLattice::standard(2));

    // t^3-2: Z[a] is maximal (disc -108, no enlargement)
    NumberFieldOrder OK_cubic = maximal_order(make_number_field(IntPolynomial{-2, 0, 0, 1}));
    CHECK(OK_cubic.lattice() == QLattice::standard(3));

    // t^2-3: Z[sqrt3] is maximal
    NumberFieldOrder OKr3 = maximal_order(make_number_field(IntPolynomial{-3, 0, 1}));
    CHECK(OKr3.lattice() == QLattice::standard(2));
}

TEST_CASE("ideal arithmetic: unit, principal, quotient examples")
{
    NumberFieldPtr K = make_number_field(IntPolynomial{3, 0, 1}); // Q(sqrt-3)
    NumberFieldOrder O = power_order(K);                          // Z[sqrt-3]
    FractionalIdeal one = FractionalIdeal::unit_ideal(O);

    CHECK(ideal_quotient(one, one) == one);

    FieldElt s = elt(*K, {2, 1}); // 2 + sqrt-3
    FractionalIdeal sO = FractionalIdeal::principal(O, s);
    // (O : sO) = s^-1 O
    FractionalIdeal inv = ideal_quotient(one, sO);
    CHECK(ideal_product(inv, sO) == one);

    // p = 2O + (1+sqrt-3)O: (O : p) = p/2, and p is not invertible
    FractionalIdeal p = FractionalIdeal::from_generators(O, {elt(*K, {2, 0}), elt(*K, {1, 1})});
    FractionalIdeal colon = ideal_quotient(one, p);
    RatMatrix half = RatMatrix::identity(2);
    half.at(0, 0) = half.at(1, 1) = Rat(1, 2);
    CHECK(colon.lattice() == lattice_transform(p.lattice(), half));
    CHECK_FALSE(is_invertible(p));
    CHECK(ideal_product(p, colon) == p); // p * (O:p) = p != O

    CHECK(is_invertible(sO));
    CHECK(is_invertible(FractionalIdeal::principal(O, elt(*K, {0, 1})))); // principal ramified (sqrt-3)
}

TEST_CASE("conductor examples")
{
    // Z[sqrt-2] is maximal: conductor = O
    NumberFieldOrder O2 = power_order(make_number_field(IntPolynomial{2, 0, 1}));
    CHECK(conductor(O2) == FractionalIdeal::unit_ideal(O2));

    // Z[sqrt-3]: conductor = 2O + (1+sqrt-3)O, index 2
    NumberFieldPtr K = make_number_field(IntPolynomial{3, 0, 1});
    NumberFieldOrder O = power_order(K);
    FractionalIdeal f = conductor(O);
    CHECK(f.norm() == 2);
    CHECK(f == FractionalIdeal::from_generators(O, {elt(*K, {2, 0}), elt(*K, {1, 1})}));

    // Z[sqrt3] maximal: conductor = O
    NumberFieldOrder Or3 = power_order(make_number_field(IntPolynomial{-3, 0, 1}));
    CHECK(conductor(Or3) == FractionalIdeal::unit_ideal(Or3));
}

TEST_CASE("is_coprime_to_conductor examples")
{
    NumberFieldOrder O2 = power_order(make_number_field(IntPolynomial{2, 0, 1}));
    CHECK(is_coprime_to_conductor(elt(O2.field(), {3, 0}), O2)); // conductor is O

    NumberFieldPtr K = make_number_field(IntPolynomial{3, 0, 1});
    NumberFieldOrder O = power_order(K);
    CHECK_FALSE(is_coprime_to_conductor(elt(*K, {2, 0}), O));
    CHECK(is_coprime_to_conductor(elt(*K, {5, 0}), O));
}

TEST_CASE("gorenstein: quadratic and monogenic orders are Gorenstein")
{
    CHECK(is_gorenstein(power_order(make_number_field(IntPolynomial{3, 0, 1}))));
    CHECK(is_gorenstein(power_order(make_number_field(IntPolynomial{-2, 0, 0, 1}))));

    // the index-4 suborder {1, 2a, 2a^2} of Z[cbrt2]: decided by the
    // trace-dual invertibility, not hard-coded
    NumberFieldPtr K = make_number_field(IntPolynomial{-2, 0, 0, 1});
    NumberFieldOrder O = order_from_gens(K, {elt(*K, {0, 2, 0}), elt(*K, {0, 0, 2})});
    FractionalIdeal dual = trace_dual(O);
    bool direct = ideal_product(dual, ideal_quotient(FractionalIdeal::unit_ideal(O), dual)) ==
                  FractionalIdeal::unit_ideal(O);
    CHECK(is_gorenstein(O) == direct);
}

TEST_CASE("residue_structure examples and the counting identity")
{
    // scalar c on a rank-r order: [c, ..., c]
    NumberFieldOrder O = power_order(make_number_field(IntPolynomial{-3, 0, 1}));
    auto g = residue_structure(O, elt(O.field(), {2, 0}));
    CHECK(g.invariants == std::vector<Int>{2, 2});

    // Z[sqrt-2], s = sqrt-2 - 1: N(s) = 3, structure [3]
    NumberFieldOrder O2 = power_order(make_number_field(IntPolynomial{2, 0, 1}));
    auto g2 = residue_structure(O2, elt(O2.field(), {-1, 1}));
    CHECK(g2.invariants == std::vector<Int>{3});

    CHECK_THROWS_AS((void)residue_structure(O2, elt(O2.field(), {0, 0})), Error);
}

TEST_CASE("counting identity on random orders and elements")
{
    SplitMix64 rng(2024);
    std::vector<IntPolynomial> minpolys = {
        IntPolynomial{2, 0, 1},     IntPolynomial{-3, 0, 1},   IntPolynomial{3, -1, 1},
        IntPolynomial{-2, 0, 0, 1}, IntPolynomial{1, 1, 0, 1}, IntPolynomial{1, -1, 0, 0, 1},
        IntPolynomial{3, 0, 0, 0, 1}};
    for (const auto& m : minpolys) {
        NumberFieldPtr K = make_number_field(m);
        NumberFieldOrder O = power_order(K);
        for (int trial = 0; trial < 12; ++trial) {
            FieldElt s(K->degree(), Rat(0));
            bool zero = true;
            for (unsigned i = 0; i < K->degree(); ++i) {
                int c = static_cast<int>(rng.below(9)) - 4;
                s[i] = c;
                if (c) zero = false;
            }
            if (zero || K->norm(s) == 0) continue;
            auto g = residue_structure(O, s);
            CHECK(Rat(g.order()) == abs(K->norm(s)));
            CHECK(abs(K->norm(s)) == abs(K->norm_resultant(s)));
        }
    }
}

TEST_CASE("factor_coprime_ideal examples")
{
    // 3 splits in Z[sqrt-2]: two primes of norm 3, product = 3O
    NumberFieldOrder O = power_order(make_number_field(IntPolynomial{2, 0, 1}));
    auto f3 = factor_coprime_ideal(O, elt(O.field(), {3, 0}));
    REQUIRE(f3.size() == 2);
    CHECK(f3[0].exponent == 1);
    CHECK(f3[1].exponent == 1);
    CHECK(f3[0].prime.norm() == 3);
    CHECK(f3[1].prime.norm() == 3);
    for (auto& f : f3) CHECK(is_invertible(f.prime));

    // 5 is inert in Z[sqrt-2]
    auto f5 = factor_coprime_ideal(O, elt(O.field(), {5, 0}));
    REQUIRE(f5.size() == 1);
    CHECK(f5[0].exponent == 1);
    CHECK(f5[0].residue_deg == 2);

    // 2 in Z[sqrt-3] is not coprime to the conductor
    NumberFieldOrder O3 = power_order(make_number_field(IntPolynomial{3, 0, 1}));
    CHECK_THROWS_WITH_AS((void)factor_coprime_ideal(O3, elt(O3.field(), {2, 0})), doctest::Contains("NotCoprime"),
                         Error);
}

TEST_CASE("factorization roundtrip and invertibility on random coprime elements")
{
    SplitMix64 rng(99);
    std::vector<IntPolynomial> minpolys = {IntPolynomial{2, 0, 1}, IntPolynomial{3, 0, 1},
                                           IntPolynomial{-5, 1, 1}, IntPolynomial{-2, 0, 0, 1}};
    int done = 0;
    for (int trial = 0; trial < 200 && done < 40; ++trial) {
        const auto& m = minpolys[rng.below(minpolys.size())];
        NumberFieldPtr K = make_number_field(m);
        NumberFieldOrder O = power_order(K);
        FieldElt s(K->degree(), Rat(0));
        for (unsigned i = 0; i < K->degree(); ++i) s[i] = static_cast<int>(rng.below(7)) - 3;
        if (K->is_zero(s) || K->norm(s) == 0) continue;
        if (!is_coprime_to_conductor(s, O)) continue;
        auto factors = factor_coprime_ideal(O, s);
        FractionalIdeal prod = FractionalIdeal::unit_ideal(O);
        for (auto& f : factors) {
            CHECK(is_invertible(f.prime));
            CHECK(is_prime_of_order(O, f.prime));
            // residue cardinality is a prime power p^f
            CHECK(f.prime.norm() == Rat(pow_ui(f.residue_char, f.residue_deg)));
            prod = ideal_product(prod, ideal_pow(f.prime, f.exponent));
        }
        CHECK(prod == FractionalIdeal::principal(O, s));
        ++done;
    }
    CHECK(done == 40);
}

TEST_CASE("residue structure via CRT route matches SNF route")
{
    SplitMix64 rng(7777);
    std::vector<IntPolynomial> minpolys = {IntPolynomial{2, 0, 1}, IntPolynomial{3, 0, 1},
                                           IntPolynomial{-3, 0, 1}, IntPolynomial{-2, 0, 0, 1}};
    int done = 0;
    for (int trial = 0; trial < 300 && done < 25; ++trial) {
        const auto& m = minpolys[rng.below(minpolys.size())];
        NumberFieldPtr K = make_number_field(m);
        NumberFieldOrder O = power_order(K);
        FieldElt s(K->degree(), Rat(0));
        for (unsigned i = 0; i < K->degree(); ++i) s[i] = static_cast<int>(rng.below(7)) - 3;
        if (K->is_zero(s) || K->norm(s) == 0) continue;
        if (!is_coprime_to_conductor(s, O)) continue;
        CHECK(residue_structure_crt(O, s) == residue_structure(O, s));
        ++done;
    }
    CHECK(done == 25);
}

TEST_CASE("intermediate orders of a quadratic field")
{
    // m = t^2 + 9: Z[3i] has index 3 in O_K = Z[i]
    NumberFieldPtr K = make_number_field(IntPolynomial{9, 0, 1});
    NumberFieldOrder O = power_order(K);
    NumberFieldOrder OK = maximal_order(K);
    CHECK(lattice_index(O.lattice(), OK.lattice()) == 3);
    auto orders = intermediate_orders(O, OK, 10000);
    REQUIRE(orders.size() == 2); // index 1 and index 3
    CHECK(orders.front() == OK);
    CHECK(orders.back() == O);
    for (const auto& ord : orders) CHECK(is_gorenstein(ord));
}

TEST_CASE("orders are canonical under basis presentation")
{
    // two generator presentations of span{1, 3 sqrt-2} give identical data
    NumberFieldPtr K = make_number_field(IntPolynomial{2, 0, 1});
    NumberFieldOrder O1 = order_from_gens(K, {elt(*K, {0, 3})});
    NumberFieldOrder O2 = order_from_gens(K, {elt(*K, {3, 3}), elt(*K, {0, 9})});
    CHECK(O1 == O2);
}
