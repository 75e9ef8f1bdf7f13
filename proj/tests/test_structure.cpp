#include "doctest.h"

#include "avf/errors.hpp"
#include "avf/structure.hpp"

using namespace avf;

namespace {

FieldElt elt(const NumberField& K, std::vector<Rat> v)
{
    v.resize(K.degree(), Rat(0));
    return v;
}

NumberFieldOrder power_order(NumberFieldPtr K) { return NumberFieldOrder(K, QLattice::standard(K->degree())); }

} // namespace

TEST_CASE("rational points, Gorenstein case: 3-point curve over F_2")
{
    WeilPolynomial w = validate_weil(2, IntPolynomial{2, 0, 1}); // t^2 + 2
    NumberFieldOrder O = order_construct(w, OrderSpecZPi{});     // Z[sqrt-2], maximal
    auto rep = rational_points_structure(w, O, 1, StructureMode::gorenstein_case);
    CHECK(rep.invariants.invariants == std::vector<Int>{3});
    CHECK(rep.cardinality == 3);
    CHECK(rep.cardinality_crosscheck == 3);
    CHECK(rep.d == 1);

    auto rep2 = rational_points_structure(w, O, 2, StructureMode::gorenstein_case);
    CHECK(rep2.invariants.invariants == std::vector<Int>{3, 3});
    CHECK(rep2.cardinality == 9);
}

TEST_CASE("rational points, center case: the (t^2-p)^2 class")
{
    // q = 3: Z = Z[sqrt3], pi^2 - 1 = 2, base [2,2], d = 2 -> [2,2,2,2], 16 points
    WeilPolynomial w = validate_weil(3, IntPolynomial{9, 0, -6, 0, 1});
    NumberFieldOrder Z = order_construct(w, OrderSpecZPiBar{});
    auto rep = rational_points_structure(w, Z, 2, StructureMode::center_case);
    CHECK(rep.d == 2);
    CHECK(rep.base.invariants == std::vector<Int>{2, 2});
    CHECK(rep.invariants.invariants == std::vector<Int>{2, 2, 2, 2});
    CHECK(rep.cardinality == 16);
    CHECK(rep.cardinality_crosscheck == 16);

    // the Gorenstein mode refuses: deg m = 2 != 2g = 4
    CHECK_THROWS_WITH_AS((void)rational_points_structure(w, Z, 2, StructureMode::gorenstein_case),
                         doctest::Contains("NotCommutativeCase"), Error);
}

TEST_CASE("center case rejects non-coprime pi^n - 1")
{
    // q = 3, P = t^2 + 3: Z[pi] has index 2 in O_K and the conductor prime
    // (2, 1 + pi) contains pi - 1, so n = 1 already violates coprimality.
    WeilPolynomial w = validate_weil(3, IntPolynomial{3, 0, 1});
    NumberFieldOrder O = order_construct(w, OrderSpecZPi{});
    CHECK_THROWS_WITH_AS((void)rational_points_structure(w, O, 1, StructureMode::center_case),
                         doctest::Contains("NotCoprimeToConductor"), Error);
    // the maximal order has trivial conductor: same n succeeds there
    NumberFieldOrder OK = order_construct(w, OrderSpecMaximal{});
    auto rep = rational_points_structure(w, OK, 1, StructureMode::center_case);
    CHECK(rep.cardinality == 4);
}

TEST_CASE("torsion structure examples over Z[sqrt-2]")
{
    WeilPolynomial w = validate_weil(2, IntPolynomial{2, 0, 1});
    NumberFieldOrder O = order_construct(w, OrderSpecZPi{});

    // s = 3: full 3-torsion [3,3]
    auto rep = torsion_structure(w, O, elt(O.field(), {3, 0}), StructureMode::gorenstein_case);
    CHECK(rep.invariants.invariants == std::vector<Int>{3, 3});

    // s = 1 + sqrt-2: N = 3
    auto rep2 = torsion_structure(w, O, elt(O.field(), {1, 1}), StructureMode::gorenstein_case);
    CHECK(rep2.invariants.invariants == std::vector<Int>{3});

    // s = 2 = -pi^2: inseparable and not pi^n - 1
    CHECK_THROWS_WITH_AS(
        (void)torsion_structure(w, O, elt(O.field(), {2, 0}), StructureMode::gorenstein_case),
        doctest::Contains("SeparabilityUnknown"), Error);
}

TEST_CASE("prime power torsion")
{
    WeilPolynomial w = validate_weil(2, IntPolynomial{2, 0, 1});
    NumberFieldOrder O = order_construct(w, OrderSpecZPi{});

    // p = (1 + sqrt-2): O/p^2 cyclic of order 9
    auto f3 = factor_coprime_ideal(O, elt(O.field(), {3, 0}));
    REQUIRE(f3.size() == 2);
    const FractionalIdeal& p = f3[0].prime;
    auto g = prime_power_torsion(w, O, p, 2);
    CHECK(g.invariants == std::vector<Int>{9});

    // inert 5: A[5O] has residue field F_25 as a group
    auto f5 = factor_coprime_ideal(O, elt(O.field(), {5, 0}));
    REQUIRE(f5.size() == 1);
    auto g5 = prime_power_torsion(w, O, f5[0].prime, 1);
    CHECK(g5.invariants == std::vector<Int>{5, 5});

    // r = 0: trivial group
    auto g0 = prime_power_torsion(w, O, p, 0);
    CHECK(g0.invariants.empty());

    // the ramified prime above 2 = -pi^2 has residue characteristic p
    auto fpi = FractionalIdeal::principal(O, O.field().gen());
    CHECK_THROWS_WITH_AS((void)prime_power_torsion(w, O, fpi, 1),
                         doctest::Contains("ResidueCharacteristicP"), Error);
}

TEST_CASE("fbar tower: chain (1,2,4) over Z[sqrt-2]")
{
    WeilPolynomial w = validate_weil(2, IntPolynomial{2, 0, 1});
    NumberFieldOrder O = order_construct(w, OrderSpecZPi{});
    TowerReport rep = fbar_tower(w, O, {1, 2, 4}, {Int(3)}, 2);
    REQUIRE(rep.chain.size() == 3);
    CHECK(rep.chain[0].second.invariants.invariants == std::vector<Int>{3});
    CHECK(rep.chain[1].second.invariants.invariants == std::vector<Int>{3, 3});
    CHECK(rep.chain[2].second.invariants.invariants == std::vector<Int>{3, 3});
    // growth at l = 3 (split): each prime contributes A[p^k] = Z/3^k
    REQUIRE(rep.growth.size() == 2);
    for (const auto& g : rep.growth) {
        REQUIRE(g.torsion_by_level.size() == 2);
        CHECK(g.torsion_by_level[0].invariants == std::vector<Int>{3});
        CHECK(g.torsion_by_level[1].invariants == std::vector<Int>{9});
    }

    // degenerate chain entries must be divisible in turn
    TowerReport flat = fbar_tower(w, O, {1, 1}, {}, 0);
    CHECK(flat.chain[0].second.invariants == flat.chain[1].second.invariants);

    CHECK_THROWS_AS((void)fbar_tower(w, O, {2, 3}, {}, 0), Error);
}

TEST_CASE("gorenstein and center agree when both apply")
{
    // ordinary elliptic class with maximal Z[pi]: d = 1, both hypotheses hold
    for (const Int& q : {Int(2), Int(3), Int(5)}) {
        for (const auto& w : enumerate_weil(q, 1)) {
            if (w.m.degree() != 2) continue;
            NumberFieldOrder O = order_construct(w, OrderSpecMaximal{});
            for (unsigned n = 1; n <= 3; ++n) {
                auto a = rational_points_structure(w, O, n, StructureMode::gorenstein_case);
                auto b = rational_points_structure(w, O, n, StructureMode::center_case);
                CHECK(a.invariants == b.invariants);
                CHECK(a.cardinality == b.cardinality);
            }
        }
    }
}

TEST_CASE("tower monotonicity on random elliptic classes")
{
    for (const Int& q : {Int(2), Int(3)}) {
        for (const auto& w : enumerate_weil(q, 1)) {
            if (w.m.degree() != 2) continue;
            NumberFieldOrder O = order_construct(w, OrderSpecZPi{});
            auto r1 = rational_points_structure(w, O, 1, StructureMode::gorenstein_case);
            auto r2 = rational_points_structure(w, O, 2, StructureMode::gorenstein_case);
            auto r4 = rational_points_structure(w, O, 4, StructureMode::gorenstein_case);
            CHECK(r1.invariants.divides(r2.invariants));
            CHECK(r2.invariants.divides(r4.invariants));
        }
    }
}

TEST_CASE("pi must lie in the order")
{
    WeilPolynomial w = validate_weil(2, IntPolynomial{2, 0, 1});
    NumberFieldPtr K = make_number_field(w.m);
    NumberFieldOrder O = order_from_gens(K, {elt(*K, {0, 2})}); // Z[2 sqrt-2], no pi
    CHECK_THROWS_WITH_AS((void)rational_points_structure(w, O, 1, StructureMode::gorenstein_case),
                         doctest::Contains("PiNotInOrder"), Error);
}
