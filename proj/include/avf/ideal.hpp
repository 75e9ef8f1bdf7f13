#pragma once

#include "avf/abelian_group.hpp"
#include "avf/integer_factor.hpp"
#include "avf/order.hpp"

#include <utility>
#include <vector>

namespace avf {

// Fractional ideal of an order: full-rank lattice I with O*I <= I, stored in
// the order's own basis coordinates (den + integer HNF numerator).
class FractionalIdeal {
  public:
    FractionalIdeal(NumberFieldOrder order, QLattice lattice_in_order_coords);

    static FractionalIdeal unit_ideal(const NumberFieldOrder& O);
    static FractionalIdeal principal(const NumberFieldOrder& O, const FieldElt& s);
    static FractionalIdeal from_generators(const NumberFieldOrder& O, const std::vector<FieldElt>& gens);
    // lattice given in power coordinates (must be an O-module)
    static FractionalIdeal from_power_lattice(const NumberFieldOrder& O, const QLattice& power_lat);

    const NumberFieldOrder& order() const { return order_; }
    const QLattice& lattice() const { return lat_; } // order coordinates
    QLattice power_lattice() const;                  // power coordinates

    bool is_integral() const { return lat_.den == 1; }
    bool contains(const FieldElt& a) const;
    Rat norm() const; // [O : I] as a positive rational

    friend bool operator==(const FractionalIdeal& a, const FractionalIdeal& b)
    {
        return a.order_ == b.order_ && a.lat_ == b.lat_;
    }

  private:
    NumberFieldOrder order_;
    QLattice lat_;
};

FractionalIdeal ideal_sum(const FractionalIdeal& a, const FractionalIdeal& b);
FractionalIdeal ideal_product(const FractionalIdeal& a, const FractionalIdeal& b);
// colon (a : b) = {x in K : x b <= a}
FractionalIdeal ideal_quotient(const FractionalIdeal& a, const FractionalIdeal& b);
FractionalIdeal ideal_pow(const FractionalIdeal& a, unsigned e);

// I * (O : I) == O
bool is_invertible(const FractionalIdeal& I);

// conductor (O : O_K) as an ideal of O
FractionalIdeal conductor(const NumberFieldOrder& O);
FractionalIdeal conductor(const NumberFieldOrder& O, const NumberFieldOrder& maximal);

// sO + f == O
bool is_coprime_to_conductor(const FieldElt& s, const NumberFieldOrder& O);

// trace dual O^ = {x : Tr(xO) <= Z} is an invertible fractional ideal
bool is_gorenstein(const NumberFieldOrder& O);
FractionalIdeal trace_dual(const NumberFieldOrder& O);

// SNF invariants of multiplication by s on O (1s dropped); |O/sO| = |N(s)|
AbelianGroupStructure residue_structure(const NumberFieldOrder& O, const FieldElt& s);
// Same abelian group computed by the factored route: factor sO into prime
// powers, take O/p^e blockwise, recombine by CRT.
AbelianGroupStructure residue_structure_crt(const NumberFieldOrder& O, const FieldElt& s);

// invariants of the finite quotient O/I for an integral full-rank ideal
AbelianGroupStructure quotient_structure(const FractionalIdeal& I);

struct PrimeIdealFactor {
    FractionalIdeal prime;
    unsigned exponent;
    Int residue_char;   // p with |O/prime| = p^f
    unsigned residue_deg; // f
};

// sO = prod primes^e for s coprime to the conductor (Kummer-Dedekind in the
// maximal order, contracted back).  NotCoprime when the hypothesis fails;
// BadPrime when no monogenic generator avoiding p is found.
std::vector<PrimeIdealFactor> factor_coprime_ideal(const NumberFieldOrder& O, const FieldElt& s,
                                                   const FactorBudget& budget = {});

// Certifies that an invertible integral ideal is a prime of O: its extension
// must be a Kummer-Dedekind prime of the maximal order that contracts back
// to the ideal itself.
bool is_prime_of_order(const NumberFieldOrder& O, const FractionalIdeal& I);

} // namespace avf
