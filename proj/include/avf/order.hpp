#pragma once

#include "avf/number_field.hpp"
#include "avf/weil.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace avf {

// An order O in K: full-rank ring lattice containing 1, stored as a basis in
// power coordinates (den + integer HNF numerator) plus the integer
// multiplication table T[i][j][k]: w_i w_j = sum_k T[i][j][k] w_k.
class NumberFieldOrder {
  public:
    NumberFieldOrder(NumberFieldPtr field, QLattice basis_lattice);

    const NumberField& field() const { return *field_; }
    const NumberFieldPtr& field_ptr() const { return field_; }
    unsigned degree() const { return field_->degree(); }
    const QLattice& lattice() const { return lat_; }

    // basis element i as a field element (power coordinates)
    FieldElt basis_elt(unsigned i) const;

    const Int& table(unsigned i, unsigned j, unsigned k) const
    {
        const unsigned n = degree();
        return table_[(i * n + j) * n + k];
    }

    bool contains(const FieldElt& a) const { return lat_.contains(a); }

    // power coordinates -> order coordinates (rational in general)
    std::vector<Rat> to_order_coords(const FieldElt& a) const;
    FieldElt from_order_coords(const std::vector<Rat>& c) const;

    // multiplication-by-a matrix on the order basis; integral iff a in O
    RatMatrix mul_matrix_order(const FieldElt& a) const;

    Int discriminant() const; // det of the trace Gram matrix

    friend bool operator==(const NumberFieldOrder& a, const NumberFieldOrder& b)
    {
        return a.field_->min_poly() == b.field_->min_poly() && a.lat_ == b.lat_;
    }

  private:
    NumberFieldPtr field_;
    QLattice lat_;           // rows: basis in power coords
    RatMatrix basis_inv_;    // inverse of the rational basis matrix
    std::vector<Int> table_; // n^3 structure constants
};

// How to build an order from a Weil polynomial.
struct OrderSpecZPi {};
struct OrderSpecZPiBar {};
struct OrderSpecMaximal {};
struct OrderSpecGens {
    std::vector<FieldElt> gens;
};
using OrderSpec = std::variant<OrderSpecZPi, OrderSpecZPiBar, OrderSpecMaximal, OrderSpecGens>;

// The ring generated by 1 and the given elements; NotARing if the module
// closure never stabilizes, NotFullRank if the rank stays below [K:Q].
NumberFieldOrder order_from_gens(NumberFieldPtr K, const std::vector<FieldElt>& gens);

// Z[pi], Z[pi, qbar/pi], the maximal order, or a generated ring.
NumberFieldOrder order_construct(const WeilPolynomial& w, const OrderSpec& spec);

// Ring of integers O_K by Round-2 p-maximalization at every prime with
// p^2 | disc(m).
NumberFieldOrder maximal_order(NumberFieldPtr K);

// All orders L with lower <= L <= upper (ring-closed sublattices), sorted by
// index in upper then basis; IndexCapExceeded if [upper : lower] > cap.
std::vector<NumberFieldOrder> intermediate_orders(const NumberFieldOrder& lower, const NumberFieldOrder& upper,
                                                  std::uint64_t index_cap);

// Verschiebung qbar/pi as an element of K = Q[t]/(m), with q from the Weil context.
FieldElt frobenius_conjugate(const NumberField& K, const Int& q);

} // namespace avf
