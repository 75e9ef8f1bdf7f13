#pragma once

#include "avf/lattice.hpp"
#include "avf/polynomial.hpp"

#include <memory>
#include <vector>

namespace avf {

// K = Q[t]/(m), m monic irreducible.  Elements are power-basis coordinate
// vectors (rationals, low power first).
class NumberField {
  public:
    using Elt = std::vector<Rat>;

    explicit NumberField(IntPolynomial min_poly);

    unsigned degree() const { return deg_; }
    const IntPolynomial& min_poly() const { return m_; }

    Elt zero() const { return Elt(deg_, Rat(0)); }
    Elt one() const;
    Elt gen() const; // the class of t
    Elt from_rat(const Rat& c) const;

    Elt add(const Elt& a, const Elt& b) const;
    Elt sub(const Elt& a, const Elt& b) const;
    Elt neg(const Elt& a) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt mul_scalar(const Rat& c, const Elt& a) const;
    Elt inv(const Elt& a) const; // throws ZeroElement on 0
    Elt pow(const Elt& a, const Int& e) const;
    bool is_zero(const Elt& a) const;

    Rat trace(const Elt& a) const;
    Rat norm(const Elt& a) const;           // det of multiplication
    Rat norm_resultant(const Elt& a) const; // independent route via Res(m, a(t))

    // row i = coordinates of a * t^i; right multiplication by this matrix is
    // multiplication by a on row vectors of power-basis coordinates
    RatMatrix mul_matrix(const Elt& a) const;

    bool equal_min_poly(const NumberField& other) const { return m_ == other.m_; }

  private:
    IntPolynomial m_;
    unsigned deg_;
    std::vector<Int> power_sums_; // traces of t^j, j < 2 deg
};

using FieldElt = NumberField::Elt;
using NumberFieldPtr = std::shared_ptr<const NumberField>;

NumberFieldPtr make_number_field(const IntPolynomial& min_poly);

} // namespace avf
