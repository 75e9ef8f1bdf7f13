#pragma once

#include "avf/polynomial.hpp"

#include <utility>
#include <vector>

namespace avf {

// f = sign * prod factors[i]^mult[i].  Nonconstant factors are primitive
// with positive leading coefficient; constant factors are primes.
struct ZZFactorization {
    int sign = 1;
    std::vector<std::pair<IntPolynomial, unsigned>> factors;

    IntPolynomial product() const;
};

inline constexpr int kZZFactorDegreeCap = 16;

// Exact factorization over the integers: finite-field factorization mod a
// good prime, Hensel lifting, exhaustive subset recombination.  Degree is
// capped (DegreeCapExceeded).
ZZFactorization zz_poly_factor(const IntPolynomial& f);

bool zz_is_irreducible(const IntPolynomial& f);

} // namespace avf
