#pragma once

#include "avf/polynomial.hpp"

#include <utility>
#include <vector>

namespace avf {

// Validated characteristic polynomial of Frobenius for a simple abelian
// variety over F_q, together with its minimal-polynomial decomposition
// P = m^d, d = 2g / deg(m).
struct WeilPolynomial {
    Int q;             // p^k
    Int p;             // prime
    unsigned k = 1;    // q = p^k
    unsigned g = 1;    // dimension
    IntPolynomial poly; // monic, degree 2g, low-first
    IntPolynomial m;    // minimal polynomial of pi, irreducible
    unsigned d = 1;     // 2g / deg m

    Int middle_coeff() const { return poly.coeff(g); }
};

// Checks, in order: monic, odd length, prime-power q, the coefficient
// symmetry a_j = q^{g-j} a_{2g-j}, the root modulus |alpha| = sqrt(q) on every
// irreducible factor (exact trace-polynomial + Sturm certificate), and the
// single-factor shape P = m^d.
WeilPolynomial validate_weil(const Int& q, const IntPolynomial& coeffs);

// Squarefree part m of validated monic P with P = m^d, m irreducible.
// Throws NotPrimePowerShape when P is not a power of one irreducible.
std::pair<IntPolynomial, unsigned> decompose(const IntPolynomial& P);

// gcd(middle coefficient, p) == 1
bool is_ordinary(const WeilPolynomial& w);

struct BaseExtension {
    IntPolynomial poly; // characteristic polynomial of pi^n, monic degree 2g
    Int point_count;    // P_n(1) = |Res(P, t^n - 1)| > 0
};

// Characteristic polynomial of pi^n and the point count over F_{q^n}.
BaseExtension base_extension(const WeilPolynomial& w, unsigned n);

// All Weil polynomials of dimension g over F_q (g <= 2, q <= 49), in
// lexicographic order of the free coefficient tuple.
std::vector<WeilPolynomial> enumerate_weil(const Int& q, unsigned g);

// The trace polynomial h with m(t) = t^h_deg * h(t + q/t) for a symmetric m
// of even degree (Dickson basis expansion).  Exposed for tests.
IntPolynomial trace_polynomial(const IntPolynomial& m, const Int& q);

} // namespace avf
