#pragma once

#include "avf/integer.hpp"

#include <utility>
#include <vector>

namespace avf {

// Arithmetic context for F_{p^k} = F_p[t]/(modulus).  Elements are coordinate
// vectors of length k over F_p, entries reduced into [0, p).  For k = 1 the
// modulus is just t and elements are single residues.
struct FFContext {
    Int p;
    unsigned k = 1;
    std::vector<Int> modulus; // monic, degree k, low-first, reduced mod p

    static FFContext prime_field(const Int& p);
    // Verifies primality of p and irreducibility of the modulus.
    static FFContext extension(const Int& p, const std::vector<Int>& modulus);

    Int order() const { return pow_ui(p, k); } // q = p^k
};

using FFElem = std::vector<Int>; // size k

FFElem ff_zero(const FFContext& F);
FFElem ff_one(const FFContext& F);
FFElem ff_from_int(const FFContext& F, const Int& c);
bool ff_is_zero(const FFElem& a);
FFElem ff_add(const FFContext& F, const FFElem& a, const FFElem& b);
FFElem ff_sub(const FFContext& F, const FFElem& a, const FFElem& b);
FFElem ff_neg(const FFContext& F, const FFElem& a);
FFElem ff_mul(const FFContext& F, const FFElem& a, const FFElem& b);
FFElem ff_inv(const FFContext& F, const FFElem& a);
FFElem ff_pow(const FFContext& F, FFElem a, Int e);

// Polynomials over F_{p^k}, low-first, trailing zeros trimmed.
using FFPoly = std::vector<FFElem>;

FFPoly ffp_from_int_poly(const FFContext& F, const std::vector<Int>& coeffs);
void ffp_trim(FFPoly& f);
int ffp_degree(const FFPoly& f);
bool ffp_is_zero(const FFPoly& f);
FFPoly ffp_x(const FFContext& F);
FFPoly ffp_one(const FFContext& F);
FFPoly ffp_add(const FFContext& F, const FFPoly& a, const FFPoly& b);
FFPoly ffp_sub(const FFContext& F, const FFPoly& a, const FFPoly& b);
FFPoly ffp_mul(const FFContext& F, const FFPoly& a, const FFPoly& b);
std::pair<FFPoly, FFPoly> ffp_divmod(const FFContext& F, const FFPoly& a, const FFPoly& b);
FFPoly ffp_mod(const FFContext& F, const FFPoly& a, const FFPoly& b);
FFPoly ffp_gcd(const FFContext& F, FFPoly a, FFPoly b); // monic
FFPoly ffp_make_monic(const FFContext& F, const FFPoly& f);
FFPoly ffp_powmod(const FFContext& F, const FFPoly& base, const Int& e, const FFPoly& mod);
FFPoly ffp_derivative(const FFContext& F, const FFPoly& f);
FFElem ffp_eval(const FFContext& F, const FFPoly& f, const FFElem& x);
bool ffp_equal(const FFPoly& a, const FFPoly& b);

bool ffp_is_irreducible(const FFContext& F, const FFPoly& f);

// g = s*a + t*b with g the monic gcd.
struct FFXgcd {
    FFPoly g, s, t;
};
FFXgcd ffp_xgcd(const FFContext& F, const FFPoly& a, const FFPoly& b);

struct FFFactorization {
    FFElem unit;                                    // leading coefficient of the input
    std::vector<std::pair<FFPoly, unsigned>> factors; // monic irreducible, multiplicity
};

// Complete factorization: squarefree split, distinct-degree, then
// equal-degree Cantor-Zassenhaus splitting.  Deterministically seeded.
FFFactorization ff_poly_factor(const FFContext& F, const FFPoly& f);

// Deterministic ordering key for polynomials over the same context.
int ffp_compare(const FFPoly& a, const FFPoly& b);

} // namespace avf
