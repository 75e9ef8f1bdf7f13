#pragma once

#include "avf/oracle_ec.hpp"

#include <array>
#include <cstdint>

namespace avf {

inline constexpr std::uint64_t kDefaultJacCap = 100000;

// Genus-2 curve y^2 = f(x), f monic of degree 5 over F_p, p >= 3, f squarefree.
struct HyperellipticCurve {
    std::uint32_t p = 3;
    std::array<std::uint32_t, 5> f{}; // f0..f4; the x^5 term is implicit

    std::string to_string() const;
};

// Mumford representation (u, v): u monic with deg u <= 2, deg v < deg u,
// u | v^2 - f.  udeg = 0 encodes the identity (1, 0).
struct MumfordDivisor {
    std::uint8_t udeg = 0;
    std::array<SmallField::El, 2> u{}; // u0, u1
    std::array<SmallField::El, 2> v{}; // v0, v1

    friend bool operator==(const MumfordDivisor&, const MumfordDivisor&) = default;
};

// Cantor composition + reduction on reduced divisors of y^2 = f(x) over F.
// fpoly holds the embedded coefficients f0..f4 (monic quintic).
MumfordDivisor cantor_add(const SmallField& F, const std::array<SmallField::El, 5>& fpoly, const MumfordDivisor& a,
                          const MumfordDivisor& b);
MumfordDivisor cantor_neg(const SmallField& F, const MumfordDivisor& a);
MumfordDivisor cantor_mul(const SmallField& F, const std::array<SmallField::El, 5>& fpoly, MumfordDivisor a, Int k);

struct JacGroup {
    Int count;
    AbelianGroupStructure structure;
};

// Exhaustive enumeration of J(F_{p^n}) with the full invariant-factor
// structure (l-Sylow shapes from torsion counting).  FieldTooLarge when the
// Jacobian size cap is exceeded.
JacGroup jac_enumerate(const HyperellipticCurve& C, unsigned n = 1, std::uint64_t jac_cap = kDefaultJacCap);

// Weil polynomial from #C(F_p) and #C(F_{p^2}) via Newton identities, with
// the mandatory P(1) = #J(F_p) double-entry check.
WeilPolynomial jac_frobenius(const HyperellipticCurve& C, std::uint64_t jac_cap = kDefaultJacCap);

// Gorenstein-case verification over all orders Z[pi, pibar] <= O <= O_K.
// For d > 1 the verification is cardinality-only (structure_attempted = false).
VerificationReport verify_jac(const HyperellipticCurve& C, unsigned n, std::uint64_t jac_cap = kDefaultJacCap,
                              std::uint64_t index_cap = kDefaultIndexCap);

} // namespace avf
