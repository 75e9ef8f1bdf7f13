#pragma once

#include "avf/abelian_group.hpp"
#include "avf/small_field.hpp"
#include "avf/structure.hpp"
#include "avf/weil.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace avf {

inline constexpr std::uint64_t kDefaultFieldCap = 100000;
inline constexpr std::uint64_t kDefaultIndexCap = 10000;

// Weierstrass curve y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over
// F_{p^k}; coefficients are packed SmallField elements.
struct EllipticCurve {
    std::uint32_t p = 2;
    std::uint32_t k = 1;
    std::array<SmallField::El, 5> a{}; // a1, a2, a3, a4, a6

    std::string to_string() const;
};

struct ECGroup {
    Int count;
    AbelianGroupStructure structure;
};

// Exhaustive enumeration of E(F_{q^n}) with the group structure
// Z/e x Z/(N/e), e the exponent computed as the lcm of point orders.
// FieldTooLarge when q^n exceeds the cap; InvalidInput for singular curves.
ECGroup ec_enumerate(const EllipticCurve& E, unsigned n, std::uint64_t field_cap = kDefaultFieldCap);

// t^2 - a t + q from the point count over the base field; the result must
// validate (Hasse), anything else signals an enumeration bug.
WeilPolynomial ec_frobenius(const EllipticCurve& E, std::uint64_t field_cap = kDefaultFieldCap);

struct OrderPrediction {
    NumberFieldOrder order;
    Int index_in_maximal;
    bool gorenstein = true;
    std::string skipped_reason; // nonempty when no prediction was attempted
    std::optional<AbelianGroupStructure> predicted;
    bool matches_oracle = false;
};

struct VerificationReport {
    std::string kind; // "ec" or "jac2"
    std::string curve;
    unsigned n = 1;
    IntPolynomial weil_poly;
    Int expected_count;  // P_n(1)
    Int oracle_count;
    AbelianGroupStructure oracle_structure;
    bool structure_attempted = true;
    std::vector<OrderPrediction> predictions;
    std::vector<std::size_t> match_set; // indices into predictions
    bool cardinality_ok = false;
    bool pass = false;
};

// Verifies the Gorenstein-case prediction against the enumerated group for
// every order Z[pi] <= O <= O_K.  OutOfTheoremScope when pi lies in Z
// (degree-one minimal polynomial).
VerificationReport verify_ec(const EllipticCurve& E, unsigned n, std::uint64_t field_cap = kDefaultFieldCap,
                             std::uint64_t index_cap = kDefaultIndexCap);

} // namespace avf
