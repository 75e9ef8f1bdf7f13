#pragma once

#include "avf/ideal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace avf {

enum class StructureMode { gorenstein_case, center_case };

const char* mode_name(StructureMode m);

struct Certificate {
    std::string name;
    bool passed = true;
    std::string witness;
};

// Result of the group-structure prediction for A(F_{q^n}) or A[s].
struct StructureReport {
    StructureMode mode;
    unsigned d = 1;
    std::optional<unsigned> n;           // set for rational-point reports
    FieldElt s;                          // the element pi^n - 1 (or the torsion s)
    std::vector<Certificate> certificates;
    AbelianGroupStructure base;          // invariants of O/sO
    AbelianGroupStructure invariants;    // full structure: base repeated d times
    Int cardinality;
    Int cardinality_crosscheck;
};

// Theorem engine.  GorensteinCase: A(F_{q^n}) ~ O/(pi^n - 1)O, requires
// [Q(pi):Q] = 2g and O Gorenstein.  CenterCase: A(F_{q^n}) ~ (O/(pi^n-1)O)^d,
// requires pi^n - 1 coprime to the conductor of O.
StructureReport rational_points_structure(const WeilPolynomial& w, const NumberFieldOrder& O, unsigned n,
                                          StructureMode mode);

// Torsion A[s] for separable s: accepts only the two separability
// certificates (s = pi^n - 1, or gcd(N(s), p) = 1); SeparabilityUnknown otherwise.
StructureReport torsion_structure(const WeilPolynomial& w, const NumberFieldOrder& O, const FieldElt& s,
                                  StructureMode mode);

// A[prime^r] = (O/prime^r)^d; prime must be invertible, prime, and of residue
// characteristic different from p.
AbelianGroupStructure prime_power_torsion(const WeilPolynomial& w, const NumberFieldOrder& O,
                                          const FractionalIdeal& prime, unsigned r);

struct PrimaryGrowth {
    FractionalIdeal prime;
    Int residue_char;
    unsigned residue_deg;
    std::vector<AbelianGroupStructure> torsion_by_level; // A[prime^k], k = 1..depth
};

struct TowerReport {
    std::vector<std::pair<unsigned, StructureReport>> chain;
    std::vector<PrimaryGrowth> growth;
    std::string limit_description;
};

// Finite approximation of the F_qbar limit: the structure along a chain of
// extensions n_1 | n_2 | ... plus the l-primary towers for each given l.
// mode = nullopt picks GorensteinCase when it applies, else CenterCase.
TowerReport fbar_tower(const WeilPolynomial& w, const NumberFieldOrder& O, const std::vector<unsigned>& n_chain,
                       const std::vector<Int>& ells, unsigned depth, std::optional<StructureMode> mode = {});

} // namespace avf
