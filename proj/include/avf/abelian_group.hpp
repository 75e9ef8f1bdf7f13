#pragma once

#include "avf/integer.hpp"

#include <string>
#include <vector>

namespace avf {

// Invariant factors d_1 | d_2 | ... of a finite abelian group; entries >= 2,
// empty chain = trivial group.
struct AbelianGroupStructure {
    std::vector<Int> invariants;

    // from an SNF diagonal: drops the 1s, checks the chain
    static AbelianGroupStructure from_snf(const std::vector<Int>& diag);
    // canonical chain from an arbitrary multiset of cyclic orders (>= 1)
    static AbelianGroupStructure from_cyclic_orders(std::vector<Int> orders);

    Int order() const;
    // each invariant repeated d times (still a divisibility chain)
    AbelianGroupStructure power(unsigned d) const;
    // componentwise divisibility after right-aligned padding with 1s
    bool divides(const AbelianGroupStructure& larger) const;

    std::string to_string() const;
    friend bool operator==(const AbelianGroupStructure&, const AbelianGroupStructure&) = default;
};

} // namespace avf
