#pragma once

#include "avf/integer.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace avf {

// Deterministic strong-pseudoprime test below 2^64, BPSW-style above.
bool is_prime(const Int& n);

struct FactorBudget {
    // Pollard rho iterations allowed per composite before giving up.
    std::uint64_t rho_iterations = 1u << 22;
};

// Prime factorization n = prod p^e with p ascending.  Trial division to 1e6,
// then Pollard rho with Brent cycling.  Throws FactorTooLarge when a
// composite cofactor above 2^64 resists the budget.
std::vector<std::pair<Int, unsigned>> factor_integer(const Int& n, const FactorBudget& budget = {});

// Convenience: distinct prime divisors, ascending.
std::vector<Int> prime_divisors(const Int& n, const FactorBudget& budget = {});

} // namespace avf
