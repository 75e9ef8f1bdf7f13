#include "avf/integer_factor.hpp"

#include "avf/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace avf {

namespace {

constexpr std::uint32_t kTrialLimit = 1000000;

const std::vector<std::uint32_t>& small_primes()
{
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> comp(kTrialLimit + 1, false);
        std::vector<std::uint32_t> ps;
        for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
            if (comp[i]) continue;
            ps.push_back(i);
            for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= kTrialLimit; j += i) comp[j] = true;
        }
        return ps;
    }();
    return primes;
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m)
{
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Strong pseudoprime test to the first twelve prime bases: deterministic for
// every n < 2^64.
bool is_prime_u64(u64 n)
{
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Pollard rho, Brent cycle detection.  Returns a nontrivial factor or 0.
Int pollard_brent(const Int& n, std::uint64_t max_iters, SplitMix64& rng)
{
    if (n % 2 == 0) return 2;
    Int y = Int(rng.next()) % n;
    Int c = Int(rng.next()) % n + 1;
    Int x = y, ys = y, q = 1, g = 1;
    const unsigned long m = 128;
    std::uint64_t iters = 0;
    unsigned long r = 1;
    while (g == 1 && iters < max_iters) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
        unsigned long k = 0;
        while (k < r && g == 1 && iters < max_iters) {
            ys = y;
            unsigned long lim = std::min(m, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                q = q * abs(x - y) % n;
                ++iters;
            }
            g = gcd(q, n);
            k += lim;
        }
        r *= 2;
    }
    if (g == n || g == 1) {
        // backtrack in case the batch jumped past the factor
        g = 1;
        while (g == 1) {
            ys = (ys * ys + c) % n;
            g = gcd(abs(x - ys), n);
            if (++iters > max_iters + 4096) break;
        }
    }
    if (g > 1 && g < n) return g;
    return 0;
}

void factor_rec(const Int& n, std::map<Int, unsigned>& out, const FactorBudget& budget, SplitMix64& rng)
{
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    Int f = 0;
    for (int attempt = 0; attempt < 24 && f == 0; ++attempt) f = pollard_brent(n, budget.rho_iterations, rng);
    if (f == 0) {
        if (mpz_sizeinbase(n.get_mpz_t(), 2) > 64)
            raise(errc::factor_too_large, "composite cofactor " + n.get_str() + " resists the factoring budget");
        raise(errc::factor_too_large, "factoring budget exhausted on " + n.get_str());
    }
    factor_rec(f, out, budget, rng);
    factor_rec(divexact(n, f), out, budget, rng);
}

} // namespace

bool is_prime(const Int& n)
{
    if (sgn(n) <= 0) return false;
    if (mpz_fits_ulong_p(n.get_mpz_t()) && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64)
        return is_prime_u64(n.get_ui());
    // Above 2^64: GMP's Baillie-PSW + Miller-Rabin rounds.
    return mpz_probab_prime_p(n.get_mpz_t(), 32) > 0;
}

std::vector<std::pair<Int, unsigned>> factor_integer(const Int& n, const FactorBudget& budget)
{
    if (sgn(n) <= 0) raise(errc::invalid_input, "factor_integer needs a positive integer");
    std::map<Int, unsigned> out;
    Int rest = n;
    for (std::uint32_t p : small_primes()) {
        if (rest == 1) break;
        if (Int(p) * p > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            out[Int(p)] += 1;
            rest = divexact(rest, Int(p));
        }
    }
    if (rest != 1) {
        SplitMix64 rng(hash_int(n));
        factor_rec(rest, out, budget, rng);
    }
    return {out.begin(), out.end()};
}

std::vector<Int> prime_divisors(const Int& n, const FactorBudget& budget)
{
    std::vector<Int> ps;
    for (auto& [p, e] : factor_integer(n, budget)) ps.push_back(p);
    return ps;
}

} // namespace avf
