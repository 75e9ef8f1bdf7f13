#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace avf {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b)
{
    Int g;
    mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// g = s*a + t*b
inline Int xgcd(const Int& a, const Int& b, Int& s, Int& t)
{
    Int g;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int divexact(const Int& a, const Int& b)
{
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int fdiv_q(const Int& a, const Int& b)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int mod_floor(const Int& a, const Int& b)
{
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int pow_ui(const Int& a, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

inline Int powmod(const Int& a, const Int& e, const Int& m)
{
    Int r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int isqrt(const Int& a)
{
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& a, Int* root = nullptr)
{
    if (sgn(a) < 0) return false;
    Int r = isqrt(a);
    if (r * r == a) {
        if (root) *root = r;
        return true;
    }
    return false;
}

inline int sign_of(const Int& a) { return sgn(a); }
inline int sign_of(const Rat& a) { return sgn(a); }

// Deterministic 64-bit stream for the randomized kernels (Cantor-Zassenhaus,
// Pollard rho).  Seeded from the inputs so identical calls are byte-identical.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next()
    {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v)
{
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

inline std::uint64_t hash_int(const Int& v)
{
    std::uint64_t h = static_cast<std::uint64_t>(mpz_fdiv_ui(v.get_mpz_t(), 0xfffffffffffffffbULL));
    return hash_mix(0x243f6a8885a308d3ULL, h);
}

} // namespace avf
