#include "avf/zz_factor.hpp"

#include "avf/errors.hpp"
#include "avf/finite_field.hpp"
#include "avf/integer_factor.hpp"

#include <algorithm>
#include <numeric>

namespace avf {

IntPolynomial ZZFactorization::product() const
{
    IntPolynomial r{Int(sign)};
    for (const auto& [f, e] : factors) r = r * pow(f, e);
    return r;
}

namespace {

// --- arithmetic on integer polynomials modulo m (coefficients in [0, m)) ---

using ZPoly = std::vector<Int>;

void zp_trim(ZPoly& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly zp_reduce(const ZPoly& f, const Int& m)
{
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = mod_floor(f[i], m);
    zp_trim(r);
    return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const Int& m)
{
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = mod_floor(c[i + j] + a[i] * b[j], m);
    }
    zp_trim(c);
    return c;
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b, const Int& m)
{
    ZPoly c(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        Int v = (i < a.size() ? a[i] : Int(0)) + (i < b.size() ? b[i] : Int(0));
        c[i] = mod_floor(v, m);
    }
    zp_trim(c);
    return c;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b, const Int& m)
{
    ZPoly c(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        Int v = (i < a.size() ? a[i] : Int(0)) - (i < b.size() ? b[i] : Int(0));
        c[i] = mod_floor(v, m);
    }
    zp_trim(c);
    return c;
}

// divisor must be monic
std::pair<ZPoly, ZPoly> zp_divmod_monic(const ZPoly& a, const ZPoly& b, const Int& m)
{
    ZPoly rem = a;
    const int db = static_cast<int>(b.size()) - 1;
    ZPoly quo;
    if (static_cast<int>(rem.size()) - 1 >= db) quo.assign(rem.size() - db, Int(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        Int q = rem[i];
        if (q == 0) continue;
        quo[i - db] = q;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = mod_floor(rem[i - db + j] - q * b[j], m);
    }
    zp_trim(rem);
    zp_trim(quo);
    return {quo, rem};
}

// symmetric representative in (-m/2, m/2]
IntPolynomial zp_symmetric(const ZPoly& f, const Int& m)
{
    Int half = m / 2;
    std::vector<Int> c(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) c[i] = f[i] > half ? Int(f[i] - m) : f[i];
    return IntPolynomial(std::move(c));
}

ZPoly zp_from(const IntPolynomial& f, const Int& m)
{
    ZPoly r(f.coeffs.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod_floor(f.coeffs[i], m);
    zp_trim(r);
    return r;
}

// One quadratic Hensel step: f = g*h and s*g + t*h = 1 (mod m) lift to mod m^2.
// h and the lifted h stay monic; the updates are the textbook formulas.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Int& m)
{
    Int m2 = m * m;
    ZPoly e = zp_sub(zp_reduce(f, m2), zp_mul(g, h, m2), m2);
    auto [q, r] = zp_divmod_monic(zp_mul(s, e, m2), h, m2);
    ZPoly g1 = zp_add(zp_add(g, zp_mul(t, e, m2), m2), zp_mul(q, g, m2), m2);
    ZPoly h1 = zp_add(h, r, m2);
    ZPoly b = zp_sub(zp_add(zp_mul(s, g1, m2), zp_mul(t, h1, m2), m2), ZPoly{Int(1)}, m2);
    auto [c, d] = zp_divmod_monic(zp_mul(s, b, m2), h1, m2);
    ZPoly s1 = zp_sub(s, d, m2);
    ZPoly t1 = zp_sub(zp_sub(t, zp_mul(t, b, m2), m2), zp_mul(c, g1, m2), m2);
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
}

FFPoly to_ffp(const ZPoly& f)
{
    FFPoly r;
    for (const Int& c : f) r.push_back({c});
    return r;
}

ZPoly from_ffp(const FFPoly& f)
{
    ZPoly r;
    for (const FFElem& e : f) r.push_back(e[0]);
    return r;
}

// Lift the factorization f = prod factors (mod p, monic, pairwise coprime)
// to mod target = p^L via a balanced product tree.
void lift_tree(const ZPoly& f, const std::vector<ZPoly>& mod_p_factors, std::size_t lo, std::size_t hi,
               const Int& p, const Int& target, std::vector<ZPoly>& lifted)
{
    if (hi - lo == 1) {
        lifted[lo] = zp_reduce(f, target);
        return;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    ZPoly g0{Int(1)}, h0{Int(1)};
    for (std::size_t i = lo; i < mid; ++i) g0 = zp_mul(g0, mod_p_factors[i], p);
    for (std::size_t i = mid; i < hi; ++i) h0 = zp_mul(h0, mod_p_factors[i], p);

    FFContext Fp = FFContext::prime_field(p);
    FFXgcd x = ffp_xgcd(Fp, to_ffp(g0), to_ffp(h0));
    ZPoly s = from_ffp(x.s), t = from_ffp(x.t);

    ZPoly g = g0, h = h0;
    Int m = p;
    while (m < target) {
        hensel_step(zp_reduce(f, m * m), g, h, s, t, m);
        m = m * m;
    }
    g = zp_reduce(g, target);
    h = zp_reduce(h, target);
    lift_tree(g, mod_p_factors, lo, mid, p, target, lifted);
    lift_tree(h, mod_p_factors, mid, hi, p, target, lifted);
}

// factor a primitive squarefree monic polynomial of degree >= 2
std::vector<IntPolynomial> factor_monic_squarefree(const IntPolynomial& g)
{
    const int n = g.degree();

    // prime with squarefree reduction
    Int p = 3;
    FFContext Fp = FFContext::prime_field(p);
    for (;;) {
        Fp = FFContext::prime_field(p);
        FFPoly gp = ffp_from_int_poly(Fp, g.coeffs);
        if (ffp_degree(gp) == n) {
            FFPoly d = ffp_derivative(Fp, gp);
            if (!ffp_is_zero(d) && ffp_degree(ffp_gcd(Fp, gp, d)) == 0) break;
        }
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    }

    FFPoly gp = ffp_from_int_poly(Fp, g.coeffs);
    FFFactorization modular = ff_poly_factor(Fp, gp);
    if (modular.factors.size() == 1) return {g};

    // Landau-Mignotte style coefficient bound for monic factors
    Int norm2 = 0;
    for (const Int& c : g.coeffs) norm2 += c * c;
    Int bound = (isqrt(norm2) + 1) << static_cast<unsigned>(n);
    Int target = p;
    while (target <= 2 * bound) target *= p;

    std::vector<ZPoly> base;
    for (auto& [fac, mult] : modular.factors) base.push_back(from_ffp(fac));
    std::vector<ZPoly> lifted(base.size());
    lift_tree(zp_from(g, target), base, 0, base.size(), p, target, lifted);

    // subset recombination
    std::vector<IntPolynomial> out;
    IntPolynomial rest = g;
    std::vector<std::size_t> active(base.size());
    std::iota(active.begin(), active.end(), std::size_t{0});

    auto try_subset = [&](const std::vector<std::size_t>& subset) -> bool {
        ZPoly prod{Int(1)};
        for (std::size_t idx : subset) prod = zp_mul(prod, lifted[idx], target);
        IntPolynomial cand = zp_symmetric(prod, target);
        if (cand.is_zero() || cand.degree() == 0) return false;
        IntPolynomial quotient;
        if (!divides(cand, rest, &quotient)) return false;
        out.push_back(cand);
        rest = quotient;
        return true;
    };

    bool progress = true;
    while (progress && active.size() > 1) {
        progress = false;
        for (std::size_t s = 1; s <= active.size() / 2 && !progress; ++s) {
            // iterate over s-subsets of active, lexicographic
            std::vector<std::size_t> pick(s);
            std::iota(pick.begin(), pick.end(), std::size_t{0});
            for (;;) {
                std::vector<std::size_t> subset(s);
                for (std::size_t i = 0; i < s; ++i) subset[i] = active[pick[i]];
                if (try_subset(subset)) {
                    std::vector<std::size_t> next;
                    for (std::size_t i = 0, j = 0; i < active.size(); ++i) {
                        if (j < s && pick[j] == i) {
                            ++j;
                            continue;
                        }
                        next.push_back(active[i]);
                    }
                    active = std::move(next);
                    progress = true;
                    break;
                }
                // next combination
                std::size_t i = s;
                while (i-- > 0) {
                    if (pick[i] + (s - i) < active.size()) {
                        ++pick[i];
                        for (std::size_t j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
                        break;
                    }
                    if (i == 0) {
                        i = SIZE_MAX;
                        break;
                    }
                }
                if (i == SIZE_MAX) break;
            }
        }
    }
    if (rest.degree() > 0) out.push_back(rest);
    return out;
}

// Yun squarefree decomposition of a primitive polynomial with positive lc.
std::vector<std::pair<IntPolynomial, unsigned>> yun_squarefree(const IntPolynomial& f)
{
    std::vector<std::pair<IntPolynomial, unsigned>> out;
    IntPolynomial df = f.derivative();
    IntPolynomial a = poly_gcd(f, df);
    if (a.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    IntPolynomial b = divexact(f, a);
    IntPolynomial c = divexact(df, a);
    IntPolynomial d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        IntPolynomial g = poly_gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = divexact(b, g);
        c = divexact(d, g);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

} // namespace

ZZFactorization zz_poly_factor(const IntPolynomial& f)
{
    if (f.is_zero()) raise(errc::invalid_input, "factoring the zero polynomial");
    if (f.degree() > kZZFactorDegreeCap)
        raise(errc::degree_cap_exceeded,
              "degree " + std::to_string(f.degree()) + " exceeds cap " + std::to_string(kZZFactorDegreeCap));

    ZZFactorization out;
    out.sign = sgn(f.leading());
    Int cont = content(f);
    for (auto& [q, e] : factor_integer(cont)) out.factors.emplace_back(IntPolynomial{q}, e);

    IntPolynomial fp = primitive_part(f);
    if (fp.degree() >= 1) {
        for (auto& [sqf, mult] : yun_squarefree(fp)) {
            std::vector<IntPolynomial> irred;
            if (sqf.degree() == 1) {
                irred.push_back(sqf);
            } else if (sqf.is_monic()) {
                irred = factor_monic_squarefree(sqf);
            } else {
                // substitute x -> x/lc and clear: monic polynomial with the same splitting
                const Int lc = sqf.leading();
                const int n = sqf.degree();
                std::vector<Int> mc(n + 1);
                Int pw = 1; // lc^{n-1-i}
                for (int i = n; i >= 0; --i) {
                    mc[i] = sqf.coeffs[i] * pw;
                    if (i > 0) pw *= lc;
                }
                IntPolynomial monic(std::move(mc));
                for (const IntPolynomial& h : factor_monic_squarefree(monic)) {
                    // undo: h(lc*x), take primitive part
                    std::vector<Int> back(h.coeffs.size());
                    Int lp = 1;
                    for (std::size_t i = 0; i < h.coeffs.size(); ++i) {
                        back[i] = h.coeffs[i] * lp;
                        lp *= lc;
                    }
                    irred.push_back(primitive_part(IntPolynomial(std::move(back))));
                }
            }
            for (auto& h : irred) out.factors.emplace_back(h, mult);
        }
    }

    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (std::size_t i = a.first.coeffs.size(); i-- > 0;) {
            int c = cmp(a.first.coeffs[i], b.first.coeffs[i]);
            if (c != 0) return c < 0;
        }
        return a.second < b.second;
    });

    if (out.product() != f) raise(errc::invalid_input, "internal factorization verification failed");
    return out;
}

bool zz_is_irreducible(const IntPolynomial& f)
{
    if (f.degree() < 1) return false;
    ZZFactorization z = zz_poly_factor(f);
    return z.factors.size() == 1 && z.factors[0].second == 1 && z.factors[0].first.degree() == f.degree();
}

} // namespace avf
