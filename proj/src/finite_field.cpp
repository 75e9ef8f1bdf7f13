#include "avf/finite_field.hpp"

#include "avf/errors.hpp"
#include "avf/integer_factor.hpp"

#include <algorithm>

namespace avf {

namespace {

Int mod_p(const Int& a, const Int& p) { return mod_floor(a, p); }

// plain F_p[t] helpers on coefficient vectors (used for modulus checks and
// element arithmetic inside the context)
using PVec = std::vector<Int>;

void pv_trim(PVec& v)
{
    while (!v.empty() && v.back() == 0) v.pop_back();
}

PVec pv_mulmod(const PVec& a, const PVec& b, const PVec& mod, const Int& p)
{
    if (a.empty() || b.empty()) return {};
    PVec c(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = mod_p(c[i + j] + a[i] * b[j], p);
    }
    // reduce by monic mod
    const std::size_t k = mod.size() - 1;
    for (std::size_t i = c.size(); i-- > k;) {
        Int q = c[i];
        if (q == 0) continue;
        c[i] = 0;
        for (std::size_t j = 0; j < k; ++j) c[i - k + j] = mod_p(c[i - k + j] - q * mod[j], p);
    }
    c.resize(k);
    return c;
}

} // namespace

FFContext FFContext::prime_field(const Int& p)
{
    if (!is_prime(p)) raise(errc::invalid_input, "characteristic must be prime");
    FFContext F;
    F.p = p;
    F.k = 1;
    F.modulus = {Int(0), Int(1)};
    return F;
}

FFContext FFContext::extension(const Int& p, const std::vector<Int>& modulus)
{
    if (!is_prime(p)) raise(errc::invalid_input, "characteristic must be prime");
    FFContext F;
    F.p = p;
    std::vector<Int> m = modulus;
    for (Int& c : m) c = mod_p(c, p);
    pv_trim(m);
    if (m.size() < 2 || m.back() != 1) raise(errc::invalid_input, "modulus must be monic of degree >= 1");
    F.k = static_cast<unsigned>(m.size() - 1);
    F.modulus = std::move(m);
    if (F.k > 1) {
        FFContext base = prime_field(p);
        FFPoly mm;
        for (const Int& c : F.modulus) mm.push_back({c});
        if (!ffp_is_irreducible(base, mm)) raise(errc::invalid_input, "modulus is reducible");
    }
    return F;
}

FFElem ff_zero(const FFContext& F) { return FFElem(F.k, Int(0)); }

FFElem ff_one(const FFContext& F)
{
    FFElem e(F.k, Int(0));
    e[0] = 1;
    return e;
}

FFElem ff_from_int(const FFContext& F, const Int& c)
{
    FFElem e(F.k, Int(0));
    e[0] = mod_p(c, F.p);
    return e;
}

bool ff_is_zero(const FFElem& a)
{
    for (const Int& c : a)
        if (c != 0) return false;
    return true;
}

FFElem ff_add(const FFContext& F, const FFElem& a, const FFElem& b)
{
    FFElem c(F.k);
    for (unsigned i = 0; i < F.k; ++i) c[i] = mod_p(a[i] + b[i], F.p);
    return c;
}

FFElem ff_sub(const FFContext& F, const FFElem& a, const FFElem& b)
{
    FFElem c(F.k);
    for (unsigned i = 0; i < F.k; ++i) c[i] = mod_p(a[i] - b[i], F.p);
    return c;
}

FFElem ff_neg(const FFContext& F, const FFElem& a)
{
    FFElem c(F.k);
    for (unsigned i = 0; i < F.k; ++i) c[i] = mod_p(-a[i], F.p);
    return c;
}

FFElem ff_mul(const FFContext& F, const FFElem& a, const FFElem& b)
{
    if (F.k == 1) return {mod_p(a[0] * b[0], F.p)};
    PVec r = pv_mulmod(a, b, F.modulus, F.p);
    r.resize(F.k, Int(0));
    return r;
}

FFElem ff_inv(const FFContext& F, const FFElem& a)
{
    if (ff_is_zero(a)) raise(errc::invalid_input, "inverse of zero field element");
    if (F.k == 1) {
        Int s, t;
        Int g = xgcd(a[0], F.p, s, t);
        if (g != 1) raise(errc::invalid_input, "element not invertible");
        return {mod_p(s, F.p)};
    }
    // xgcd in F_p[t] between a and modulus
    FFContext base = FFContext::prime_field(F.p);
    FFPoly r0, r1;
    for (const Int& c : F.modulus) r0.push_back({c});
    for (const Int& c : a) r1.push_back({c});
    ffp_trim(r1);
    FFPoly s0{{Int(0)}}, s1{{Int(1)}};
    ffp_trim(s0);
    while (!ffp_is_zero(r1)) {
        auto [q, r] = ffp_divmod(base, r0, r1);
        FFPoly s2 = ffp_sub(base, s0, ffp_mul(base, q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (degree 0 since modulus irreducible)
    if (ffp_degree(r0) != 0) raise(errc::invalid_input, "element not invertible");
    Int lead = r0[0][0];
    Int s, t;
    xgcd(lead, F.p, s, t);
    Int scale = mod_p(s, F.p);
    FFElem out(F.k, Int(0));
    for (std::size_t i = 0; i < s0.size() && i < F.k; ++i) out[i] = mod_p(s0[i][0] * scale, F.p);
    return out;
}

FFElem ff_pow(const FFContext& F, FFElem a, Int e)
{
    if (sgn(e) < 0) {
        a = ff_inv(F, a);
        e = -e;
    }
    FFElem r = ff_one(F);
    while (e != 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = ff_mul(F, r, a);
        e >>= 1;
        if (e != 0) a = ff_mul(F, a, a);
    }
    return r;
}

// --- polynomials over the field ---------------------------------------------

FFPoly ffp_from_int_poly(const FFContext& F, const std::vector<Int>& coeffs)
{
    FFPoly f;
    f.reserve(coeffs.size());
    for (const Int& c : coeffs) f.push_back(ff_from_int(F, c));
    ffp_trim(f);
    return f;
}

void ffp_trim(FFPoly& f)
{
    while (!f.empty() && ff_is_zero(f.back())) f.pop_back();
}

int ffp_degree(const FFPoly& f) { return static_cast<int>(f.size()) - 1; }
bool ffp_is_zero(const FFPoly& f) { return f.empty(); }

FFPoly ffp_x(const FFContext& F) { return {ff_zero(F), ff_one(F)}; }
FFPoly ffp_one(const FFContext& F) { return {ff_one(F)}; }

FFPoly ffp_add(const FFContext& F, const FFPoly& a, const FFPoly& b)
{
    FFPoly c(std::max(a.size(), b.size()), ff_zero(F));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.size()) c[i] = ff_add(F, c[i], a[i]);
        if (i < b.size()) c[i] = ff_add(F, c[i], b[i]);
    }
    ffp_trim(c);
    return c;
}

FFPoly ffp_sub(const FFContext& F, const FFPoly& a, const FFPoly& b)
{
    FFPoly c(std::max(a.size(), b.size()), ff_zero(F));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.size()) c[i] = ff_add(F, c[i], a[i]);
        if (i < b.size()) c[i] = ff_sub(F, c[i], b[i]);
    }
    ffp_trim(c);
    return c;
}

FFPoly ffp_mul(const FFContext& F, const FFPoly& a, const FFPoly& b)
{
    if (a.empty() || b.empty()) return {};
    FFPoly c(a.size() + b.size() - 1, ff_zero(F));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (ff_is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = ff_add(F, c[i + j], ff_mul(F, a[i], b[j]));
    }
    ffp_trim(c);
    return c;
}

std::pair<FFPoly, FFPoly> ffp_divmod(const FFContext& F, const FFPoly& a, const FFPoly& b)
{
    if (b.empty()) raise(errc::invalid_input, "division by zero polynomial");
    FFPoly rem = a;
    const int db = ffp_degree(b);
    FFPoly quo;
    if (ffp_degree(a) >= db) quo.assign(a.size() - db, ff_zero(F));
    FFElem lead_inv = ff_inv(F, b.back());
    for (int i = ffp_degree(a); i >= db; --i) {
        if (ff_is_zero(rem[i])) continue;
        FFElem q = ff_mul(F, rem[i], lead_inv);
        quo[i - db] = q;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = ff_sub(F, rem[i - db + j], ff_mul(F, q, b[j]));
    }
    ffp_trim(rem);
    ffp_trim(quo);
    return {quo, rem};
}

FFPoly ffp_mod(const FFContext& F, const FFPoly& a, const FFPoly& b) { return ffp_divmod(F, a, b).second; }

FFPoly ffp_make_monic(const FFContext& F, const FFPoly& f)
{
    if (f.empty()) return f;
    FFElem inv = ff_inv(F, f.back());
    FFPoly g(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) g[i] = ff_mul(F, f[i], inv);
    return g;
}

FFPoly ffp_gcd(const FFContext& F, FFPoly a, FFPoly b)
{
    while (!b.empty()) {
        FFPoly r = ffp_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    return ffp_make_monic(F, a);
}

FFPoly ffp_powmod(const FFContext& F, const FFPoly& base, const Int& e, const FFPoly& mod)
{
    FFPoly r = ffp_one(F);
    FFPoly b = ffp_mod(F, base, mod);
    Int ee = e;
    while (ee != 0) {
        if (mpz_odd_p(ee.get_mpz_t())) r = ffp_mod(F, ffp_mul(F, r, b), mod);
        ee >>= 1;
        if (ee != 0) b = ffp_mod(F, ffp_mul(F, b, b), mod);
    }
    return r;
}

FFPoly ffp_derivative(const FFContext& F, const FFPoly& f)
{
    if (f.size() <= 1) return {};
    FFPoly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = ff_mul(F, ff_from_int(F, Int(i)), f[i]);
    ffp_trim(d);
    return d;
}

FFElem ffp_eval(const FFContext& F, const FFPoly& f, const FFElem& x)
{
    FFElem acc = ff_zero(F);
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = ff_add(F, ff_mul(F, acc, x), *it);
    return acc;
}

bool ffp_equal(const FFPoly& a, const FFPoly& b) { return a == b; }

bool ffp_is_irreducible(const FFContext& F, const FFPoly& f)
{
    const int n = ffp_degree(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    FFPoly fm = ffp_make_monic(F, f);
    const Int q = F.order();
    FFPoly x = ffp_x(F);
    // x^{q^n} == x mod f
    FFPoly h = x;
    for (int i = 0; i < n; ++i) h = ffp_powmod(F, h, q, fm);
    if (!ffp_equal(h, ffp_mod(F, x, fm))) return false;
    for (const Int& ell : prime_divisors(Int(n))) {
        unsigned long e = static_cast<unsigned long>(n / ell.get_ui());
        FFPoly g = x;
        for (unsigned long i = 0; i < e; ++i) g = ffp_powmod(F, g, q, fm);
        FFPoly d = ffp_gcd(F, ffp_sub(F, g, x), fm);
        if (ffp_degree(d) != 0) return false;
    }
    return true;
}

FFXgcd ffp_xgcd(const FFContext& F, const FFPoly& a, const FFPoly& b)
{
    FFPoly r0 = a, r1 = b;
    FFPoly s0 = ffp_one(F), s1 = {};
    FFPoly t0 = {}, t1 = ffp_one(F);
    while (!ffp_is_zero(r1)) {
        auto [q, r] = ffp_divmod(F, r0, r1);
        FFPoly s2 = ffp_sub(F, s0, ffp_mul(F, q, s1));
        FFPoly t2 = ffp_sub(F, t0, ffp_mul(F, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    FFXgcd out;
    if (ffp_is_zero(r0)) {
        out.g = r0;
        out.s = s0;
        out.t = t0;
        return out;
    }
    FFElem inv = ff_inv(F, r0.back());
    auto scale = [&](const FFPoly& v) {
        FFPoly w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w[i] = ff_mul(F, v[i], inv);
        return w;
    };
    out.g = scale(r0);
    out.s = scale(s0);
    out.t = scale(t0);
    return out;
}

// --- factorization -----------------------------------------------------------

namespace {

FFElem ff_pth_root(const FFContext& F, const FFElem& a)
{
    // Frobenius is an automorphism; the p-th root is a^(p^(k-1)).
    if (F.k == 1) return a;
    return ff_pow(F, a, pow_ui(F.p, F.k - 1));
}

FFPoly ffp_pth_root(const FFContext& F, const FFPoly& f)
{
    // f = sum a_i t^{p i}  ->  sum root(a_i) t^i
    unsigned long p = F.p.get_ui();
    FFPoly out;
    for (std::size_t i = 0; i < f.size(); i += p) out.push_back(ff_pth_root(F, f[i]));
    ffp_trim(out);
    return out;
}

void squarefree_decompose(const FFContext& F, const FFPoly& f, unsigned mult,
                          std::vector<std::pair<FFPoly, unsigned>>& out)
{
    // Yun-style decomposition adapted to characteristic p; f monic.
    FFPoly d = ffp_derivative(F, f);
    if (ffp_is_zero(d)) {
        FFPoly r = ffp_pth_root(F, f);
        squarefree_decompose(F, r, mult * static_cast<unsigned>(F.p.get_ui()), out);
        return;
    }
    FFPoly c = ffp_gcd(F, f, d);
    FFPoly w = ffp_divmod(F, f, c).first;
    unsigned i = 1;
    while (ffp_degree(w) > 0) {
        FFPoly y = ffp_gcd(F, w, c);
        FFPoly z = ffp_divmod(F, w, y).first;
        if (ffp_degree(z) > 0) out.emplace_back(z, mult * i);
        ++i;
        w = std::move(y);
        c = ffp_divmod(F, c, w).first;
    }
    if (ffp_degree(c) > 0) {
        FFPoly r = ffp_pth_root(F, c);
        squarefree_decompose(F, r, mult * static_cast<unsigned>(F.p.get_ui()), out);
    }
}

FFPoly random_poly(const FFContext& F, int deg_below, SplitMix64& rng)
{
    FFPoly r;
    for (int i = 0; i < deg_below; ++i) {
        FFElem e(F.k);
        for (unsigned j = 0; j < F.k; ++j) {
            Int c = mod_floor(Int(rng.next()), F.p);
            e[j] = c;
        }
        r.push_back(std::move(e));
    }
    ffp_trim(r);
    return r;
}

// splits a monic squarefree product of degree-d irreducibles
void equal_degree_split(const FFContext& F, const FFPoly& g, int d, SplitMix64& rng, std::vector<FFPoly>& out)
{
    const int n = ffp_degree(g);
    if (n == d) {
        out.push_back(g);
        return;
    }
    const Int q = F.order();
    FFPoly splitter;
    while (true) {
        FFPoly a = random_poly(F, n, rng);
        if (ffp_degree(a) < 1) continue;
        FFPoly t;
        if (F.p == 2) {
            // trace map over F_{2^(k d)}
            unsigned long bits = static_cast<unsigned long>(F.k) * static_cast<unsigned long>(d);
            t = a;
            FFPoly acc = a;
            for (unsigned long i = 1; i < bits; ++i) {
                acc = ffp_mod(F, ffp_mul(F, acc, acc), g);
                t = ffp_add(F, t, acc);
            }
        } else {
            Int e = (pow_ui(q, d) - 1) / 2;
            t = ffp_sub(F, ffp_powmod(F, a, e, g), ffp_one(F));
        }
        FFPoly h = ffp_gcd(F, t, g);
        if (ffp_degree(h) > 0 && ffp_degree(h) < n) {
            splitter = h;
            break;
        }
    }
    equal_degree_split(F, splitter, d, rng, out);
    equal_degree_split(F, ffp_divmod(F, g, splitter).first, d, rng, out);
}

} // namespace

int ffp_compare(const FFPoly& a, const FFPoly& b)
{
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        const FFElem& x = a[i];
        const FFElem& y = b[i];
        for (std::size_t j = x.size(); j-- > 0;) {
            int c = cmp(x[j], y[j]);
            if (c != 0) return c;
        }
    }
    return 0;
}

FFFactorization ff_poly_factor(const FFContext& F, const FFPoly& f)
{
    if (ffp_is_zero(f)) raise(errc::invalid_input, "factoring the zero polynomial");
    FFFactorization out;
    out.unit = f.back();
    if (ffp_degree(f) == 0) return out;
    FFPoly fm = ffp_make_monic(F, f);

    std::uint64_t seed = hash_int(F.p);
    for (const auto& e : fm)
        for (const Int& c : e) seed = hash_mix(seed, hash_int(c));
    SplitMix64 rng(seed);

    std::vector<std::pair<FFPoly, unsigned>> sqf;
    squarefree_decompose(F, fm, 1, sqf);

    for (auto& [part, mult] : sqf) {
        // distinct-degree on the squarefree part
        FFPoly rest = part;
        const Int q = F.order();
        FFPoly x = ffp_x(F);
        FFPoly h = ffp_mod(F, x, rest);
        int d = 0;
        while (ffp_degree(rest) > 0) {
            ++d;
            if (2 * d > ffp_degree(rest)) {
                out.factors.emplace_back(rest, mult);
                break;
            }
            h = ffp_powmod(F, h, q, rest);
            FFPoly g = ffp_gcd(F, ffp_sub(F, h, ffp_mod(F, x, rest)), rest);
            if (ffp_degree(g) > 0) {
                std::vector<FFPoly> split;
                equal_degree_split(F, g, d, rng, split);
                for (auto& irr : split) out.factors.emplace_back(irr, mult);
                rest = ffp_divmod(F, rest, g).first;
                h = ffp_mod(F, h, rest);
            }
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return ffp_compare(a.first, b.first) < 0; });
    return out;
}

} // namespace avf
