#include "avf/small_field.hpp"

#include "avf/errors.hpp"
#include "avf/integer_factor.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace avf {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// dense polynomial arithmetic over F_p on u32 vectors (construction only)
using Poly = std::vector<u32>;

void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& mod, u32 p)
{
    if (a.empty() || b.empty()) return {};
    std::vector<u64> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + static_cast<u64>(a[i]) * b[j]) % p;
    }
    const std::size_t k = mod.size() - 1;
    for (std::size_t i = acc.size(); i-- > k;) {
        u64 c = acc[i] % p;
        if (!c) continue;
        acc[i] = 0;
        for (std::size_t j = 0; j < k; ++j) {
            u64 v = acc[i - k + j] + c * static_cast<u64>(p - mod[j]) % p;
            acc[i - k + j] = v % p;
        }
    }
    Poly out(k);
    for (std::size_t i = 0; i < k && i < acc.size(); ++i) out[i] = static_cast<u32>(acc[i] % p);
    trim(out);
    return out;
}

Poly powmod(Poly base, u64 e, const Poly& mod, u32 p)
{
    Poly r{1};
    while (e) {
        if (e & 1) r = mulmod(r, base, mod, p);
        e >>= 1;
        if (e) base = mulmod(base, base, mod, p);
    }
    return r;
}

Poly poly_gcd_fp(Poly a, Poly b, u32 p)
{
    auto mod_fp = [&](const Poly& x, const Poly& y) {
        Poly r = x;
        trim(r);
        while (r.size() >= y.size() && !r.empty()) {
            u64 lead = r.back();
            // multiply by inverse of y's leading coeff
            u64 inv = 1, base = y.back(), ee = p - 2;
            while (ee) {
                if (ee & 1) inv = inv * base % p;
                base = base * base % p;
                ee >>= 1;
            }
            u64 f = lead * inv % p;
            std::size_t off = r.size() - y.size();
            for (std::size_t j = 0; j < y.size(); ++j)
                r[off + j] = static_cast<u32>((r[off + j] + f * (p - y[j])) % p);
            trim(r);
        }
        return r;
    };
    while (!b.empty()) {
        Poly r = mod_fp(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool irreducible_fp(const Poly& f, u32 p)
{
    const std::size_t n = f.size() - 1;
    if (n == 1) return true;
    Poly x{0, 1};
    // x^{p^n} == x mod f
    Poly h = x;
    for (std::size_t i = 0; i < n; ++i) h = powmod(h, p, f, p);
    Poly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = (hx[1] + p - 1) % p;
    trim(hx);
    if (!hx.empty()) return false;
    for (u64 ell = 2; ell <= n; ++ell) {
        if (n % ell != 0) continue;
        bool prime = true;
        for (u64 d = 2; d * d <= ell; ++d)
            if (ell % d == 0) prime = false;
        if (!prime) continue;
        Poly g = x;
        for (std::size_t i = 0; i < n / ell; ++i) g = powmod(g, p, f, p);
        Poly gx = g;
        if (gx.size() < 2) gx.resize(2, 0);
        gx[1] = (gx[1] + p - 1) % p;
        trim(gx);
        Poly d = poly_gcd_fp(f, gx, p);
        if (d.size() != 1) return false;
    }
    return true;
}

u32 pack(const Poly& f, u32 p, u32 e)
{
    u64 v = 0;
    for (std::size_t i = e; i-- > 0;) v = v * p + (i < f.size() ? f[i] : 0);
    return static_cast<u32>(v);
}

Poly unpack(u32 v, u32 p, u32 e)
{
    Poly f(e);
    for (u32 i = 0; i < e; ++i) {
        f[i] = v % p;
        v /= p;
    }
    trim(f);
    return f;
}

} // namespace

SmallField::SmallField(std::uint32_t p, std::uint32_t e, std::uint64_t cap)
{
    if (e == 0) raise(errc::invalid_input, "extension degree must be >= 1");
    if (!is_prime(Int(p))) raise(errc::invalid_input, "characteristic must be prime");
    u64 q = 1;
    for (u32 i = 0; i < e; ++i) {
        q *= p;
        if (q > cap) raise(errc::field_too_large, "field size " + std::to_string(q) + "+ exceeds cap " + std::to_string(cap));
    }
    p_ = p;
    e_ = e;
    q_ = static_cast<u32>(q);

    // lexicographically smallest monic irreducible (by packed value)
    Poly mod;
    if (e == 1) {
        mod = {0, 1};
    } else {
        for (u32 low = 0;; ++low) {
            if (low >= q_) raise(errc::invalid_input, "internal: no irreducible modulus found");
            Poly cand = unpack(low, p, e);
            cand.resize(e + 1, 0);
            cand[e] = 1;
            if (irreducible_fp(cand, p)) {
                mod = cand;
                break;
            }
        }
    }
    modulus_.assign(e + 1, 0);
    for (std::size_t i = 0; i < mod.size(); ++i) modulus_[i] = mod[i];
    modulus_.resize(e + 1);
    if (e == 1) modulus_ = {0, 1};

    // find a generator of the multiplicative group
    std::vector<u64> prime_factors;
    for (auto& [pf, ex] : factor_integer(Int(q_ - 1))) prime_factors.push_back(pf.get_ui());
    Poly gen;
    for (u32 cand = 1;; ++cand) {
        if (cand >= q_) raise(errc::invalid_input, "internal: no multiplicative generator found");
        Poly g = unpack(cand, p, e);
        if (g.empty()) continue;
        bool ok = true;
        for (u64 ell : prime_factors) {
            Poly t = powmod(g, (q_ - 1) / ell, modulus_, p);
            if (t.size() == 1 && t[0] == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen = g;
            break;
        }
    }

    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, kSentinel);
    Poly cur{1};
    for (u32 i = 0; i < q_ - 1; ++i) {
        u32 v = pack(cur, p, e);
        exp_[i] = v;
        exp_[i + (q_ - 1)] = v;
        log_[v] = i;
        cur = mulmod(cur, gen, modulus_, p);
    }

    zech_.assign(q_ - 1, kSentinel);
    for (u32 i = 0; i < q_ - 1; ++i) {
        u32 s = add_packed(1, exp_[i]);
        zech_[i] = (s == 0) ? kSentinel : log_[s];
    }

    if (p_ != 2) {
        sqrt_.assign(q_, kSentinel);
        for (u32 y = 0; y < q_; ++y) {
            u32 sq = mul(y, y);
            if (sqrt_[sq] == kSentinel) sqrt_[sq] = y;
        }
    } else {
        frob_sqrt_.assign(q_, 0);
        for (u32 y = 0; y < q_; ++y) frob_sqrt_[mul(y, y)] = y;
        artin_.assign(q_, kSentinel);
        for (u32 w = 0; w < q_; ++w) {
            u32 c = add(mul(w, w), w);
            if (artin_[c] == kSentinel) artin_[c] = w;
        }
    }
}

SmallField::El SmallField::add_packed(El a, El b) const
{
    if (p_ == 2) return a ^ b;
    El out = 0;
    u32 mult = 1;
    while (a || b) {
        u32 da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        out += ((da + db) % p_) * mult;
        mult *= p_;
    }
    return out;
}

SmallField::El SmallField::add(El a, El b) const
{
    if (a == 0) return b;
    if (b == 0) return a;
    u32 la = log_[a], lb = log_[b];
    // a + b = gamma^la (1 + gamma^{lb - la})
    u32 d = lb >= la ? lb - la : lb + (q_ - 1) - la;
    u32 z = zech_[d];
    if (z == kSentinel) return 0;
    return exp_[la + z >= (q_ - 1) ? la + z - (q_ - 1) : la + z];
}

SmallField::El SmallField::neg(El a) const
{
    if (a == 0 || p_ == 2) return a;
    u32 l = log_[a] + (q_ - 1) / 2;
    return exp_[l >= q_ - 1 ? l - (q_ - 1) : l];
}

SmallField::El SmallField::mul(El a, El b) const
{
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

SmallField::El SmallField::inv(El a) const
{
    if (a == 0) raise(errc::invalid_input, "inverse of zero");
    u32 l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
}

SmallField::El SmallField::pow(El a, std::uint64_t k) const
{
    if (a == 0) return k == 0 ? 1 : 0;
    u64 l = static_cast<u64>(log_[a]) * (k % (q_ - 1)) % (q_ - 1);
    return exp_[static_cast<u32>(l)];
}

bool SmallField::sqrt(El a, El* root) const
{
    if (p_ == 2) {
        if (root) *root = frob_sqrt_[a];
        return true;
    }
    if (sqrt_[a] == kSentinel) return false;
    if (root) *root = sqrt_[a];
    return true;
}

bool SmallField::is_square(El a) const { return p_ == 2 || sqrt_[a] != kSentinel; }

SmallField::El SmallField::frob_sqrt(El a) const { return frob_sqrt_[a]; }

bool SmallField::artin_schreier_solve(El c, El* w) const
{
    if (artin_[c] == kSentinel) return false;
    if (w) *w = artin_[c];
    return true;
}

std::shared_ptr<const SmallField> shared_small_field(std::uint32_t p, std::uint32_t e, std::uint64_t cap)
{
    u64 q = 1;
    for (u32 i = 0; i < e; ++i) {
        q *= p;
        if (q > cap)
            raise(errc::field_too_large, "field size " + std::to_string(q) + "+ exceeds cap " + std::to_string(cap));
    }
    static std::mutex mu;
    static std::map<std::pair<u32, u32>, std::shared_ptr<const SmallField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{p, e}];
    if (!slot) slot = std::make_shared<const SmallField>(p, e, q);
    return slot;
}

SmallField::Embedding SmallField::embed_from(const SmallField& sub) const
{
    if (sub.p_ != p_ || e_ % sub.e_ != 0)
        raise(errc::invalid_input, "no embedding between these fields");
    Embedding emb;
    emb.map_.assign(sub.q_, 0);
    // smallest root of the subfield modulus in this field
    El root = 0;
    bool found = false;
    for (u32 cand = 0; cand < q_ && !found; ++cand) {
        El acc = 0;
        for (std::size_t i = sub.modulus_.size(); i-- > 0;) {
            acc = add(mul(acc, cand), from_uint(sub.modulus_[i]));
        }
        if (acc == 0) {
            root = cand;
            found = true;
        }
    }
    if (!found) raise(errc::invalid_input, "internal: subfield modulus has no root");
    for (u32 v = 0; v < sub.q_; ++v) {
        // v = sum digits * theta^i  ->  sum digits * root^i
        u32 rest = v;
        El acc = 0;
        El pw = 1;
        while (rest) {
            acc = add(acc, mul(from_uint(rest % sub.p_), pw));
            rest /= sub.p_;
            pw = mul(pw, root);
        }
        emb.map_[v] = acc;
    }
    return emb;
}

} // namespace avf
