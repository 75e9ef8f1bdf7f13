#include "avf/oracle_jac2.hpp"

#include "avf/errors.hpp"
#include "avf/integer_factor.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace avf {

namespace {

using El = SmallField::El;
using FPoly = std::vector<El>; // low-first over a SmallField

void trim(FPoly& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const FPoly& f) { return static_cast<int>(f.size()) - 1; }

FPoly fp_add(const SmallField& F, const FPoly& a, const FPoly& b)
{
    FPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        El x = i < a.size() ? a[i] : 0;
        El y = i < b.size() ? b[i] : 0;
        c[i] = F.add(x, y);
    }
    trim(c);
    return c;
}

FPoly fp_sub(const SmallField& F, const FPoly& a, const FPoly& b)
{
    FPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        El x = i < a.size() ? a[i] : 0;
        El y = i < b.size() ? b[i] : 0;
        c[i] = F.sub(x, y);
    }
    trim(c);
    return c;
}

FPoly fp_mul(const SmallField& F, const FPoly& a, const FPoly& b)
{
    if (a.empty() || b.empty()) return {};
    FPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    }
    trim(c);
    return c;
}

std::pair<FPoly, FPoly> fp_divmod(const SmallField& F, const FPoly& a, const FPoly& b)
{
    FPoly rem = a;
    const int db = deg(b);
    FPoly quo;
    if (deg(a) >= db) quo.assign(a.size() - db, 0);
    El lead_inv = F.inv(b.back());
    for (int i = deg(a); i >= db; --i) {
        El q = F.mul(rem[i], lead_inv);
        if (!q) continue;
        quo[i - db] = q;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = F.sub(rem[i - db + j], F.mul(q, b[j]));
    }
    trim(rem);
    trim(quo);
    return {quo, rem};
}

FPoly fp_mod(const SmallField& F, const FPoly& a, const FPoly& b) { return fp_divmod(F, a, b).second; }

FPoly fp_make_monic(const SmallField& F, const FPoly& a)
{
    if (a.empty()) return a;
    El inv = F.inv(a.back());
    FPoly b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) b[i] = F.mul(a[i], inv);
    return b;
}

// monic g = s a + t b
struct FpXgcd {
    FPoly g, s, t;
};

FpXgcd fp_xgcd(const SmallField& F, const FPoly& a, const FPoly& b)
{
    FPoly r0 = a, r1 = b;
    FPoly s0{1}, s1{};
    FPoly t0{}, t1{1};
    trim(s0);
    trim(t1);
    while (!r1.empty()) {
        auto [q, r] = fp_divmod(F, r0, r1);
        FPoly s2 = fp_sub(F, s0, fp_mul(F, q, s1));
        FPoly t2 = fp_sub(F, t0, fp_mul(F, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    El inv = F.inv(r0.back());
    auto scale = [&](FPoly v) {
        for (El& c : v) c = F.mul(c, inv);
        return v;
    };
    return {scale(r0), scale(s0), scale(t0)};
}

FPoly to_poly(const MumfordDivisor& d)
{
    if (d.udeg == 0) return {1};
    if (d.udeg == 1) return {d.u[0], 1};
    return {d.u[0], d.u[1], 1};
}

FPoly v_poly(const MumfordDivisor& d)
{
    FPoly v{d.v[0], d.v[1]};
    trim(v);
    return v;
}

MumfordDivisor from_polys(const FPoly& u, const FPoly& v)
{
    MumfordDivisor d;
    d.udeg = static_cast<std::uint8_t>(deg(u));
    if (d.udeg >= 1) d.u[0] = u[0];
    if (d.udeg == 2) d.u[1] = u[1];
    if (!v.empty()) d.v[0] = v[0];
    if (v.size() > 1) d.v[1] = v[1];
    return d;
}

std::uint64_t pack_divisor(const MumfordDivisor& d)
{
    std::uint64_t k = d.udeg;
    k = (k << 12) | d.u[0];
    k = (k << 12) | d.u[1];
    k = (k << 12) | d.v[0];
    k = (k << 12) | d.v[1];
    return k;
}

} // namespace

std::string HyperellipticCurve::to_string() const
{
    std::ostringstream os;
    os << "y^2 = x^5";
    const char* names[4] = {"", "*x", "*x^2", "*x^3"};
    for (int i = 4; i >= 1; --i) {
        if (f[i]) os << " + " << f[i] << (i == 1 ? "*x" : "*x^" + std::to_string(i));
    }
    (void)names;
    if (f[0]) os << " + " << f[0];
    os << " over GF(" << p << ")";
    return os.str();
}

MumfordDivisor cantor_neg(const SmallField& F, const MumfordDivisor& a)
{
    MumfordDivisor b = a;
    b.v[0] = F.neg(a.v[0]);
    b.v[1] = F.neg(a.v[1]);
    return b;
}

MumfordDivisor cantor_add(const SmallField& F, const std::array<El, 5>& fpoly, const MumfordDivisor& a,
                          const MumfordDivisor& b)
{
    FPoly fc{fpoly[0], fpoly[1], fpoly[2], fpoly[3], fpoly[4], 1};
    FPoly u1 = to_poly(a), u2 = to_poly(b);
    FPoly v1 = v_poly(a), v2 = v_poly(b);

    // composition
    FpXgcd g1 = fp_xgcd(F, u1, u2);
    FPoly vsum = fp_add(F, v1, v2);
    FPoly d, s1, s2, s3;
    if (vsum.empty()) {
        // gcd(d0, 0) = d0
        d = g1.g;
        s1 = g1.s;
        s2 = g1.t;
        s3 = {};
    } else {
        FpXgcd g2 = fp_xgcd(F, g1.g, vsum);
        d = g2.g;
        s1 = fp_mul(F, g2.s, g1.s);
        s2 = fp_mul(F, g2.s, g1.t);
        s3 = g2.t;
    }
    FPoly u = fp_divmod(F, fp_mul(F, u1, u2), fp_mul(F, d, d)).first;
    FPoly num = fp_add(F, fp_add(F, fp_mul(F, fp_mul(F, s1, u1), v2), fp_mul(F, fp_mul(F, s2, u2), v1)),
                       fp_mul(F, s3, fp_add(F, fp_mul(F, v1, v2), fc)));
    FPoly v = fp_mod(F, fp_divmod(F, num, d).first, u);

    // reduction to deg u <= 2
    while (deg(u) > 2) {
        FPoly unext = fp_divmod(F, fp_sub(F, fc, fp_mul(F, v, v)), u).first;
        unext = fp_make_monic(F, unext);
        FPoly vnext = fp_mod(F, fp_sub(F, FPoly{}, v), unext);
        u = std::move(unext);
        v = std::move(vnext);
    }
    u = fp_make_monic(F, u);
    return from_polys(u, v);
}

MumfordDivisor cantor_mul(const SmallField& F, const std::array<El, 5>& fpoly, MumfordDivisor a, Int k)
{
    MumfordDivisor r; // identity
    if (sgn(k) < 0) {
        a = cantor_neg(F, a);
        k = -k;
    }
    while (k != 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = cantor_add(F, fpoly, r, a);
        k >>= 1;
        if (k != 0) a = cantor_add(F, fpoly, a, a);
    }
    return r;
}

namespace {

struct JacContext {
    std::shared_ptr<const SmallField> Fp;
    const SmallField& F;
    std::array<El, 5> f;

    JacContext(const HyperellipticCurve& C, unsigned n, std::uint64_t field_cap)
        : Fp(shared_small_field(C.p, n, field_cap)), F(*Fp), f{}
    {
        auto base = shared_small_field(C.p, 1, field_cap);
        auto emb = F.embed_from(*base);
        for (int i = 0; i < 5; ++i) f[i] = emb(C.f[i]);
    }

    El eval_f(El x) const
    {
        El acc = F.one(); // leading x^5 coefficient
        for (int i = 4; i >= 0; --i) acc = F.add(F.mul(acc, x), f[i]);
        return acc;
    }
};

void check_curve(const HyperellipticCurve& C)
{
    if (C.p < 3 || !is_prime(Int(C.p))) raise(errc::invalid_input, "characteristic must be an odd prime");
    for (El c : C.f)
        if (c >= C.p) raise(errc::invalid_input, "coefficients must be reduced mod p");
    // squarefree over the algebraic closure: gcd(f, f') = 1 over F_p
    auto Fp = shared_small_field(C.p, 1, 1u << 20);
    const SmallField& F = *Fp;
    FPoly f{C.f[0], C.f[1], C.f[2], C.f[3], C.f[4], 1};
    FPoly df(5);
    for (int i = 1; i <= 5; ++i) df[i - 1] = F.mul(F.from_uint(i), f[i]);
    trim(df);
    FpXgcd g = fp_xgcd(F, f, df);
    if (deg(g.g) != 0) raise(errc::invalid_input, "f has a repeated root: the model is singular");
}

std::vector<MumfordDivisor> enumerate_divisors(const JacContext& ctx)
{
    const SmallField& F = ctx.F;
    std::vector<MumfordDivisor> out;
    out.push_back({}); // identity

    // degree-1 u = x + u0, v = v0 with v0^2 = f(-u0)
    for (El a = 0; a < F.q(); ++a) {
        El z = ctx.eval_f(a);
        El u0 = F.neg(a);
        if (z == 0) {
            out.push_back({1, {u0, 0}, {0, 0}});
        } else {
            El r;
            if (F.sqrt(z, &r)) {
                out.push_back({1, {u0, 0}, {r, 0}});
                out.push_back({1, {u0, 0}, {F.neg(r), 0}});
            }
        }
    }

    // degree-2 u = x^2 + u1 x + u0: v = v1 x + v0 with u | v^2 - f, i.e.
    //   2 v0 v1 - u1 v1^2 = r1  and  v0^2 - u0 v1^2 = r0
    // where f mod u = r1 x + r0.
    for (El u1 = 0; u1 < F.q(); ++u1) {
        for (El u0 = 0; u0 < F.q(); ++u0) {
            // f mod (x^2 + u1 x + u0) by Horner with the reduction
            // (A x + B) * x = (B - A u1) x - A u0; start from the leading 1
            El A = 0, B = 1;
            for (int i = 4; i >= 0; --i) {
                // r*x = A x^2 + B x = A(-u1 x - u0) + B x
                El nA = F.add(F.mul(A, F.neg(u1)), B);
                El nB = F.mul(A, F.neg(u0));
                A = nA;
                B = F.add(nB, ctx.f[i]);
            }
            El r1 = A, r0 = B;

            // v1 = 0: v0^2 = r0, requires r1 = 0
            if (r1 == 0) {
                if (r0 == 0) {
                    out.push_back({2, {u0, u1}, {0, 0}});
                } else {
                    El w;
                    if (F.sqrt(r0, &w)) {
                        out.push_back({2, {u0, u1}, {w, 0}});
                        out.push_back({2, {u0, u1}, {F.neg(w), 0}});
                    }
                }
            }
            // v1 != 0: v0 = (r1 + u1 v1^2) / (2 v1), then check the second equation
            for (El v1 = 1; v1 < F.q(); ++v1) {
                El v1sq = F.mul(v1, v1);
                El v0 = F.div(F.add(r1, F.mul(u1, v1sq)), F.mul(F.from_uint(2), v1));
                if (F.sub(F.mul(v0, v0), F.mul(u0, v1sq)) == r0) out.push_back({2, {u0, u1}, {v0, v1}});
            }
        }
    }
    return out;
}

} // namespace

JacGroup jac_enumerate(const HyperellipticCurve& C, unsigned n, std::uint64_t jac_cap)
{
    check_curve(C);
    if (n == 0) raise(errc::invalid_input, "n must be >= 1");
    // #J ~ q^2: enforce the Jacobian cap through the field cap sqrt
    std::uint64_t field_cap = 1;
    while ((field_cap + 1) * (field_cap + 1) <= jac_cap) ++field_cap;
    JacContext ctx(C, n, field_cap);

    std::vector<MumfordDivisor> divisors = enumerate_divisors(ctx);
    const std::size_t N = divisors.size();
    if (N > jac_cap) raise(errc::field_too_large, "Jacobian larger than the cap");

    std::unordered_map<std::uint64_t, std::uint32_t> index;
    index.reserve(N * 2);
    for (std::size_t i = 0; i < N; ++i) index[pack_divisor(divisors[i])] = static_cast<std::uint32_t>(i);

    Int count = Int(static_cast<unsigned long>(N));
    std::vector<Int> cyclic_orders;
    for (const auto& [ell, a] : factor_integer(count)) {
        // map D -> ell * D as an index table
        std::vector<std::uint32_t> mul_ell(N);
        for (std::size_t i = 0; i < N; ++i) {
            MumfordDivisor m = cantor_mul(ctx.F, ctx.f, divisors[i], ell);
            auto it = index.find(pack_divisor(m));
            if (it == index.end()) raise(errc::invalid_input, "internal: Cantor arithmetic left the divisor set");
            mul_ell[i] = it->second;
        }
        // C_j = #{D : ell^j D = 0}; the Sylow partition falls out of the ratios
        std::vector<char> killed(N, 0);
        killed[0] = 1; // identity index is 0 (first pushed)
        Int prev = 1;
        std::vector<unsigned> parts; // lambda_t counts: parts[j] = #{t : lambda_t >= j+1}
        for (unsigned j = 1; j <= a + 1; ++j) {
            std::vector<char> next(N, 0);
            std::size_t cnt = 0;
            for (std::size_t i = 0; i < N; ++i) {
                if (killed[mul_ell[i]]) {
                    next[i] = 1;
                    ++cnt;
                }
            }
            Int cj = Int(static_cast<unsigned long>(cnt));
            if (cj == prev) break;
            // cj / prev = ell^{#parts >= j}
            Int ratio = divexact(cj, prev);
            unsigned count_parts = 0;
            Int r = ratio;
            while (r > 1) {
                if (r % ell != 0) raise(errc::invalid_input, "internal: torsion count is not an ell-power ratio");
                r = divexact(r, ell);
                ++count_parts;
            }
            parts.push_back(count_parts);
            killed = std::move(next);
            prev = cj;
        }
        // partition: part t has size #{j : parts[j] >= t+1}
        if (!parts.empty()) {
            for (unsigned t = 0; t < parts[0]; ++t) {
                unsigned lambda = 0;
                for (unsigned j = 0; j < parts.size(); ++j)
                    if (parts[j] > t) ++lambda;
                cyclic_orders.push_back(pow_ui(ell, lambda));
            }
        }
    }

    JacGroup out;
    out.count = count;
    out.structure = AbelianGroupStructure::from_cyclic_orders(std::move(cyclic_orders));
    if (out.structure.order() != count) raise(errc::invalid_input, "internal: Sylow recombination mismatch");
    return out;
}

WeilPolynomial jac_frobenius(const HyperellipticCurve& C, std::uint64_t jac_cap)
{
    check_curve(C);
    std::uint64_t field_cap = 1;
    while ((field_cap + 1) * (field_cap + 1) <= jac_cap) ++field_cap;

    auto curve_count = [&](unsigned n) {
        // the curve sweep over F_{p^2} is cheap; it may exceed the Jacobian cap
        JacContext ctx(C, n, std::max<std::uint64_t>(field_cap * field_cap, static_cast<std::uint64_t>(C.p) * C.p) + 1);
        Int cnt = 1; // the point at infinity
        for (El x = 0; x < ctx.F.q(); ++x) {
            El z = ctx.eval_f(x);
            if (z == 0) cnt += 1;
            else if (ctx.F.is_square(z)) cnt += 2;
        }
        return cnt;
    };

    Int p = C.p;
    Int s1 = p + 1 - curve_count(1);
    Int s2 = p * p + 1 - curve_count(2);
    Int e1 = s1;
    Int e2 = divexact(s1 * s1 - s2, 2);
    IntPolynomial P{p * p, -p * e1, e2, -e1, 1};

    WeilPolynomial w;
    try {
        w = validate_weil(p, P);
    } catch (const Error& e) {
        raise(errc::invalid_input, std::string("internal: curve counts violate the Weil bound (counting bug): ") + e.what());
    }
    // double-entry bookkeeping: the Newton-identity middle coefficient is the
    // most error-prone number here, so P(1) must equal the enumerated #J
    Int pj = jac_enumerate(C, 1, jac_cap).count;
    if (P.eval(Int(1)) != pj)
        raise(errc::invalid_input, "internal: P(1) != #J(F_p) (abort: Frobenius coefficients wrong)");
    return w;
}

VerificationReport verify_jac(const HyperellipticCurve& C, unsigned n, std::uint64_t jac_cap,
                              std::uint64_t index_cap)
{
    VerificationReport rep;
    rep.kind = "jac2";
    rep.curve = C.to_string();
    rep.n = n;

    WeilPolynomial w = jac_frobenius(C, jac_cap);
    rep.weil_poly = w.poly;
    JacGroup oracle = jac_enumerate(C, n, jac_cap);
    rep.oracle_count = oracle.count;
    rep.oracle_structure = oracle.structure;
    rep.expected_count = base_extension(w, n).point_count;
    rep.cardinality_ok = rep.oracle_count == rep.expected_count;

    if (w.d != 1) {
        // structure verification is attempted only for irreducible P
        rep.structure_attempted = false;
        rep.pass = rep.cardinality_ok;
        return rep;
    }

    NumberFieldOrder zpb = order_construct(w, OrderSpecZPiBar{});
    NumberFieldOrder omax = order_construct(w, OrderSpecMaximal{});
    for (NumberFieldOrder& O : intermediate_orders(zpb, omax, index_cap)) {
        Rat idx = lattice_index(O.lattice(), omax.lattice());
        OrderPrediction pred{std::move(O), idx.get_num(), true, "", std::nullopt, false};
        if (!is_gorenstein(pred.order)) {
            pred.gorenstein = false;
            pred.skipped_reason = "order is not Gorenstein";
        } else {
            StructureReport sr = rational_points_structure(w, pred.order, n, StructureMode::gorenstein_case);
            pred.predicted = sr.invariants;
            pred.matches_oracle = sr.invariants == oracle.structure;
            if (pred.matches_oracle) rep.match_set.push_back(rep.predictions.size());
        }
        rep.predictions.push_back(std::move(pred));
    }
    rep.pass = rep.cardinality_ok && !rep.match_set.empty();
    return rep;
}

} // namespace avf
