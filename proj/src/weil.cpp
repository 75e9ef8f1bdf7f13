#include "avf/weil.hpp"

#include "avf/errors.hpp"
#include "avf/integer_factor.hpp"
#include "avf/zz_factor.hpp"

#include <algorithm>

namespace avf {

namespace {

// q = p^k or throws NotPrimePower
void split_prime_power(const Int& q, Int& p, unsigned& k)
{
    if (q < 2) raise(errc::not_prime_power, q.get_str() + " is not a prime power");
    auto f = factor_integer(q);
    if (f.size() != 1) raise(errc::not_prime_power, q.get_str() + " is not a prime power");
    p = f[0].first;
    k = f[0].second;
}

bool symmetric_coeffs(const IntPolynomial& f, const Int& q)
{
    const int n = f.degree(); // = 2h
    const int h = n / 2;
    for (int j = 0; j <= h; ++j) {
        if (f.coeff(j) != pow_ui(q, h - j) * f.coeff(n - j)) return false;
    }
    return true;
}

// all roots of the irreducible m on |z| = sqrt(q)?
bool roots_on_weil_circle(const IntPolynomial& m, const Int& q)
{
    const int deg = m.degree();
    if (deg == 1) {
        Int c = -m.coeff(0);
        return c * c == q;
    }
    if (deg % 2 != 0) return false; // odd degree >= 3 would need a real root +-sqrt(q)
    if (deg == 2 && m.coeff(1) == 0 && m.coeff(0) == -q) return true; // t^2 - q
    if (!symmetric_coeffs(m, q)) return false;
    IntPolynomial h = trace_polynomial(m, q);
    IntPolynomial hs = squarefree_part(h);
    return sturm_count_sqrt_interval(hs, 4 * q) == hs.degree();
}

} // namespace

IntPolynomial trace_polynomial(const IntPolynomial& m, const Int& q)
{
    const int deg = m.degree();
    if (deg < 2 || deg % 2 != 0) raise(errc::invalid_input, "trace polynomial needs even degree");
    const int h = deg / 2;
    // Dickson basis: D_0 = 2, D_1 = y, D_k = y D_{k-1} - q D_{k-2}, and
    // m(t)/t^h = a_h + sum_{k>=1} a_{h+k} (t^k + q^k/t^k) for symmetric m.
    std::vector<IntPolynomial> dick(h + 1);
    dick[0] = IntPolynomial{2};
    if (h >= 1) dick[1] = IntPolynomial{0, 1};
    for (int k = 2; k <= h; ++k) dick[k] = IntPolynomial{0, 1} * dick[k - 1] - q * dick[k - 2];
    IntPolynomial out{m.coeff(h)};
    for (int k = 1; k <= h; ++k) out = out + m.coeff(h + k) * dick[k];
    return out;
}

std::pair<IntPolynomial, unsigned> decompose(const IntPolynomial& P)
{
    if (P.is_zero() || !P.is_monic()) raise(errc::not_monic, "decompose needs a monic polynomial");
    IntPolynomial m = squarefree_part(P);
    if (m.degree() < 1 || P.degree() % m.degree() != 0)
        raise(errc::not_prime_power_shape, "polynomial is not a power of one irreducible");
    unsigned d = static_cast<unsigned>(P.degree() / m.degree());
    if (pow(m, d) != P) raise(errc::not_prime_power_shape, "polynomial is not a power of one irreducible");
    if (!zz_is_irreducible(m)) raise(errc::not_prime_power_shape, "squarefree part is reducible");
    return {m, d};
}

WeilPolynomial validate_weil(const Int& q, const IntPolynomial& coeffs)
{
    if (coeffs.is_zero() || coeffs.leading() != 1) raise(errc::not_monic, "leading coefficient must be 1");
    if (coeffs.coeffs.size() % 2 == 0 || coeffs.degree() < 2)
        raise(errc::bad_degree_parity, "need odd coefficient length 2g+1 with g >= 1");

    WeilPolynomial w;
    w.q = q;
    split_prime_power(q, w.p, w.k);
    w.g = static_cast<unsigned>(coeffs.degree() / 2);
    w.poly = coeffs;

    if (!symmetric_coeffs(coeffs, q))
        raise(errc::symmetry_violated, "coefficients violate a_j = q^{g-j} a_{2g-j}");

    ZZFactorization fac = zz_poly_factor(coeffs);
    for (const auto& [h, e] : fac.factors) {
        if (!roots_on_weil_circle(h, q))
            raise(errc::root_modulus_violated, "factor " + h.to_string() + " has a root off |z| = sqrt(q)");
    }
    if (fac.factors.size() != 1)
        raise(errc::not_prime_power_shape, "polynomial is not a power of one irreducible");
    w.m = fac.factors[0].first;
    w.d = fac.factors[0].second;
    return w;
}

bool is_ordinary(const WeilPolynomial& w) { return gcd(w.middle_coeff(), w.p) == 1; }

BaseExtension base_extension(const WeilPolynomial& w, unsigned n)
{
    if (n == 0) raise(errc::invalid_input, "base extension needs n >= 1");
    BaseExtension out;
    if (n == 1) {
        out.poly = w.poly;
    } else {
        // P_n(t) = Res_x(P(x), x^n - t): monic of degree 2g; recover it by
        // interpolation from integer resultant evaluations.
        const int deg = w.poly.degree();
        std::vector<Rat> xs, ys;
        for (int c = 0; c <= deg; ++c) {
            std::vector<Int> xnc(n + 1, Int(0));
            xnc[0] = -Int(c);
            xnc[n] = 1;
            xs.emplace_back(c);
            ys.emplace_back(resultant(w.poly, IntPolynomial(std::move(xnc))));
        }
        RatPoly pn = interpolate(xs, ys);
        std::vector<Int> ic(pn.coeffs.size());
        for (std::size_t i = 0; i < pn.coeffs.size(); ++i) {
            if (pn.coeffs[i].get_den() != 1) raise(errc::invalid_input, "internal: non-integral base extension");
            ic[i] = pn.coeffs[i].get_num();
        }
        out.poly = IntPolynomial(std::move(ic));
        if (out.poly.degree() != deg || !out.poly.is_monic())
            raise(errc::invalid_input, "internal: malformed base extension");
    }
    std::vector<Int> tn(n + 1, Int(0));
    tn[0] = -1;
    tn[n] = 1;
    Int res = abs(resultant(w.poly, IntPolynomial(std::move(tn))));
    if (res != out.poly.eval(Int(1)))
        raise(errc::invalid_input, "internal: resultant point count mismatch");
    if (res <= 0) raise(errc::invalid_input, "internal: nonpositive point count");
    out.point_count = res;
    return out;
}

std::vector<WeilPolynomial> enumerate_weil(const Int& q, unsigned g)
{
    if (g < 1 || g > 2) raise(errc::invalid_input, "enumeration supports g in {1, 2}");
    if (q > 49) raise(errc::invalid_input, "enumeration supports q <= 49");
    Int p;
    unsigned k;
    split_prime_power(q, p, k);

    auto ceil_sqrt = [](const Int& v) {
        Int r = isqrt(v);
        if (r * r < v) r += 1;
        return r;
    };

    std::vector<WeilPolynomial> out;
    if (g == 1) {
        Int b1 = ceil_sqrt(4 * q); // |a_1| <= 2 sqrt(q)
        for (Int a = -b1; a <= b1; ++a) {
            try {
                out.push_back(validate_weil(q, IntPolynomial{q, a, 1}));
            } catch (const Error&) {
            }
        }
    } else {
        Int b3 = ceil_sqrt(16 * q); // |a_3| <= 4 sqrt(q)
        Int b2 = 6 * q;             // |a_2| <= 6 q
        for (Int a3 = -b3; a3 <= b3; ++a3) {
            for (Int a2 = -b2; a2 <= b2; ++a2) {
                try {
                    out.push_back(validate_weil(q, IntPolynomial{q * q, q * a3, a2, a3, 1}));
                } catch (const Error&) {
                }
            }
        }
    }
    return out;
}

} // namespace avf
