#include "avf/polynomial.hpp"

#include "avf/errors.hpp"
#include "avf/int_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace avf {

Int IntPolynomial::eval(const Int& x) const
{
    Int acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPolynomial::eval(const Rat& x) const
{
    Rat acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::derivative() const
{
    if (coeffs.size() <= 1) return {};
    std::vector<Int> d(coeffs.size() - 1);
    for (std::size_t i = 1; i < coeffs.size(); ++i) d[i - 1] = Int(i) * coeffs[i];
    return IntPolynomial(std::move(d));
}

std::string IntPolynomial::to_string() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeffs[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<Int> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<Int> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.coeffs.size() + b.coeffs.size() - 1);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const Int& c, const IntPolynomial& a)
{
    std::vector<Int> r(a.coeffs.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = c * a.coeffs[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial operator-(const IntPolynomial& a) { return Int(-1) * a; }

bool divides(const IntPolynomial& b, const IntPolynomial& a, IntPolynomial* quotient)
{
    if (b.is_zero()) raise(errc::invalid_input, "division by zero polynomial");
    std::vector<Int> rem = a.coeffs;
    std::vector<Int> quo;
    int db = b.degree();
    if (a.degree() >= db) quo.assign(a.degree() - db + 1, Int(0));
    for (int i = a.degree(); i >= db; --i) {
        Int& top = rem[i];
        if (top == 0) continue;
        if (top % b.leading() != 0) return false;
        Int q = divexact(top, b.leading());
        quo[i - db] = q;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs[j];
    }
    for (const Int& c : rem)
        if (c != 0) return false;
    if (quotient) *quotient = IntPolynomial(std::move(quo));
    return true;
}

IntPolynomial divexact(const IntPolynomial& a, const IntPolynomial& b)
{
    IntPolynomial q;
    if (!divides(b, a, &q)) raise(errc::invalid_input, "polynomial division is not exact");
    return q;
}

IntPolynomial pow(const IntPolynomial& a, unsigned e)
{
    IntPolynomial r{1};
    IntPolynomial base = a;
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

Int content(const IntPolynomial& a)
{
    Int g = 0;
    for (const Int& c : a.coeffs) g = gcd(g, c);
    return g;
}

IntPolynomial primitive_part(const IntPolynomial& a)
{
    if (a.is_zero()) return {};
    Int g = content(a);
    if (a.leading() < 0) g = -g;
    std::vector<Int> c(a.coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = divexact(a.coeffs[i], g);
    return IntPolynomial(std::move(c));
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero()) return b.is_zero() ? IntPolynomial{} : primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    RatPoly g = rat_poly_gcd(RatPoly(a), RatPoly(b));
    IntPolynomial pg = primitive_of(g);
    Int cg = gcd(content(a), content(b));
    return cg * pg;
}

IntPolynomial squarefree_part(const IntPolynomial& a)
{
    if (a.is_zero()) raise(errc::invalid_input, "squarefree part of zero polynomial");
    IntPolynomial p = primitive_part(a);
    if (p.degree() == 0) return IntPolynomial{1};
    IntPolynomial g = poly_gcd(p, p.derivative());
    return primitive_part(divexact(p, g));
}

Int resultant(const IntPolynomial& f, const IntPolynomial& g)
{
    if (f.is_zero() || g.is_zero()) raise(errc::invalid_input, "resultant of zero polynomial");
    const int m = f.degree();
    const int n = g.degree();
    if (m == 0 && n == 0) return 1;
    if (m == 0) return pow_ui(f.coeffs[0], n);
    if (n == 0) return pow_ui(g.coeffs[0], m);
    IntMatrix s(m + n, m + n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s.at(i, i + j) = f.coeffs[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s.at(n + i, i + j) = g.coeffs[n - j];
    return det(s);
}

Int discriminant(const IntPolynomial& f)
{
    int n = f.degree();
    if (n < 1) raise(errc::invalid_input, "discriminant needs degree >= 1");
    if (n == 1) return 1;
    Int r = resultant(f, f.derivative());
    Int d = divexact(r, f.leading());
    if (((static_cast<long>(n) * (n - 1)) / 2) % 2 != 0) d = -d;
    return d;
}

// --- Sturm chains ---------------------------------------------------------

namespace {

// Chain elements may only be rescaled by positive constants, otherwise the
// sign variations are corrupted.
IntPolynomial scale_to_int_keep_sign(const RatPoly& a)
{
    if (a.is_zero()) return {};
    Int den = 1;
    for (const Rat& c : a.coeffs) den = lcm(den, c.get_den());
    std::vector<Int> ints(a.coeffs.size());
    for (std::size_t i = 0; i < ints.size(); ++i) {
        Rat v = a.coeffs[i] * den;
        ints[i] = v.get_num();
    }
    IntPolynomial p(std::move(ints));
    Int cont = content(p);
    std::vector<Int> out(p.coeffs.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = divexact(p.coeffs[i], cont);
    return IntPolynomial(std::move(out));
}

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& h)
{
    std::vector<IntPolynomial> chain;
    chain.push_back(scale_to_int_keep_sign(RatPoly(h)));
    IntPolynomial d = h.derivative();
    if (!d.is_zero()) chain.push_back(scale_to_int_keep_sign(RatPoly(d)));
    while (chain.back().degree() > 0) {
        RatPoly r = rat_poly_mod(RatPoly(chain[chain.size() - 2]), RatPoly(chain.back()));
        if (r.is_zero()) break;
        chain.push_back(scale_to_int_keep_sign(Rat(-1) * r));
    }
    return chain;
}

int sign_at(const IntPolynomial& p, const Rat& x)
{
    if (p.is_zero()) return 0;
    // homogeneous evaluation: sign of sum a_i num^i den^{deg-i}
    const Int& num = x.get_num();
    const Int& den = x.get_den();
    Int acc = 0;
    Int dpow = 1;
    std::vector<Int> npows(p.coeffs.size());
    Int np = 1;
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        npows[i] = np;
        np *= num;
    }
    for (std::size_t i = p.coeffs.size(); i-- > 0;) {
        acc += p.coeffs[i] * npows[i] * dpow;
        dpow *= den;
    }
    return sgn(acc);
}

// sign of u + v*sqrt(A) with A >= 0
int quadratic_sign(const Int& u, const Int& v, const Int& A)
{
    if (v == 0) return sgn(u);
    if (u == 0) return sgn(v);
    if (sgn(u) == sgn(v)) return sgn(u);
    Int u2 = u * u;
    Int v2A = v * v * A;
    int c = cmp(u2, v2A);
    if (c == 0) return 0;
    return c > 0 ? sgn(u) : sgn(v);
}

// sign of p at sign_root * sqrt(A)
int sign_at_sqrt(const IntPolynomial& p, const Int& A, int sign_root)
{
    // split into even and odd parts: p(x) = e(x^2) + x * o(x^2)
    Int u = 0, v = 0;
    Int apow = 1;
    for (std::size_t i = 0; i < p.coeffs.size(); i += 2) {
        u += p.coeffs[i] * apow;
        apow *= A;
    }
    apow = 1;
    for (std::size_t i = 1; i < p.coeffs.size(); i += 2) {
        v += p.coeffs[i] * apow;
        apow *= A;
    }
    if (sign_root < 0) v = -v;
    return quadratic_sign(u, v, A);
}

long variations(const std::vector<int>& signs)
{
    long var = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

} // namespace

long sturm_count(const IntPolynomial& h, const Rat& lo, const Rat& hi)
{
    if (h.is_zero()) raise(errc::invalid_input, "sturm_count of zero polynomial");
    if (h.degree() == 0) return 0;
    if (lo >= hi) return 0;
    auto chain = sturm_chain(h);
    std::vector<int> slo, shi;
    slo.reserve(chain.size());
    shi.reserve(chain.size());
    for (const auto& p : chain) {
        slo.push_back(sign_at(p, lo));
        shi.push_back(sign_at(p, hi));
    }
    return variations(slo) - variations(shi);
}

long sturm_count_sqrt_interval(const IntPolynomial& h, const Int& A)
{
    if (h.is_zero()) raise(errc::invalid_input, "sturm_count of zero polynomial");
    if (sgn(A) <= 0) raise(errc::invalid_input, "interval radius must be positive");
    if (h.degree() == 0) return 0;
    auto chain = sturm_chain(h);
    std::vector<int> slo, shi;
    slo.reserve(chain.size());
    shi.reserve(chain.size());
    for (const auto& p : chain) {
        slo.push_back(sign_at_sqrt(p, A, -1));
        shi.push_back(sign_at_sqrt(p, A, +1));
    }
    return variations(slo) - variations(shi);
}

std::vector<Int> power_sums(const IntPolynomial& f, std::size_t count)
{
    if (!f.is_monic()) raise(errc::invalid_input, "power_sums needs a monic polynomial");
    const int n = f.degree();
    std::vector<Int> p(count);
    if (count == 0) return p;
    p[0] = n;
    for (std::size_t j = 1; j < count; ++j) {
        // p_j + c_{n-1} p_{j-1} + ... + c_{n-j+1} p_1 + j*c_{n-j} = 0  (j <= n)
        // p_j + c_{n-1} p_{j-1} + ... + c_0 p_{j-n} = 0                (j > n)
        Int acc = 0;
        for (std::size_t i = 1; i < j; ++i) {
            long ci = n - static_cast<long>(i);
            if (ci >= 0) acc += f.coeffs[ci] * p[j - i];
        }
        if (j <= static_cast<std::size_t>(n)) acc += Int(j) * f.coeffs[n - j];
        p[j] = -acc;
    }
    return p;
}

// --- RatPoly ---------------------------------------------------------------

RatPoly::RatPoly(const IntPolynomial& p)
{
    coeffs.reserve(p.coeffs.size());
    for (const Int& c : p.coeffs) coeffs.emplace_back(c);
    normalize();
}

RatPoly operator+(const RatPoly& a, const RatPoly& b)
{
    std::vector<Rat> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b)
{
    std::vector<Rat> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> c(a.coeffs.size() + b.coeffs.size() - 1);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    return RatPoly(std::move(c));
}

RatPoly operator*(const Rat& c, const RatPoly& a)
{
    std::vector<Rat> r(a.coeffs.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = c * a.coeffs[i];
    return RatPoly(std::move(r));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b)
{
    if (b.is_zero()) raise(errc::invalid_input, "division by zero polynomial");
    std::vector<Rat> rem = a.coeffs;
    std::vector<Rat> quo;
    int db = b.degree();
    if (a.degree() >= db) quo.assign(a.degree() - db + 1, Rat(0));
    const Rat& lead = b.coeffs.back();
    for (int i = a.degree(); i >= db; --i) {
        Rat q = rem[i] / lead;
        if (q == 0) continue;
        quo[i - db] = q;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs[j];
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly rat_poly_mod(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

RatPoly rat_poly_gcd(RatPoly a, RatPoly b)
{
    while (!b.is_zero()) {
        RatPoly r = rat_poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    Rat inv = 1 / a.coeffs.back();
    return inv * a;
}

IntPolynomial primitive_of(const RatPoly& a, Rat* scale)
{
    if (a.is_zero()) {
        if (scale) *scale = 0;
        return {};
    }
    Int den = 1;
    for (const Rat& c : a.coeffs) den = lcm(den, c.get_den());
    std::vector<Int> ints(a.coeffs.size());
    for (std::size_t i = 0; i < ints.size(); ++i) {
        Rat v = a.coeffs[i] * den;
        ints[i] = v.get_num();
    }
    IntPolynomial p(std::move(ints));
    Int cont = content(p);
    if (p.leading() < 0) cont = -cont;
    std::vector<Int> out(p.coeffs.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = divexact(p.coeffs[i], cont);
    if (scale) *scale = Rat(cont) / den;
    return IntPolynomial(std::move(out));
}

RatPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys)
{
    if (xs.size() != ys.size()) raise(errc::invalid_input, "interpolation size mismatch");
    RatPoly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        RatPoly li({Rat(1)});
        Rat denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            li = li * RatPoly({-xs[j], Rat(1)});
            denom *= xs[i] - xs[j];
        }
        acc = acc + (ys[i] / denom) * li;
    }
    return acc;
}

} // namespace avf
