#include "avf/number_field.hpp"

#include "avf/errors.hpp"
#include "avf/zz_factor.hpp"

namespace avf {

namespace {

RatPoly to_poly(const NumberField::Elt& a)
{
    return RatPoly(std::vector<Rat>(a.begin(), a.end()));
}

NumberField::Elt from_poly(const RatPoly& p, unsigned deg)
{
    NumberField::Elt e(deg, Rat(0));
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) e[i] = p.coeffs[i];
    return e;
}

} // namespace

NumberField::NumberField(IntPolynomial min_poly) : m_(std::move(min_poly))
{
    if (m_.degree() < 1 || !m_.is_monic()) raise(errc::invalid_input, "minimal polynomial must be monic, degree >= 1");
    if (!zz_is_irreducible(m_) && m_.degree() > 1)
        raise(errc::invalid_input, "minimal polynomial is reducible: " + m_.to_string());
    deg_ = static_cast<unsigned>(m_.degree());
    power_sums_ = power_sums(m_, 2 * deg_);
}

NumberField::Elt NumberField::one() const
{
    Elt e = zero();
    e[0] = 1;
    return e;
}

NumberField::Elt NumberField::gen() const
{
    Elt e = zero();
    if (deg_ == 1) {
        // t = -m_0 in a degree-1 field
        e[0] = -Rat(m_.coeff(0));
    } else {
        e[1] = 1;
    }
    return e;
}

NumberField::Elt NumberField::from_rat(const Rat& c) const
{
    Elt e = zero();
    e[0] = c;
    return e;
}

NumberField::Elt NumberField::add(const Elt& a, const Elt& b) const
{
    Elt c(deg_);
    for (unsigned i = 0; i < deg_; ++i) c[i] = a[i] + b[i];
    return c;
}

NumberField::Elt NumberField::sub(const Elt& a, const Elt& b) const
{
    Elt c(deg_);
    for (unsigned i = 0; i < deg_; ++i) c[i] = a[i] - b[i];
    return c;
}

NumberField::Elt NumberField::neg(const Elt& a) const
{
    Elt c(deg_);
    for (unsigned i = 0; i < deg_; ++i) c[i] = -a[i];
    return c;
}

NumberField::Elt NumberField::mul(const Elt& a, const Elt& b) const
{
    RatPoly prod = to_poly(a) * to_poly(b);
    RatPoly red = rat_poly_mod(prod, RatPoly(m_));
    return from_poly(red, deg_);
}

NumberField::Elt NumberField::mul_scalar(const Rat& c, const Elt& a) const
{
    Elt r(deg_);
    for (unsigned i = 0; i < deg_; ++i) r[i] = c * a[i];
    return r;
}

bool NumberField::is_zero(const Elt& a) const
{
    for (const Rat& c : a)
        if (c != 0) return false;
    return true;
}

NumberField::Elt NumberField::inv(const Elt& a) const
{
    if (is_zero(a)) raise(errc::zero_element, "inverse of zero");
    // xgcd(a, m) over Q[t]
    RatPoly r0 = RatPoly(m_), r1 = to_poly(a);
    RatPoly s0, s1({Rat(1)});
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        RatPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd = nonzero constant (m irreducible, a != 0)
    if (r0.degree() != 0) raise(errc::invalid_input, "internal: non-unit gcd in field inverse");
    Rat scale = 1 / r0.coeffs[0];
    return from_poly(scale * s0, deg_);
}

NumberField::Elt NumberField::pow(const Elt& a, const Int& e) const
{
    Elt base = a;
    Int ee = e;
    if (sgn(ee) < 0) {
        base = inv(base);
        ee = -ee;
    }
    Elt r = one();
    while (ee != 0) {
        if (mpz_odd_p(ee.get_mpz_t())) r = mul(r, base);
        ee >>= 1;
        if (ee != 0) base = mul(base, base);
    }
    return r;
}

Rat NumberField::trace(const Elt& a) const
{
    Rat t = 0;
    for (unsigned i = 0; i < deg_; ++i) t += a[i] * power_sums_[i];
    return t;
}

RatMatrix NumberField::mul_matrix(const Elt& a) const
{
    RatMatrix m(deg_, deg_);
    Elt cur = a;
    for (unsigned i = 0; i < deg_; ++i) {
        for (unsigned j = 0; j < deg_; ++j) m.at(i, j) = cur[j];
        if (i + 1 < deg_) cur = mul(cur, gen());
    }
    return m;
}

Rat NumberField::norm(const Elt& a) const { return rat_det(mul_matrix(a)); }

Rat NumberField::norm_resultant(const Elt& a) const
{
    RatPoly ap = to_poly(a);
    if (ap.is_zero()) return 0;
    if (ap.degree() == 0) {
        Rat c = ap.coeffs[0];
        Rat r = 1;
        for (unsigned i = 0; i < deg_; ++i) r *= c;
        return r;
    }
    Int den = 1;
    for (const Rat& c : ap.coeffs) den = lcm(den, c.get_den());
    std::vector<Int> scaled(ap.coeffs.size());
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        Rat v = ap.coeffs[i] * den;
        scaled[i] = v.get_num();
    }
    Int res = resultant(m_, IntPolynomial(std::move(scaled)));
    return Rat(res) / pow_ui(den, deg_);
}

NumberFieldPtr make_number_field(const IntPolynomial& min_poly)
{
    return std::make_shared<const NumberField>(min_poly);
}

} // namespace avf
