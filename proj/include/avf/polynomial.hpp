#pragma once

#include "avf/integer.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace avf {

// Integer polynomial, low-degree-first coefficients, no trailing zeros.
// Empty coefficient vector is the zero polynomial (degree -1).
struct IntPolynomial {
    std::vector<Int> coeffs;

    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<Int> c) : coeffs(c) { normalize(); }
    explicit IntPolynomial(std::vector<Int> c) : coeffs(std::move(c)) { normalize(); }

    void normalize()
    {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    const Int& leading() const { return coeffs.back(); }
    Int coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : Int(0); }
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;

    IntPolynomial derivative() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
    std::string to_string() const; // human-readable, variable t
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const Int& c, const IntPolynomial& a);
IntPolynomial operator-(const IntPolynomial& a);

// Exact division; requires the remainder to vanish.
IntPolynomial divexact(const IntPolynomial& a, const IntPolynomial& b);
// True (and quotient stored) iff b divides a over the integers.
bool divides(const IntPolynomial& b, const IntPolynomial& a, IntPolynomial* quotient = nullptr);

IntPolynomial pow(const IntPolynomial& a, unsigned e);

Int content(const IntPolynomial& a); // gcd of coefficients, >= 0
IntPolynomial primitive_part(const IntPolynomial& a); // positive leading coefficient

// gcd over Z, primitive with positive leading coefficient.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// Squarefree part a / gcd(a, a'), primitive, positive leading coefficient.
IntPolynomial squarefree_part(const IntPolynomial& a);

// Res(f, g) with the Sylvester convention Res(f,g) = lc(f)^{deg g} prod g(alpha_i).
Int resultant(const IntPolynomial& f, const IntPolynomial& g);

Int discriminant(const IntPolynomial& f); // (-1)^{n(n-1)/2} Res(f,f') / lc(f)

// Number of real roots of squarefree h in the half-open interval (lo, hi].
long sturm_count(const IntPolynomial& h, const Rat& lo, const Rat& hi);

// Number of real roots of squarefree h in (-sqrt(A), sqrt(A)], A > 0 an
// integer; the chain signs at +-sqrt(A) are decided exactly by quadratic
// sign analysis, so A need not be a perfect square.
long sturm_count_sqrt_interval(const IntPolynomial& h, const Int& A);

// Power sums p_j = sum of (roots of monic f)^j for j = 0..count-1 (Newton).
std::vector<Int> power_sums(const IntPolynomial& monic_f, std::size_t count);

// Rational polynomial helper used for field arithmetic and Sturm chains.
struct RatPoly {
    std::vector<Rat> coeffs; // low-first, no trailing zeros

    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> c) : coeffs(std::move(c)) { normalize(); }
    explicit RatPoly(const IntPolynomial& p);

    void normalize()
    {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    Rat coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : Rat(0); }

    friend bool operator==(const RatPoly&, const RatPoly&) = default;
};

RatPoly operator+(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const Rat& c, const RatPoly& a);

// quotient/remainder with nonzero divisor
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly rat_poly_mod(const RatPoly& a, const RatPoly& b);

// Monic gcd.
RatPoly rat_poly_gcd(RatPoly a, RatPoly b);

// Clear denominators and content: primitive integer polynomial with the same
// roots and the same leading sign.
IntPolynomial primitive_of(const RatPoly& a, Rat* scale = nullptr);

// Lagrange interpolation through (x_i, y_i); the x_i must be distinct.
RatPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

} // namespace avf
