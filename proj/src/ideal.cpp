#include "avf/ideal.hpp"

#include "avf/errors.hpp"
#include "avf/finite_field.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace avf {

// --- AbelianGroupStructure ---------------------------------------------------

AbelianGroupStructure AbelianGroupStructure::from_snf(const std::vector<Int>& diag)
{
    AbelianGroupStructure g;
    for (const Int& d : diag) {
        if (d == 0) raise(errc::invalid_input, "zero invariant factor");
        Int a = abs(d);
        if (a > 1) g.invariants.push_back(a);
    }
    for (std::size_t i = 0; i + 1 < g.invariants.size(); ++i)
        if (g.invariants[i + 1] % g.invariants[i] != 0)
            raise(errc::invalid_input, "invariant factors do not form a divisibility chain");
    return g;
}

AbelianGroupStructure AbelianGroupStructure::from_cyclic_orders(std::vector<Int> orders)
{
    // collect prime powers and stack the largest together
    std::map<Int, std::vector<unsigned>> by_prime;
    for (const Int& o : orders) {
        if (o <= 0) raise(errc::invalid_input, "cyclic order must be positive");
        if (o == 1) continue;
        for (auto& [p, e] : factor_integer(o)) by_prime[p].push_back(e);
    }
    std::size_t cols = 0;
    for (auto& [p, es] : by_prime) {
        std::sort(es.begin(), es.end(), std::greater<unsigned>());
        cols = std::max(cols, es.size());
    }
    AbelianGroupStructure g;
    g.invariants.assign(cols, Int(1));
    for (auto& [p, es] : by_prime)
        for (std::size_t i = 0; i < es.size(); ++i)
            g.invariants[cols - 1 - i] *= pow_ui(p, es[i]);
    return g;
}

Int AbelianGroupStructure::order() const
{
    Int o = 1;
    for (const Int& d : invariants) o *= d;
    return o;
}

AbelianGroupStructure AbelianGroupStructure::power(unsigned d) const
{
    AbelianGroupStructure g;
    for (const Int& inv : invariants)
        for (unsigned i = 0; i < d; ++i) g.invariants.push_back(inv);
    return g;
}

bool AbelianGroupStructure::divides(const AbelianGroupStructure& larger) const
{
    if (invariants.size() > larger.invariants.size()) return false;
    std::size_t shift = larger.invariants.size() - invariants.size();
    for (std::size_t i = 0; i < invariants.size(); ++i)
        if (larger.invariants[shift + i] % invariants[i] != 0) return false;
    return true;
}

std::string AbelianGroupStructure::to_string() const
{
    if (invariants.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < invariants.size(); ++i) {
        if (i) os << " x ";
        os << "Z/" << invariants[i].get_str();
    }
    return os.str();
}

// --- FractionalIdeal ---------------------------------------------------------

FractionalIdeal::FractionalIdeal(NumberFieldOrder order, QLattice lat) : order_(std::move(order)), lat_(std::move(lat))
{
    const unsigned n = order_.degree();
    if (!lat_.full_rank() || lat_.dim() != n) raise(errc::zero_ideal, "ideal lattice must have full rank");
    // module closure check: w_i * b_j in I for every order basis element w_i
    RatMatrix b = lat_.basis();
    for (unsigned i = 0; i < n; ++i) {
        FieldElt wi = order_.basis_elt(i);
        for (unsigned j = 0; j < n; ++j) {
            std::vector<Rat> bj(n);
            for (unsigned k = 0; k < n; ++k) bj[k] = b.at(j, k);
            FieldElt prod = order_.field().mul(wi, order_.from_order_coords(bj));
            if (!lat_.contains(order_.to_order_coords(prod)))
                raise(errc::invalid_input, "lattice is not a module over the order");
        }
    }
}

FractionalIdeal FractionalIdeal::unit_ideal(const NumberFieldOrder& O)
{
    return FractionalIdeal(O, QLattice::standard(O.degree()));
}

FractionalIdeal FractionalIdeal::principal(const NumberFieldOrder& O, const FieldElt& s)
{
    if (O.field().is_zero(s)) raise(errc::zero_ideal, "principal ideal of zero");
    std::vector<std::vector<Rat>> rows;
    for (unsigned i = 0; i < O.degree(); ++i)
        rows.push_back(O.to_order_coords(O.field().mul(s, O.basis_elt(i))));
    return FractionalIdeal(O, QLattice::from_rows(rows));
}

FractionalIdeal FractionalIdeal::from_generators(const NumberFieldOrder& O, const std::vector<FieldElt>& gens)
{
    std::vector<std::vector<Rat>> rows;
    for (const FieldElt& g : gens) {
        if (O.field().is_zero(g)) continue;
        for (unsigned i = 0; i < O.degree(); ++i)
            rows.push_back(O.to_order_coords(O.field().mul(g, O.basis_elt(i))));
    }
    if (rows.empty()) raise(errc::zero_ideal, "no nonzero generators");
    return FractionalIdeal(O, QLattice::from_rows(rows));
}

FractionalIdeal FractionalIdeal::from_power_lattice(const NumberFieldOrder& O, const QLattice& power_lat)
{
    RatMatrix binv = inverse(O.lattice().basis());
    return FractionalIdeal(O, lattice_transform(power_lat, binv));
}

QLattice FractionalIdeal::power_lattice() const { return lattice_transform(lat_, order_.lattice().basis()); }

bool FractionalIdeal::contains(const FieldElt& a) const { return lat_.contains(order_.to_order_coords(a)); }

Rat FractionalIdeal::norm() const
{
    return lattice_index(lat_, QLattice::standard(order_.degree()));
}

namespace {

void require_same_order(const FractionalIdeal& a, const FractionalIdeal& b)
{
    if (!(a.order() == b.order())) raise(errc::invalid_input, "ideals over different orders");
}

} // namespace

FractionalIdeal ideal_sum(const FractionalIdeal& a, const FractionalIdeal& b)
{
    require_same_order(a, b);
    return FractionalIdeal(a.order(), lattice_sum(a.lattice(), b.lattice()));
}

FractionalIdeal ideal_product(const FractionalIdeal& a, const FractionalIdeal& b)
{
    require_same_order(a, b);
    const NumberFieldOrder& O = a.order();
    const unsigned n = O.degree();
    RatMatrix ba = a.lattice().basis();
    RatMatrix bb = b.lattice().basis();
    std::vector<std::vector<Rat>> rows;
    rows.reserve(static_cast<std::size_t>(n) * n);
    for (unsigned i = 0; i < n; ++i) {
        std::vector<Rat> ai(n);
        for (unsigned k = 0; k < n; ++k) ai[k] = ba.at(i, k);
        FieldElt xa = O.from_order_coords(ai);
        for (unsigned j = 0; j < n; ++j) {
            std::vector<Rat> bj(n);
            for (unsigned k = 0; k < n; ++k) bj[k] = bb.at(j, k);
            rows.push_back(O.to_order_coords(O.field().mul(xa, O.from_order_coords(bj))));
        }
    }
    return FractionalIdeal(O, QLattice::from_rows(rows));
}

FractionalIdeal ideal_quotient(const FractionalIdeal& a, const FractionalIdeal& b)
{
    require_same_order(a, b);
    const NumberFieldOrder& O = a.order();
    const NumberField& K = O.field();
    const unsigned n = O.degree();
    QLattice pa = a.power_lattice();
    RatMatrix bb = b.power_lattice().basis();
    QLattice out;
    bool first = true;
    for (unsigned j = 0; j < n; ++j) {
        FieldElt c(n);
        for (unsigned k = 0; k < n; ++k) c[k] = bb.at(j, k);
        QLattice lj = lattice_transform(pa, inverse(K.mul_matrix(c)));
        out = first ? lj : lattice_intersect(out, lj);
        first = false;
    }
    return FractionalIdeal::from_power_lattice(O, out);
}

FractionalIdeal ideal_pow(const FractionalIdeal& a, unsigned e)
{
    FractionalIdeal r = FractionalIdeal::unit_ideal(a.order());
    for (unsigned i = 0; i < e; ++i) r = ideal_product(r, a);
    return r;
}

bool is_invertible(const FractionalIdeal& I)
{
    FractionalIdeal inv = ideal_quotient(FractionalIdeal::unit_ideal(I.order()), I);
    return ideal_product(I, inv) == FractionalIdeal::unit_ideal(I.order());
}

FractionalIdeal conductor(const NumberFieldOrder& O, const NumberFieldOrder& maximal)
{
    // (O : O_K) computed in power coordinates
    const NumberField& K = O.field();
    const unsigned n = O.degree();
    RatMatrix mb = maximal.lattice().basis();
    QLattice out;
    bool first = true;
    for (unsigned j = 0; j < n; ++j) {
        FieldElt c(n);
        for (unsigned k = 0; k < n; ++k) c[k] = mb.at(j, k);
        QLattice lj = lattice_transform(O.lattice(), inverse(K.mul_matrix(c)));
        out = first ? lj : lattice_intersect(out, lj);
        first = false;
    }
    return FractionalIdeal::from_power_lattice(O, out);
}

FractionalIdeal conductor(const NumberFieldOrder& O) { return conductor(O, maximal_order(O.field_ptr())); }

bool is_coprime_to_conductor(const FieldElt& s, const NumberFieldOrder& O)
{
    if (O.field().is_zero(s)) raise(errc::zero_element, "zero element");
    if (!O.contains(s)) raise(errc::invalid_input, "element does not lie in the order");
    FractionalIdeal f = conductor(O);
    FractionalIdeal sum = ideal_sum(FractionalIdeal::principal(O, s), f);
    return sum == FractionalIdeal::unit_ideal(O);
}

FractionalIdeal trace_dual(const NumberFieldOrder& O)
{
    const NumberField& K = O.field();
    const unsigned n = O.degree();
    RatMatrix gram(n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i; j < n; ++j) {
            Rat t = K.trace(K.mul(O.basis_elt(i), O.basis_elt(j)));
            gram.at(i, j) = t;
            gram.at(j, i) = t;
        }
    // dual basis rows in power coordinates: gram^{-1} * basis
    RatMatrix dual = inverse(gram) * O.lattice().basis();
    return FractionalIdeal::from_power_lattice(O, QLattice::from_rows(dual));
}

bool is_gorenstein(const NumberFieldOrder& O) { return is_invertible(trace_dual(O)); }

AbelianGroupStructure residue_structure(const NumberFieldOrder& O, const FieldElt& s)
{
    if (O.field().is_zero(s)) raise(errc::zero_element, "zero element");
    if (!O.contains(s)) raise(errc::invalid_input, "element does not lie in the order");
    const unsigned n = O.degree();
    RatMatrix m = O.mul_matrix_order(s);
    IntMatrix mi(n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            if (m.at(i, j).get_den() != 1) raise(errc::invalid_input, "internal: non-integral multiplication matrix");
            mi.at(i, j) = m.at(i, j).get_num();
        }
    auto diag = snf_invariants(mi);
    AbelianGroupStructure g = AbelianGroupStructure::from_snf(diag);
    Rat nm = abs(O.field().norm(s));
    if (Rat(g.order()) != nm) raise(errc::invalid_input, "internal: invariant product differs from the norm");
    return g;
}

AbelianGroupStructure quotient_structure(const FractionalIdeal& I)
{
    if (!I.is_integral()) raise(errc::invalid_input, "quotient needs an integral ideal");
    return AbelianGroupStructure::from_snf(snf_invariants(I.lattice().num));
}

AbelianGroupStructure residue_structure_crt(const NumberFieldOrder& O, const FieldElt& s)
{
    auto factors = factor_coprime_ideal(O, s);
    std::vector<Int> cyclic;
    for (const auto& f : factors) {
        FractionalIdeal pe = ideal_pow(f.prime, f.exponent);
        for (const Int& d : quotient_structure(pe).invariants) cyclic.push_back(d);
    }
    return AbelianGroupStructure::from_cyclic_orders(std::move(cyclic));
}

// --- Kummer-Dedekind factorization -------------------------------------------

namespace {

// characteristic polynomial of theta on the order basis (integer, monic)
IntPolynomial char_poly(const NumberFieldOrder& O, const FieldElt& theta)
{
    const unsigned n = O.degree();
    RatMatrix m = O.mul_matrix_order(theta);
    // det(x I - M) by interpolation at x = 0..n
    std::vector<Rat> xs, ys;
    for (unsigned c = 0; c <= n; ++c) {
        RatMatrix a(n, n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) a.at(i, j) = (i == j) ? Rat(Rat(c) - m.at(i, j)) : Rat(-m.at(i, j));
        xs.emplace_back(c);
        ys.push_back(rat_det(a));
    }
    RatPoly p = interpolate(xs, ys);
    std::vector<Int> out(p.coeffs.size());
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        if (p.coeffs[i].get_den() != 1) raise(errc::invalid_input, "internal: charpoly not integral");
        out[i] = p.coeffs[i].get_num();
    }
    return IntPolynomial(std::move(out));
}

// candidate generators of O ("theta search"), deterministic order
std::vector<FieldElt> generator_candidates(const NumberFieldOrder& O)
{
    const unsigned n = O.degree();
    std::vector<FieldElt> cands;
    for (unsigned i = 1; i < n; ++i) cands.push_back(O.basis_elt(i));
    cands.push_back(O.field().gen());
    for (unsigned i = 1; i < n; ++i)
        for (int c = 1; c <= 3; ++c)
            cands.push_back(O.field().add(O.basis_elt(i), O.field().from_rat(Rat(c))));
    for (unsigned i = 1; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
            cands.push_back(O.field().add(O.basis_elt(i), O.basis_elt(j)));
            cands.push_back(O.field().sub(O.basis_elt(i), O.basis_elt(j)));
        }
    // small combinations
    SplitMix64 rng(0x5eedULL);
    for (int t = 0; t < 64; ++t) {
        FieldElt acc = O.field().zero();
        for (unsigned i = 1; i < n; ++i) {
            int c = static_cast<int>(rng.below(7)) - 3;
            acc = O.field().add(acc, O.field().mul_scalar(Rat(c), O.basis_elt(i)));
        }
        if (!O.field().is_zero(acc)) cands.push_back(acc);
    }
    return cands;
}

struct MaximalPrime {
    FractionalIdeal prime; // prime of O_K above p
    unsigned residue_deg;
};

// Kummer-Dedekind split of p O_K using a generator theta with p not dividing
// [O_K : Z[theta]]; BadPrime when the search fails.
std::vector<MaximalPrime> split_prime_in_maximal(const NumberFieldOrder& OK, const Int& p)
{
    const unsigned n = OK.degree();
    Int disc_ok = OK.discriminant();
    FieldElt theta;
    IntPolynomial ch;
    bool found = false;
    for (const FieldElt& cand : generator_candidates(OK)) {
        IntPolynomial c = char_poly(OK, cand);
        if (poly_gcd(c, c.derivative()).degree() != 0) continue; // not primitive
        Int ratio = divexact(discriminant(c), disc_ok);
        Int index;
        if (!is_perfect_square(abs(ratio), &index)) raise(errc::invalid_input, "internal: bad index square");
        if (index % p != 0) {
            theta = cand;
            ch = c;
            found = true;
            break;
        }
    }
    if (!found)
        raise(errc::bad_prime,
              "no monogenic generator of the maximal order avoiding p = " + p.get_str() + " within the search budget");

    FFContext Fp = FFContext::prime_field(p);
    auto fac = ff_poly_factor(Fp, ffp_from_int_poly(Fp, ch.coeffs));
    std::vector<MaximalPrime> out;
    for (const auto& [gbar, e] : fac.factors) {
        // lift g and form p O_K + g(theta) O_K
        std::vector<Int> lift(gbar.size());
        for (std::size_t i = 0; i < gbar.size(); ++i) lift[i] = gbar[i][0];
        IntPolynomial g(std::move(lift));
        // evaluate g at theta
        FieldElt val = OK.field().zero();
        FieldElt pw = OK.field().one();
        for (int i = 0; i <= g.degree(); ++i) {
            val = OK.field().add(val, OK.field().mul_scalar(Rat(g.coeff(i)), pw));
            if (i < g.degree()) pw = OK.field().mul(pw, theta);
        }
        FieldElt pelt = OK.field().from_rat(Rat(p));
        out.push_back({FractionalIdeal::from_generators(OK, {pelt, val}), static_cast<unsigned>(ffp_degree(gbar))});
    }
    std::sort(out.begin(), out.end(), [](const MaximalPrime& a, const MaximalPrime& b) {
        if (a.prime.lattice().den != b.prime.lattice().den) return a.prime.lattice().den < b.prime.lattice().den;
        return compare(a.prime.lattice().num, b.prime.lattice().num) < 0;
    });
    return out;
}

} // namespace

bool is_prime_of_order(const NumberFieldOrder& O, const FractionalIdeal& I)
{
    if (!(I.order() == O)) raise(errc::invalid_input, "ideal belongs to a different order");
    if (!I.is_integral() || I == FractionalIdeal::unit_ideal(O)) return false;
    Rat nrm = I.norm();
    auto fac = factor_integer(nrm.get_num());
    if (fac.size() != 1) return false;
    const Int& p = fac[0].first;

    NumberFieldOrder OK = maximal_order(O.field_ptr());
    std::vector<FieldElt> gens;
    RatMatrix b = I.power_lattice().basis();
    for (std::size_t i = 0; i < b.rows; ++i) {
        FieldElt g(O.degree());
        for (unsigned j = 0; j < O.degree(); ++j) g[j] = b.at(i, j);
        gens.push_back(g);
    }
    FractionalIdeal ext = FractionalIdeal::from_generators(OK, gens);
    for (const auto& mp : split_prime_in_maximal(OK, p)) {
        if (!(mp.prime == ext)) continue;
        QLattice contracted = lattice_intersect(ext.power_lattice(), O.lattice());
        return FractionalIdeal::from_power_lattice(O, contracted) == I;
    }
    return false;
}

std::vector<PrimeIdealFactor> factor_coprime_ideal(const NumberFieldOrder& O, const FieldElt& s,
                                                   const FactorBudget& budget)
{
    if (O.field().is_zero(s)) raise(errc::zero_element, "zero element");
    if (!O.contains(s)) raise(errc::invalid_input, "element does not lie in the order");
    NumberFieldOrder OK = maximal_order(O.field_ptr());
    if (!is_coprime_to_conductor(s, O))
        raise(errc::not_coprime, "element is not coprime to the conductor");

    Rat nrm = abs(O.field().norm(s));
    Int N = nrm.get_num();
    std::vector<PrimeIdealFactor> out;
    if (N == 1) return out;

    FractionalIdeal s_ok = FractionalIdeal::principal(OK, s);
    FractionalIdeal unit_ok = FractionalIdeal::unit_ideal(OK);

    for (const auto& [p, e_n] : factor_integer(N, budget)) {
        auto primes = split_prime_in_maximal(OK, p);
        for (const auto& mp : primes) {
            // valuation of s at this prime by repeated exact division
            FractionalIdeal inv = ideal_quotient(unit_ok, mp.prime);
            unsigned v = 0;
            FractionalIdeal cur = s_ok;
            while (cur.lattice().den == 1 && mp.prime.lattice().contains(cur.lattice())) {
                cur = ideal_product(cur, inv);
                ++v;
            }
            if (v == 0) continue;
            // contract to O
            QLattice contracted = lattice_intersect(mp.prime.power_lattice(), O.lattice());
            FractionalIdeal pr = FractionalIdeal::from_power_lattice(O, contracted);
            out.push_back({pr, v, p, mp.residue_deg});
        }
    }

    std::sort(out.begin(), out.end(), [](const PrimeIdealFactor& a, const PrimeIdealFactor& b) {
        if (a.residue_char != b.residue_char) return a.residue_char < b.residue_char;
        Rat na = a.prime.norm(), nb = b.prime.norm();
        if (na != nb) return na < nb;
        return compare(a.prime.lattice().num, b.prime.lattice().num) < 0;
    });

    // double-entry check: the product must reproduce sO exactly
    FractionalIdeal prod = FractionalIdeal::unit_ideal(O);
    for (const auto& f : out) prod = ideal_product(prod, ideal_pow(f.prime, f.exponent));
    if (!(prod == FractionalIdeal::principal(O, s)))
        raise(errc::invalid_input, "internal: prime factorization does not multiply back to sO");
    return out;
}

} // namespace avf
