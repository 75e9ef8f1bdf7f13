#include "avf/oracle_ec.hpp"

#include "avf/errors.hpp"
#include "avf/integer_factor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace avf {

namespace {

using El = SmallField::El;

struct Point {
    El x = 0, y = 0;
    bool infinity = true;
};

// affine group law for a general Weierstrass model; valid in every characteristic
struct CurveOps {
    const SmallField& F;
    El a1, a2, a3, a4, a6;

    bool on_curve(El x, El y) const
    {
        El lhs = F.add(F.mul(y, y), F.add(F.mul(F.mul(a1, x), y), F.mul(a3, y)));
        El rhs = F.add(F.add(F.mul(F.mul(x, x), x), F.mul(a2, F.mul(x, x))), F.add(F.mul(a4, x), a6));
        return lhs == rhs;
    }

    Point negate(const Point& P) const
    {
        if (P.infinity) return P;
        return {P.x, F.neg(F.add(P.y, F.add(F.mul(a1, P.x), a3))), false};
    }

    Point add(const Point& P, const Point& Q) const
    {
        if (P.infinity) return Q;
        if (Q.infinity) return P;
        if (P.x == Q.x) {
            // either inverse points or a doubling
            El neg_qy = F.neg(F.add(Q.y, F.add(F.mul(a1, Q.x), a3)));
            if (P.y == neg_qy) return {};
        }
        El lambda;
        if (P.x != Q.x) {
            lambda = F.div(F.sub(Q.y, P.y), F.sub(Q.x, P.x));
        } else {
            // (3x^2 + 2 a2 x + a4 - a1 y) / (2y + a1 x + a3)
            El num = F.add(F.sub(F.add(F.mul(F.from_uint(3), F.mul(P.x, P.x)),
                                       F.mul(F.from_uint(2), F.mul(a2, P.x))),
                                 F.mul(a1, P.y)),
                           a4);
            El den = F.add(F.mul(F.from_uint(2), P.y), F.add(F.mul(a1, P.x), a3));
            lambda = F.div(num, den);
        }
        El x3 = F.sub(F.sub(F.sub(F.add(F.mul(lambda, lambda), F.mul(a1, lambda)), a2), P.x), Q.x);
        El y3 = F.sub(F.sub(F.mul(lambda, F.sub(P.x, x3)), P.y), F.add(F.mul(a1, x3), a3));
        return {x3, y3, false};
    }

    Point mul(Point P, std::uint64_t k) const
    {
        Point R;
        while (k != 0) {
            if (k & 1) R = add(R, P);
            k >>= 1;
            if (k != 0) P = add(P, P);
        }
        return R;
    }
};

// b2..b8 discriminant of the general Weierstrass model, computed in the field
bool is_singular(const SmallField& F, const std::array<El, 5>& a)
{
    El a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a6 = a[4];
    El b2 = F.add(F.mul(a1, a1), F.mul(F.from_uint(4), a2));
    El b4 = F.add(F.mul(F.from_uint(2), a4), F.mul(a1, a3));
    El b6 = F.add(F.mul(a3, a3), F.mul(F.from_uint(4), a6));
    El b8 = F.add(F.sub(F.add(F.mul(F.mul(a1, a1), a6), F.mul(F.from_uint(4), F.mul(a2, a6))),
                        F.mul(a1, F.mul(a3, a4))),
                  F.sub(F.mul(a2, F.mul(a3, a3)), F.mul(a4, a4)));
    El d = F.sub(F.sub(F.mul(F.neg(F.mul(b2, b2)), b8), F.mul(F.from_uint(8), F.mul(F.mul(b4, b4), b4))),
                 F.mul(F.from_uint(27), F.mul(b6, b6)));
    d = F.add(d, F.mul(F.from_uint(9), F.mul(b2, F.mul(b4, b6))));
    return d == 0;
}

std::vector<Point> enumerate_points(const SmallField& F, const CurveOps& ops)
{
    std::vector<Point> pts;
    pts.push_back({}); // infinity
    for (El x = 0; x < F.q(); ++x) {
        // y^2 + h y = f with h = a1 x + a3, f = x^3 + a2 x^2 + a4 x + a6
        El h = F.add(F.mul(ops.a1, x), ops.a3);
        El f = F.add(F.add(F.mul(F.mul(x, x), x), F.mul(ops.a2, F.mul(x, x))), F.add(F.mul(ops.a4, x), ops.a6));
        if (F.p() == 2) {
            if (h == 0) {
                pts.push_back({x, F.frob_sqrt(f), false});
            } else {
                // y = h w: w^2 + w = f / h^2
                El c = F.div(f, F.mul(h, h));
                El w;
                if (F.artin_schreier_solve(c, &w)) {
                    pts.push_back({x, F.mul(h, w), false});
                    pts.push_back({x, F.mul(h, F.add(w, F.one())), false});
                }
            }
        } else {
            // complete the square: (2y + h)^2 = h^2 + 4f
            El disc = F.add(F.mul(h, h), F.mul(F.from_uint(4), f));
            El r;
            if (disc == 0) {
                pts.push_back({x, F.div(F.neg(h), F.from_uint(2)), false});
            } else if (F.sqrt(disc, &r)) {
                El inv2 = F.inv(F.from_uint(2));
                pts.push_back({x, F.mul(F.sub(r, h), inv2), false});
                pts.push_back({x, F.mul(F.sub(F.neg(r), h), inv2), false});
            }
        }
    }
    return pts;
}

std::uint64_t point_order(const CurveOps& ops, const Point& P, std::uint64_t N,
                          const std::vector<std::pair<std::uint64_t, unsigned>>& nfac)
{
    std::uint64_t o = N;
    for (const auto& [ell, a] : nfac) {
        std::uint64_t cof = o;
        for (unsigned i = 0; i < a; ++i) cof /= ell;
        Point Q = ops.mul(P, cof);
        std::uint64_t part = 1;
        while (!Q.infinity) {
            Q = ops.mul(Q, ell);
            part *= ell;
        }
        std::uint64_t ea = 1;
        for (unsigned i = 0; i < a; ++i) ea *= ell;
        o = o / ea * part;
    }
    return o;
}

} // namespace

std::string EllipticCurve::to_string() const
{
    std::ostringstream os;
    os << "y^2";
    if (a[0]) os << " + " << a[0] << "*x*y";
    if (a[2]) os << " + " << a[2] << "*y";
    os << " = x^3";
    if (a[1]) os << " + " << a[1] << "*x^2";
    if (a[3]) os << " + " << a[3] << "*x";
    if (a[4]) os << " + " << a[4];
    os << " over GF(" << p << "^" << k << ")";
    return os.str();
}

ECGroup ec_enumerate(const EllipticCurve& E, unsigned n, std::uint64_t field_cap)
{
    if (n == 0) raise(errc::invalid_input, "n must be >= 1");
    auto base = shared_small_field(E.p, E.k, field_cap);
    if (is_singular(*base, E.a)) raise(errc::invalid_input, "singular Weierstrass model");

    auto Fp = shared_small_field(E.p, E.k * n, field_cap);
    const SmallField& F = *Fp;
    std::array<El, 5> a = E.a;
    if (n > 1 || E.k > 1) {
        auto emb = F.embed_from(*base);
        for (El& c : a) c = emb(c);
    }
    CurveOps ops{F, a[0], a[1], a[2], a[3], a[4]};

    std::vector<Point> pts = enumerate_points(F, ops);
    const std::uint64_t N = pts.size();

    std::vector<std::pair<std::uint64_t, unsigned>> nfac;
    for (const auto& [ell, a] : factor_integer(Int(static_cast<unsigned long>(N))))
        nfac.emplace_back(ell.get_ui(), a);

    // exponent = lcm of the point orders; a point whose order already
    // divides the running lcm is dismissed with a single scalar check
    std::uint64_t exponent = 1;
    for (const Point& P : pts) {
        if (P.infinity || exponent == N) continue;
        if (ops.mul(P, exponent).infinity) continue;
        std::uint64_t o = point_order(ops, P, N, nfac);
        exponent = o / std::gcd(o, exponent) * exponent;
    }
    std::uint64_t e1 = N / exponent;
    // the group is Z/e1 x Z/exponent with e1 | exponent
    if (e1 * exponent != N || exponent % e1 != 0 || (e1 > 1 && (F.q() - 1) % e1 != 0))
        raise(errc::invalid_input, "internal: impossible elliptic group shape");
    ECGroup out;
    out.count = static_cast<unsigned long>(N);
    out.structure = AbelianGroupStructure::from_snf({Int(static_cast<unsigned long>(e1)),
                                                     Int(static_cast<unsigned long>(exponent))});
    return out;
}

WeilPolynomial ec_frobenius(const EllipticCurve& E, std::uint64_t field_cap)
{
    ECGroup g = ec_enumerate(E, 1, field_cap);
    Int q = pow_ui(Int(E.p), E.k);
    Int a = q + 1 - g.count;
    try {
        return validate_weil(q, IntPolynomial{q, -a, 1});
    } catch (const Error& e) {
        raise(errc::invalid_input,
              std::string("internal: enumerated trace violates the Weil bound (enumeration bug): ") + e.what());
    }
}

namespace {

// Predictions depend only on the isogeny class (q, a) and n, not on the
// curve, so campaigns over whole coefficient spaces share them.  Pure data,
// memoized process-wide.
struct ClassPrediction {
    Int expected_count;
    std::vector<std::tuple<NumberFieldOrder, Int, AbelianGroupStructure>> orders; // order, index, invariants
};

const ClassPrediction& class_prediction(const WeilPolynomial& w, unsigned n, std::uint64_t index_cap)
{
    static std::mutex mu;
    static std::map<std::tuple<std::string, std::string, unsigned, std::uint64_t>, ClassPrediction> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(w.q.get_str(), w.poly.to_string(), n, index_cap);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    ClassPrediction data;
    data.expected_count = base_extension(w, n).point_count;
    NumberFieldOrder zpi = order_construct(w, OrderSpecZPi{});
    NumberFieldOrder omax = order_construct(w, OrderSpecMaximal{});
    for (NumberFieldOrder& O : intermediate_orders(zpi, omax, index_cap)) {
        Rat idx = lattice_index(O.lattice(), omax.lattice());
        StructureReport sr = rational_points_structure(w, O, n, StructureMode::gorenstein_case);
        data.orders.emplace_back(std::move(O), idx.get_num(), sr.invariants);
    }
    return cache.emplace(std::move(key), std::move(data)).first->second;
}

} // namespace

VerificationReport verify_ec(const EllipticCurve& E, unsigned n, std::uint64_t field_cap, std::uint64_t index_cap)
{
    VerificationReport rep;
    rep.kind = "ec";
    rep.curve = E.to_string();
    rep.n = n;

    WeilPolynomial w = ec_frobenius(E, field_cap);
    rep.weil_poly = w.poly;
    if (w.m.degree() == 1)
        raise(errc::out_of_theorem_scope,
              "pi = " + Int(-w.m.coeff(0)).get_str() + " is an integer: quaternionic module structure is out of scope");

    ECGroup oracle = ec_enumerate(E, n, field_cap);
    rep.oracle_count = oracle.count;
    rep.oracle_structure = oracle.structure;
    const ClassPrediction& data = class_prediction(w, n, index_cap);
    rep.expected_count = data.expected_count;
    rep.cardinality_ok = rep.oracle_count == rep.expected_count;

    for (const auto& [O, idx, invariants] : data.orders) {
        OrderPrediction pred{O, idx, true, "", invariants, invariants == oracle.structure};
        if (pred.matches_oracle) rep.match_set.push_back(rep.predictions.size());
        rep.predictions.push_back(std::move(pred));
    }
    rep.pass = rep.cardinality_ok && !rep.match_set.empty();
    return rep;
}

} // namespace avf
