#include "avf/order.hpp"

#include "avf/errors.hpp"
#include "avf/integer_factor.hpp"

#include <algorithm>
#include <functional>

namespace avf {

NumberFieldOrder::NumberFieldOrder(NumberFieldPtr field, QLattice basis_lattice)
    : field_(std::move(field)), lat_(std::move(basis_lattice))
{
    const unsigned n = field_->degree();
    if (!lat_.full_rank() || lat_.dim() != n) raise(errc::not_full_rank, "order basis must have full rank");
    if (!lat_.contains(field_->one())) raise(errc::not_a_ring, "lattice does not contain 1");
    basis_inv_ = inverse(lat_.basis());

    // structure constants; integrality is exactly multiplicative closure
    table_.assign(static_cast<std::size_t>(n) * n * n, Int(0));
    for (unsigned i = 0; i < n; ++i) {
        FieldElt wi = basis_elt(i);
        for (unsigned j = i; j < n; ++j) {
            FieldElt prod = field_->mul(wi, basis_elt(j));
            std::vector<Rat> coords = prod * basis_inv_;
            for (unsigned k = 0; k < n; ++k) {
                if (coords[k].get_den() != 1)
                    raise(errc::not_a_ring, "basis is not multiplicatively closed");
                table_[(i * n + j) * n + k] = coords[k].get_num();
                table_[(j * n + i) * n + k] = coords[k].get_num();
            }
        }
    }
}

FieldElt NumberFieldOrder::basis_elt(unsigned i) const
{
    const unsigned n = degree();
    FieldElt e(n);
    for (unsigned j = 0; j < n; ++j) e[j] = Rat(lat_.num.at(i, j)) / lat_.den;
    return e;
}

std::vector<Rat> NumberFieldOrder::to_order_coords(const FieldElt& a) const { return a * basis_inv_; }

FieldElt NumberFieldOrder::from_order_coords(const std::vector<Rat>& c) const { return c * lat_.basis(); }

RatMatrix NumberFieldOrder::mul_matrix_order(const FieldElt& a) const
{
    const unsigned n = degree();
    RatMatrix m(n, n);
    for (unsigned i = 0; i < n; ++i) {
        std::vector<Rat> row = to_order_coords(field_->mul(a, basis_elt(i)));
        for (unsigned j = 0; j < n; ++j) m.at(i, j) = row[j];
    }
    return m;
}

Int NumberFieldOrder::discriminant() const
{
    const unsigned n = degree();
    RatMatrix gram(n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i; j < n; ++j) {
            Rat t = field_->trace(field_->mul(basis_elt(i), basis_elt(j)));
            gram.at(i, j) = t;
            gram.at(j, i) = t;
        }
    Rat d = rat_det(gram);
    if (d.get_den() != 1) raise(errc::invalid_input, "internal: non-integral order discriminant");
    return d.get_num();
}

FieldElt frobenius_conjugate(const NumberField& K, const Int& q)
{
    return K.mul_scalar(Rat(q), K.inv(K.gen()));
}

NumberFieldOrder order_from_gens(NumberFieldPtr K, const std::vector<FieldElt>& gens)
{
    const unsigned n = K->degree();
    std::vector<FieldElt> seed;
    seed.push_back(K->one());
    for (const auto& g : gens) seed.push_back(g);
    QLattice lat = QLattice::from_rows(seed);

    // module closure under multiplication by the generators; monomials in the
    // generators stabilize iff they generate a ring lattice
    const int max_rounds = 64;
    for (int round = 0;; ++round) {
        if (round >= max_rounds) raise(errc::not_a_ring, "generated module does not stabilize");
        std::vector<FieldElt> next;
        RatMatrix basis = lat.basis();
        for (std::size_t i = 0; i < basis.rows; ++i) {
            FieldElt b(n);
            for (unsigned j = 0; j < n; ++j) b[j] = basis.at(i, j);
            next.push_back(b);
            for (const auto& g : gens) next.push_back(K->mul(b, g));
        }
        QLattice grown = QLattice::from_rows(next);
        if (grown == lat) break;
        lat = std::move(grown);
    }
    if (lat.rank() != n) raise(errc::not_full_rank, "generated ring has rank below the field degree");
    return NumberFieldOrder(std::move(K), std::move(lat));
}

NumberFieldOrder order_construct(const WeilPolynomial& w, const OrderSpec& spec)
{
    NumberFieldPtr K = make_number_field(w.m);
    if (std::holds_alternative<OrderSpecZPi>(spec)) {
        return order_from_gens(K, {K->gen()});
    }
    if (std::holds_alternative<OrderSpecZPiBar>(spec)) {
        return order_from_gens(K, {K->gen(), frobenius_conjugate(*K, w.q)});
    }
    if (std::holds_alternative<OrderSpecMaximal>(spec)) {
        return maximal_order(K);
    }
    return order_from_gens(K, std::get<OrderSpecGens>(spec).gens);
}

namespace {

// p-radical of O as a lattice in power coordinates: kernel of the iterated
// Frobenius on O/pO, lifted, plus p*O.
QLattice p_radical(const NumberFieldOrder& O, const Int& p)
{
    const unsigned n = O.degree();
    Int pe = p;
    while (pe < n) pe *= p;

    // matrix of x -> x^{p^e} on O/pO in the order basis
    IntMatrix frob(n, n);
    for (unsigned i = 0; i < n; ++i) {
        // exponentiate the i-th basis element in order coordinates mod p
        std::vector<Int> acc(n, Int(0));
        acc[i] = 1;
        // repeated squaring on exponent pe
        std::vector<Int> result(n, Int(0));
        result[0] = 1; // 1 in order coords? not necessarily e_0
        // order coords of 1:
        {
            std::vector<Rat> one_coords = O.to_order_coords(O.field().one());
            for (unsigned j = 0; j < n; ++j) result[j] = one_coords[j].get_num();
        }
        auto mul_coords = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
            std::vector<Int> c(n, Int(0));
            for (unsigned x = 0; x < n; ++x) {
                if (a[x] == 0) continue;
                for (unsigned y = 0; y < n; ++y) {
                    if (b[y] == 0) continue;
                    Int axy = mod_floor(a[x] * b[y], p);
                    if (axy == 0) continue;
                    for (unsigned k = 0; k < n; ++k)
                        c[k] = mod_floor(c[k] + axy * O.table(x, y, k), p);
                }
            }
            return c;
        };
        Int e = pe;
        while (e != 0) {
            if (mpz_odd_p(e.get_mpz_t())) result = mul_coords(result, acc);
            e >>= 1;
            if (e != 0) acc = mul_coords(acc, acc);
        }
        for (unsigned j = 0; j < n; ++j) frob.at(i, j) = result[j];
    }

    // kernel of frob over F_p by Gaussian elimination on rows
    IntMatrix work = frob;
    IntMatrix trans = IntMatrix::identity(n);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = r; i < n; ++i)
            if (work.at(i, c) % p != 0) {
                piv = i;
                break;
            }
        if (piv == n) continue;
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(work.at(piv, j), work.at(r, j));
            std::swap(trans.at(piv, j), trans.at(r, j));
        }
        Int s, t;
        xgcd(mod_floor(work.at(r, c), p), p, s, t);
        Int inv = mod_floor(s, p);
        for (std::size_t j = 0; j < n; ++j) {
            work.at(r, j) = mod_floor(work.at(r, j) * inv, p);
            trans.at(r, j) = mod_floor(trans.at(r, j) * inv, p);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            Int f = mod_floor(work.at(i, c), p);
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                work.at(i, j) = mod_floor(work.at(i, j) - f * work.at(r, j), p);
                trans.at(i, j) = mod_floor(trans.at(i, j) - f * trans.at(r, j), p);
            }
        }
        ++r;
    }

    // kernel rows (where work row is 0 mod p) give order-coordinate vectors
    std::vector<std::vector<Rat>> gens;
    RatMatrix basis = O.lattice().basis();
    for (std::size_t i = 0; i < n; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < n; ++j)
            if (work.at(i, j) % p != 0) {
                zero = false;
                break;
            }
        if (!zero) continue;
        std::vector<Rat> oc(n);
        for (std::size_t j = 0; j < n; ++j) oc[j] = Rat(trans.at(i, j));
        gens.push_back(oc * basis);
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rat> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = Rat(p) * basis.at(i, j);
        gens.push_back(std::move(row));
    }
    return QLattice::from_rows(gens);
}

// {x in K : x*L <= L} for a full-rank lattice L, as a lattice in power coords
QLattice multiplier_ring(const NumberField& K, const QLattice& L)
{
    const unsigned n = K.degree();
    RatMatrix basis = L.basis();
    RatMatrix basis_inv = inverse(basis);
    QLattice out;
    bool first = true;
    for (unsigned j = 0; j < n; ++j) {
        FieldElt c(n);
        for (unsigned k = 0; k < n; ++k) c[k] = basis.at(j, k);
        // x*c in L  <=>  x in L * M_c^{-1}
        RatMatrix m = inverse(K.mul_matrix(c)) ;
        QLattice lj = lattice_transform(L, m);
        out = first ? lj : lattice_intersect(out, lj);
        first = false;
    }
    return out;
}

} // namespace

NumberFieldOrder maximal_order(NumberFieldPtr K)
{
    const unsigned n = K->degree();
    NumberFieldOrder O(K, QLattice::standard(n)); // Z[t]/(m) power order
    Int disc = O.discriminant();
    auto fac = factor_integer(abs(disc));
    for (const auto& [p, e] : fac) {
        if (e < 2) continue;
        for (;;) {
            QLattice rad = p_radical(O, p);
            QLattice bigger = multiplier_ring(*K, rad);
            if (bigger == O.lattice()) break;
            if (!bigger.contains(O.lattice()))
                raise(errc::invalid_input, "internal: multiplier ring shrank");
            O = NumberFieldOrder(K, bigger);
        }
    }
    return O;
}

std::vector<NumberFieldOrder> intermediate_orders(const NumberFieldOrder& lower, const NumberFieldOrder& upper,
                                                  std::uint64_t index_cap)
{
    if (!lower.field().equal_min_poly(upper.field()))
        raise(errc::invalid_input, "orders live in different fields");
    const unsigned n = lower.degree();
    Rat idx = lattice_index(lower.lattice(), upper.lattice());
    if (idx.get_den() != 1) raise(errc::invalid_input, "lower order is not contained in the upper order");
    Int N = idx.get_num();
    if (N > Int(static_cast<unsigned long>(index_cap)))
        raise(errc::index_cap_exceeded,
              "index " + N.get_str() + " exceeds cap " + std::to_string(index_cap));

    // lower's basis in upper coordinates (integral)
    RatMatrix rel = lower.lattice().basis() * inverse(upper.lattice().basis());
    IntMatrix rel_int(n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            if (rel.at(i, j).get_den() != 1)
                raise(errc::invalid_input, "lower order is not contained in the upper order");
            rel_int.at(i, j) = rel.at(i, j).get_num();
        }

    std::vector<Int> divisors;
    for (Int d = 1; d * d <= N; ++d) {
        if (N % d != 0) continue;
        divisors.push_back(d);
        if (d * d != N) divisors.push_back(divexact(N, d));
    }
    std::sort(divisors.begin(), divisors.end());

    std::vector<NumberFieldOrder> found;
    RatMatrix upper_basis = upper.lattice().basis();

    // enumerate HNF sublattices of Z^n (rows in upper coords) of each index d | N
    std::function<void(unsigned, Int, IntMatrix&)> rec_diag;
    std::vector<IntMatrix> candidates;
    for (const Int& d : divisors) {
        IntMatrix h(n, n);
        std::function<void(unsigned, Int)> set_diag = [&](unsigned row, Int rem) {
            if (row == n) {
                if (rem != 1) return;
                // fill the above-pivot entries h[i][j], i<j, in [0, h[j][j])
                std::vector<std::pair<unsigned, unsigned>> slots;
                for (unsigned j = 1; j < n; ++j)
                    for (unsigned i = 0; i < j; ++i)
                        if (h.at(j, j) > 1) slots.emplace_back(i, j);
                std::function<void(std::size_t)> fill = [&](std::size_t s) {
                    if (s == slots.size()) {
                        candidates.push_back(h);
                        return;
                    }
                    auto [i, j] = slots[s];
                    for (Int v = 0; v < h.at(j, j); ++v) {
                        h.at(i, j) = v;
                        fill(s + 1);
                    }
                    h.at(i, j) = 0;
                };
                fill(0);
                return;
            }
            for (Int v = 1; v <= rem; ++v) {
                if (rem % v != 0) continue;
                h.at(row, row) = v;
                set_diag(row + 1, divexact(rem, v));
            }
            h.at(row, row) = 0;
        };
        set_diag(0, d);
    }

    for (const IntMatrix& h : candidates) {
        // lattice in upper coords; must contain rel_int rows
        QLattice cand;
        cand.den = 1;
        cand.num = hnf_basis(h);
        bool ok = true;
        for (unsigned i = 0; i < n && ok; ++i) {
            std::vector<Rat> row(n);
            for (unsigned j = 0; j < n; ++j) row[j] = Rat(rel_int.at(i, j));
            ok = cand.contains(row);
        }
        if (!ok) continue;
        // back to power coordinates, then ring test
        RatMatrix rows(n, n);
        for (unsigned i = 0; i < n; ++i) {
            std::vector<Rat> uc(n);
            for (unsigned j = 0; j < n; ++j) uc[j] = Rat(cand.num.at(i, j));
            std::vector<Rat> pc = uc * upper_basis;
            for (unsigned j = 0; j < n; ++j) rows.at(i, j) = pc[j];
        }
        try {
            found.emplace_back(lower.field_ptr(), QLattice::from_rows(rows));
        } catch (const Error&) {
            // not multiplicatively closed or missing 1: not an order
        }
    }

    std::sort(found.begin(), found.end(), [&](const NumberFieldOrder& a, const NumberFieldOrder& b) {
        Rat ia = lattice_index(a.lattice(), upper.lattice());
        Rat ib = lattice_index(b.lattice(), upper.lattice());
        if (ia != ib) return ia < ib;
        if (a.lattice().den != b.lattice().den) return a.lattice().den < b.lattice().den;
        return compare(a.lattice().num, b.lattice().num) < 0;
    });
    found.erase(std::unique(found.begin(), found.end(),
                            [](const NumberFieldOrder& a, const NumberFieldOrder& b) { return a == b; }),
                found.end());
    return found;
}

} // namespace avf
