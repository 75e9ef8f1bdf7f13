#include "avf/lattice.hpp"

#include "avf/errors.hpp"

#include <algorithm>

namespace avf {

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from(const IntMatrix& a)
{
    RatMatrix m(a.rows, a.cols);
    for (std::size_t i = 0; i < a.entries.size(); ++i) m.entries[i] = a.entries[i];
    return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b)
{
    if (a.cols != b.rows) raise(errc::invalid_input, "matrix product dimension mismatch");
    RatMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

std::vector<Rat> operator*(const std::vector<Rat>& v, const RatMatrix& m)
{
    if (v.size() != m.rows) raise(errc::invalid_input, "vector-matrix dimension mismatch");
    std::vector<Rat> out(m.cols);
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols; ++j) out[j] += v[i] * m.at(i, j);
    }
    return out;
}

RatMatrix inverse(const RatMatrix& m)
{
    if (m.rows != m.cols) raise(errc::invalid_input, "inverse of non-square matrix");
    const std::size_t n = m.rows;
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i)
            if (a.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv == n) raise(errc::singular_matrix, "matrix not invertible");
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
        Rat d = a.at(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(c, j) /= d;
            inv.at(c, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a.at(i, c) == 0) continue;
            Rat f = a.at(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(c, j);
                inv.at(i, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

Rat rat_det(const RatMatrix& m)
{
    if (m.rows != m.cols) raise(errc::invalid_input, "determinant of non-square matrix");
    RatMatrix a = m;
    const std::size_t n = m.rows;
    Rat d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i)
            if (a.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
            d = -d;
        }
        d *= a.at(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a.at(i, c) == 0) continue;
            Rat f = a.at(i, c) / a.at(c, c);
            for (std::size_t j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
        }
    }
    return d;
}

QLattice QLattice::from_rows(const RatMatrix& rows)
{
    Int den = 1;
    for (const Rat& e : rows.entries) den = lcm(den, e.get_den());
    IntMatrix num(rows.rows, rows.cols);
    for (std::size_t i = 0; i < rows.entries.size(); ++i) {
        Rat v = rows.entries[i] * den;
        num.entries[i] = v.get_num();
    }
    QLattice L;
    L.num = hnf_basis(num);
    L.den = den;
    // minimality: divide out gcd(den, all entries)
    Int g = den;
    for (const Int& e : L.num.entries) g = gcd(g, e);
    if (g > 1) {
        for (Int& e : L.num.entries) e = divexact(e, g);
        L.den = divexact(den, g);
    }
    return L;
}

QLattice QLattice::from_rows(const std::vector<std::vector<Rat>>& rows)
{
    if (rows.empty()) raise(errc::invalid_input, "empty generator list");
    RatMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return from_rows(m);
}

QLattice QLattice::standard(std::size_t n)
{
    QLattice L;
    L.den = 1;
    L.num = IntMatrix::identity(n);
    return L;
}

RatMatrix QLattice::basis() const
{
    RatMatrix b(num.rows, num.cols);
    for (std::size_t i = 0; i < num.entries.size(); ++i) b.entries[i] = Rat(num.entries[i]) / den;
    return b;
}

bool QLattice::contains(const std::vector<Rat>& v) const
{
    if (v.size() != dim()) raise(errc::invalid_input, "dimension mismatch");
    // need v*den integral and in the row span of num over Z
    std::vector<Int> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * den;
        if (s.get_den() != 1) return false;
        w[i] = s.get_num();
    }
    // peel rows off the HNF staircase
    std::size_t r = 0;
    std::vector<std::size_t> pivot_col(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        std::size_t c = 0;
        while (c < dim() && num.at(i, c) == 0) ++c;
        pivot_col[i] = c;
    }
    for (std::size_t c = 0; c < dim(); ++c) {
        if (w[c] == 0) continue;
        while (r < rank() && pivot_col[r] < c) ++r;
        if (r >= rank() || pivot_col[r] != c) return false;
        if (w[c] % num.at(r, c) != 0) return false;
        Int q = divexact(w[c], num.at(r, c));
        for (std::size_t j = c; j < dim(); ++j) w[j] -= q * num.at(r, j);
    }
    return true;
}

bool QLattice::contains(const QLattice& other) const
{
    RatMatrix b = other.basis();
    for (std::size_t i = 0; i < b.rows; ++i) {
        std::vector<Rat> row(b.cols);
        for (std::size_t j = 0; j < b.cols; ++j) row[j] = b.at(i, j);
        if (!contains(row)) return false;
    }
    return true;
}

QLattice lattice_sum(const QLattice& a, const QLattice& b)
{
    if (a.dim() != b.dim()) raise(errc::invalid_input, "dimension mismatch");
    Int den = lcm(a.den, b.den);
    Int fa = divexact(den, a.den), fb = divexact(den, b.den);
    RatMatrix rows(a.rank() + b.rank(), a.dim());
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) rows.at(i, j) = Rat(fa * a.num.at(i, j)) / den;
    for (std::size_t i = 0; i < b.rank(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) rows.at(a.rank() + i, j) = Rat(fb * b.num.at(i, j)) / den;
    return QLattice::from_rows(rows);
}

QLattice lattice_intersect(const QLattice& a, const QLattice& b)
{
    if (a.dim() != b.dim() || !a.full_rank() || !b.full_rank())
        raise(errc::invalid_input, "intersection needs full-rank lattices of equal dimension");
    const std::size_t n = a.dim();
    Int den = lcm(a.den, b.den);
    Int fa = divexact(den, a.den), fb = divexact(den, b.den);
    // x in a∩b  <=>  x*den = u*A = v*B with A, B the scaled numerators;
    // solve (u|v)[A;-B] = 0 and map u back through A.
    IntMatrix stack(2 * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            stack.at(i, j) = fa * a.num.at(i, j);
            stack.at(n + i, j) = -fb * b.num.at(i, j);
        }
    IntMatrix ker = left_kernel(stack); // rows (u|v), rank n
    RatMatrix rows(ker.rows, n);
    for (std::size_t i = 0; i < ker.rows; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int acc = 0;
            for (std::size_t k = 0; k < n; ++k) acc += ker.at(i, k) * fa * a.num.at(k, j);
            rows.at(i, j) = Rat(acc) / den;
        }
    QLattice out = QLattice::from_rows(rows);
    if (!out.full_rank()) raise(errc::invalid_input, "internal: intersection lost rank");
    return out;
}

QLattice lattice_transform(const QLattice& a, const RatMatrix& m)
{
    return QLattice::from_rows(a.basis() * m);
}

Rat lattice_index(const QLattice& sub, const QLattice& super)
{
    if (!sub.full_rank() || !super.full_rank() || sub.dim() != super.dim())
        raise(errc::invalid_input, "index needs full-rank lattices");
    Rat dsub = Rat(abs(det(sub.num))) / pow_ui(sub.den, static_cast<unsigned long>(sub.dim()));
    Rat dsup = Rat(abs(det(super.num))) / pow_ui(super.den, static_cast<unsigned long>(super.dim()));
    return dsub / dsup;
}

} // namespace avf
