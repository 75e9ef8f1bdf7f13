#include "avf/int_matrix.hpp"

#include "avf/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace avf {

IntMatrix::IntMatrix(std::size_t r, std::size_t c, std::vector<Int> e) : rows(r), cols(c), entries(std::move(e))
{
    if (entries.size() != rows * cols) raise(errc::invalid_input, "entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool IntMatrix::is_zero_row(std::size_t i) const
{
    for (std::size_t j = 0; j < cols; ++j)
        if (at(i, j) != 0) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols != b.rows) raise(errc::invalid_input, "matrix product dimension mismatch");
    IntMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows != b.rows || a.cols != b.cols) raise(errc::invalid_input, "matrix sum dimension mismatch");
    IntMatrix c(a.rows, a.cols);
    for (std::size_t i = 0; i < a.entries.size(); ++i) c.entries[i] = a.entries[i] + b.entries[i];
    return c;
}

namespace {

void add_multiple_of_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& c)
{
    if (c == 0) return;
    for (std::size_t j = 0; j < m.cols; ++j) m.at(dst, j) += c * m.at(src, j);
}

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void negate_row(IntMatrix& m, std::size_t i)
{
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = -m.at(i, j);
}

// rows i, j both nonzero in column c; after this, row i holds gcd at c and row
// j holds 0 at c.  The same transform is mirrored on u.  When the pivot
// already divides the other entry, a plain quotient step is used; in the
// general xgcd step the pivot strictly shrinks, so the loop terminates.
void combine_rows(IntMatrix& m, IntMatrix& u, std::size_t i, std::size_t j, std::size_t c)
{
    const Int a = m.at(i, c);
    const Int b = m.at(j, c);
    if (b % a == 0) {
        Int q = divexact(b, a);
        for (std::size_t col = 0; col < m.cols; ++col) m.at(j, col) -= q * m.at(i, col);
        for (std::size_t col = 0; col < u.cols; ++col) u.at(j, col) -= q * u.at(i, col);
        return;
    }
    Int s, t;
    Int g = xgcd(a, b, s, t);
    Int adg = divexact(a, g);
    Int bdg = divexact(b, g);
    for (std::size_t col = 0; col < m.cols; ++col) {
        Int mi = m.at(i, col), mj = m.at(j, col);
        m.at(i, col) = s * mi + t * mj;
        m.at(j, col) = adg * mj - bdg * mi;
    }
    for (std::size_t col = 0; col < u.cols; ++col) {
        Int ui = u.at(i, col), uj = u.at(j, col);
        u.at(i, col) = s * ui + t * uj;
        u.at(j, col) = adg * uj - bdg * ui;
    }
}

} // namespace

HnfResult hnf(const IntMatrix& m)
{
    HnfResult res;
    res.h = m;
    res.u = IntMatrix::identity(m.rows);
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;

    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t pivot = m.rows;
        for (std::size_t i = r; i < m.rows; ++i) {
            if (h.at(i, c) == 0) continue;
            if (pivot == m.rows) {
                pivot = i;
            } else {
                combine_rows(h, u, pivot, i, c);
            }
        }
        if (pivot == m.rows) continue;
        if (pivot != r) {
            swap_rows(h, pivot, r);
            swap_rows(u, pivot, r);
        }
        if (h.at(r, c) < 0) {
            negate_row(h, r);
            negate_row(u, r);
        }
        const Int& piv = h.at(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            Int q = fdiv_q(h.at(i, c), piv);
            if (q != 0) {
                add_multiple_of_row(h, i, r, -q);
                add_multiple_of_row(u, i, r, -q);
            }
        }
        ++r;
    }
    res.rank = r;
    return res;
}

IntMatrix hnf_basis(const IntMatrix& m)
{
    HnfResult r = hnf(m);
    IntMatrix out(r.rank, m.cols);
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) out.at(i, j) = r.h.at(i, j);
    return out;
}

std::vector<Int> snf_invariants(const IntMatrix& m)
{
    if (m.rows != m.cols) raise(errc::invalid_input, "snf_invariants requires a square matrix");
    const std::size_t n = m.rows;
    IntMatrix a = m;
    IntMatrix dummy(0, 0); // transforms not needed

    auto combine_rows_nc = [&](std::size_t i, std::size_t j, std::size_t c) {
        IntMatrix du = IntMatrix::identity(0);
        combine_rows(a, du, i, j, c);
    };
    auto combine_cols_nc = [&](std::size_t i, std::size_t j, std::size_t r) {
        const Int p = a.at(r, i);
        const Int q = a.at(r, j);
        if (q % p == 0) {
            Int f = divexact(q, p);
            for (std::size_t row = 0; row < a.rows; ++row) a.at(row, j) -= f * a.at(row, i);
            return;
        }
        Int s, t;
        Int g = xgcd(p, q, s, t);
        Int pdg = divexact(p, g);
        Int qdg = divexact(q, g);
        for (std::size_t row = 0; row < a.rows; ++row) {
            Int ai = a.at(row, i), aj = a.at(row, j);
            a.at(row, i) = s * ai + t * aj;
            a.at(row, j) = pdg * aj - qdg * ai;
        }
    };

    for (std::size_t t = 0; t < n; ++t) {
        // move a nonzero entry to (t,t)
        std::size_t pi = n, pj = n;
        for (std::size_t i = t; i < n && pi == n; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (a.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == n) raise(errc::singular_matrix, "matrix has zero determinant");
        swap_rows(a, t, pi);
        for (std::size_t row = 0; row < n; ++row) std::swap(a.at(row, t), a.at(row, pj));

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < n; ++i)
                if (a.at(i, t) != 0) combine_rows_nc(t, i, t);
            for (std::size_t j = t + 1; j < n; ++j)
                if (a.at(t, j) != 0) {
                    combine_cols_nc(t, j, t);
                    dirty = true;
                }
            if (dirty) continue;
            // pivot divides the rest of the submatrix, or pull offender in
            for (std::size_t i = t + 1; i < n && !dirty; ++i)
                for (std::size_t j = t + 1; j < n && !dirty; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        add_multiple_of_row(a, t, i, 1);
                        dirty = true;
                    }
        }
    }

    std::vector<Int> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i] = abs(a.at(i, i));
    // The elimination order already enforces d_i | d_{i+1}.
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (inv[i + 1] % inv[i] != 0) raise(errc::invalid_input, "internal SNF divisibility failure");
    return inv;
}

Int det(const IntMatrix& m)
{
    if (m.rows != m.cols) raise(errc::invalid_input, "determinant requires a square matrix");
    const std::size_t n = m.rows;
    if (n == 0) return 1;
    IntMatrix b = m;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (b.at(k, k) == 0) {
            std::size_t s = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (b.at(i, k) != 0) {
                    s = i;
                    break;
                }
            if (s == n) return 0;
            swap_rows(b, k, s);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int v = b.at(i, j) * b.at(k, k) - b.at(i, k) * b.at(k, j);
                b.at(i, j) = divexact(v, prev);
            }
            b.at(i, k) = 0;
        }
        prev = b.at(k, k);
    }
    return sign > 0 ? b.at(n - 1, n - 1) : Int(-b.at(n - 1, n - 1));
}

IntMatrix left_kernel(const IntMatrix& m)
{
    HnfResult r = hnf(m);
    IntMatrix ker(m.rows - r.rank, m.rows);
    for (std::size_t i = r.rank; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.rows; ++j) ker.at(i - r.rank, j) = r.u.at(i, j);
    return hnf_basis(ker);
}

int compare(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows != b.rows) return a.rows < b.rows ? -1 : 1;
    if (a.cols != b.cols) return a.cols < b.cols ? -1 : 1;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        int c = cmp(a.entries[i], b.entries[i]);
        if (c != 0) return c;
    }
    return 0;
}

} // namespace avf
