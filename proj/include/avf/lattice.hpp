#pragma once

#include "avf/int_matrix.hpp"

#include <vector>

namespace avf {

// Dense rational matrix, row-major.
struct RatMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rat> entries;

    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    Rat& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    static RatMatrix identity(std::size_t n);
    static RatMatrix from(const IntMatrix& m);

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix inverse(const RatMatrix& m); // throws SingularMatrix
Rat rat_det(const RatMatrix& m);

std::vector<Rat> operator*(const std::vector<Rat>& v, const RatMatrix& m); // row vector * matrix

// Full-rank lattice in Q^n: rows of num/den span it, num in canonical HNF,
// den positive and minimal.  Equality of lattices is equality of the pair.
struct QLattice {
    Int den = 1;
    IntMatrix num; // rank x n, canonical HNF, full row rank

    std::size_t dim() const { return num.cols; }
    std::size_t rank() const { return num.rows; }
    bool full_rank() const { return num.rows == num.cols; }

    static QLattice from_rows(const RatMatrix& rows);
    static QLattice from_rows(const std::vector<std::vector<Rat>>& rows);
    static QLattice standard(std::size_t n); // Z^n

    RatMatrix basis() const; // rank x n rational rows

    bool contains(const std::vector<Rat>& v) const;
    bool contains(const QLattice& other) const;

    friend bool operator==(const QLattice&, const QLattice&) = default;
};

QLattice lattice_sum(const QLattice& a, const QLattice& b);
// both full rank in the same dimension
QLattice lattice_intersect(const QLattice& a, const QLattice& b);
// image of the lattice under right multiplication by m (square nonsingular)
QLattice lattice_transform(const QLattice& a, const RatMatrix& m);
// [b : a] for a <= b as a positive rational (det ratio); integral when a <= b
Rat lattice_index(const QLattice& sub, const QLattice& super);

} // namespace avf
