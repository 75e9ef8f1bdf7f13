#pragma once

#include "avf/integer.hpp"

#include <cstddef>
#include <vector>

namespace avf {

// Dense matrix of arbitrary-precision integers, row-major.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> entries;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}
    IntMatrix(std::size_t r, std::size_t c, std::vector<Int> e);

    Int& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    static IntMatrix identity(std::size_t n);

    IntMatrix transpose() const;
    bool is_zero_row(std::size_t i) const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);

struct HnfResult {
    IntMatrix h; // U*M = H, row-style Hermite normal form
    IntMatrix u; // unimodular
    std::size_t rank = 0;
};

// Row-style HNF: staircase profile with positive pivots, entries above each
// pivot reduced into [0, pivot), zero rows at the bottom.
HnfResult hnf(const IntMatrix& m);

// H with zero rows removed (the canonical basis of the row lattice).
IntMatrix hnf_basis(const IntMatrix& m);

// Invariant factors d1 | d2 | ... | dn of a square nonsingular matrix,
// 1-entries retained.  Throws SingularMatrix when det = 0.
std::vector<Int> snf_invariants(const IntMatrix& m);

// Exact determinant (Bareiss fraction-free elimination).
Int det(const IntMatrix& m);

// Canonical basis (HNF rows) of the left kernel {x : x*M = 0}.
IntMatrix left_kernel(const IntMatrix& m);

// Lexicographic comparison of entries, rows first; used for deterministic ordering.
int compare(const IntMatrix& a, const IntMatrix& b);

} // namespace avf
