#pragma once

#include <vector>

#include "gl2/field.hpp"

namespace gl2 {

// Dense matrix over a finite field, row-major. Subspaces are represented by matrices whose
// columns form a basis.
struct FMatrix {
    using Elem = FiniteField::Elem;
    int rows = 0;
    int cols = 0;
    std::vector<Elem> a;

    FMatrix() = default;
    FMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
    static FMatrix identity(int n);

    Elem& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    Elem at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
    FMatrix column(int j) const;
    bool operator==(const FMatrix&) const = default;
};

namespace linalg {

FMatrix mul(const FiniteField& F, const FMatrix& A, const FMatrix& B);
FMatrix add(const FiniteField& F, const FMatrix& A, const FMatrix& B);
FMatrix sub(const FiniteField& F, const FMatrix& A, const FMatrix& B);
FMatrix scale(const FiniteField& F, FiniteField::Elem s, const FMatrix& A);
FMatrix transpose(const FMatrix& A);
FMatrix hstack(const FMatrix& A, const FMatrix& B);
FMatrix vstack(const FMatrix& A, const FMatrix& B);
FMatrix kron(const FiniteField& F, const FMatrix& A, const FMatrix& B);
// Columns [begin, end).
FMatrix columns(const FMatrix& A, int begin, int end);
// Rows [begin, end).
FMatrix rows(const FMatrix& A, int begin, int end);

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(const FiniteField& F, FMatrix& A);
int rank(const FiniteField& F, FMatrix A);
FMatrix inverse(const FiniteField& F, const FMatrix& A);
// Basis of the right null space, as columns.
FMatrix kernel(const FiniteField& F, const FMatrix& A);
// Basis of the column space chosen among the columns of A.
FMatrix column_basis(const FiniteField& F, const FMatrix& A);
// Solve A X = B for A with independent columns; throws NotFoundError if inconsistent.
FMatrix solve(const FiniteField& F, const FMatrix& A, const FMatrix& B);
bool in_span(const FiniteField& F, const FMatrix& U, const FMatrix& v);
bool same_span(const FiniteField& F, const FMatrix& U, const FMatrix& V);
FMatrix span_sum(const FiniteField& F, const FMatrix& U, const FMatrix& V);
FMatrix span_intersection(const FiniteField& F, const FMatrix& U, const FMatrix& V);
// Columns of U followed by standard basis vectors completing them to a basis.
FMatrix complete_basis(const FiniteField& F, const FMatrix& U);
// {v : u^T v = 0 for every column u of U}.
FMatrix annihilator(const FiniteField& F, const FMatrix& U);

}  // namespace linalg

}  // namespace gl2
