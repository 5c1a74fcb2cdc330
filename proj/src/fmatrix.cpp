#include "gl2/fmatrix.hpp"

#include <algorithm>
#include <utility>

#include "gl2/errors.hpp"

namespace gl2 {

FMatrix FMatrix::identity(int n)
{
    FMatrix I(n, n);
    for (int i = 0; i < n; ++i)
        I.at(i, i) = 1;
    return I;
}

FMatrix FMatrix::column(int j) const
{
    FMatrix c(rows, 1);
    for (int i = 0; i < rows; ++i)
        c.at(i, 0) = at(i, j);
    return c;
}

namespace linalg {

namespace {

void check_same_shape(const FMatrix& A, const FMatrix& B)
{
    if (A.rows != B.rows || A.cols != B.cols)
        throw ParameterError("matrix shapes differ");
}

}  // namespace

FMatrix mul(const FiniteField& F, const FMatrix& A, const FMatrix& B)
{
    if (A.cols != B.rows)
        throw ParameterError("matrix product shape mismatch");
    FMatrix C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const auto a = A.at(i, k);
            if (a == 0)
                continue;
            const FiniteField::Elem* brow = &B.a[static_cast<std::size_t>(k) * B.cols];
            FiniteField::Elem* crow = &C.a[static_cast<std::size_t>(i) * C.cols];
            for (int j = 0; j < B.cols; ++j)
                if (brow[j] != 0)
                    crow[j] = F.add(crow[j], F.mul(a, brow[j]));
        }
    return C;
}

FMatrix add(const FiniteField& F, const FMatrix& A, const FMatrix& B)
{
    check_same_shape(A, B);
    FMatrix C = A;
    for (std::size_t i = 0; i < C.a.size(); ++i)
        C.a[i] = F.add(A.a[i], B.a[i]);
    return C;
}

FMatrix sub(const FiniteField& F, const FMatrix& A, const FMatrix& B)
{
    check_same_shape(A, B);
    FMatrix C = A;
    for (std::size_t i = 0; i < C.a.size(); ++i)
        C.a[i] = F.sub(A.a[i], B.a[i]);
    return C;
}

FMatrix scale(const FiniteField& F, FiniteField::Elem s, const FMatrix& A)
{
    FMatrix C = A;
    for (auto& x : C.a)
        x = F.mul(s, x);
    return C;
}

FMatrix transpose(const FMatrix& A)
{
    FMatrix T(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j)
            T.at(j, i) = A.at(i, j);
    return T;
}

FMatrix hstack(const FMatrix& A, const FMatrix& B)
{
    if (A.rows != B.rows)
        throw ParameterError("hstack row mismatch");
    FMatrix C(A.rows, A.cols + B.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j)
            C.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols; ++j)
            C.at(i, A.cols + j) = B.at(i, j);
    }
    return C;
}

FMatrix vstack(const FMatrix& A, const FMatrix& B)
{
    if (A.cols != B.cols)
        throw ParameterError("vstack column mismatch");
    FMatrix C(A.rows + B.rows, A.cols);
    std::copy(A.a.begin(), A.a.end(), C.a.begin());
    std::copy(B.a.begin(), B.a.end(), C.a.begin() + static_cast<std::ptrdiff_t>(A.a.size()));
    return C;
}

FMatrix kron(const FiniteField& F, const FMatrix& A, const FMatrix& B)
{
    FMatrix C(A.rows * B.rows, A.cols * B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) {
            const auto a = A.at(i, j);
            if (a == 0)
                continue;
            for (int k = 0; k < B.rows; ++k)
                for (int l = 0; l < B.cols; ++l)
                    C.at(i * B.rows + k, j * B.cols + l) = F.mul(a, B.at(k, l));
        }
    return C;
}

FMatrix columns(const FMatrix& A, int begin, int end)
{
    FMatrix C(A.rows, end - begin);
    for (int i = 0; i < A.rows; ++i)
        for (int j = begin; j < end; ++j)
            C.at(i, j - begin) = A.at(i, j);
    return C;
}

FMatrix rows(const FMatrix& A, int begin, int end)
{
    FMatrix C(end - begin, A.cols);
    for (int i = begin; i < end; ++i)
        for (int j = 0; j < A.cols; ++j)
            C.at(i - begin, j) = A.at(i, j);
    return C;
}

std::vector<int> rref(const FiniteField& F, FMatrix& A)
{
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < A.cols && r < A.rows; ++c) {
        int piv = -1;
        for (int i = r; i < A.rows; ++i)
            if (A.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != r)
            for (int j = 0; j < A.cols; ++j)
                std::swap(A.at(piv, j), A.at(r, j));
        const auto inv = F.inv(A.at(r, c));
        FiniteField::Elem* prow = &A.a[static_cast<std::size_t>(r) * A.cols];
        for (int j = c; j < A.cols; ++j)
            prow[j] = F.mul(prow[j], inv);
        for (int i = 0; i < A.rows; ++i) {
            if (i == r)
                continue;
            const auto factor = A.at(i, c);
            if (factor == 0)
                continue;
            const auto nf = F.neg(factor);
            FiniteField::Elem* row = &A.a[static_cast<std::size_t>(i) * A.cols];
            for (int j = c; j < A.cols; ++j)
                if (prow[j] != 0)
                    row[j] = F.add(row[j], F.mul(nf, prow[j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(const FiniteField& F, FMatrix A)
{
    return static_cast<int>(rref(F, A).size());
}

FMatrix inverse(const FiniteField& F, const FMatrix& A)
{
    if (A.rows != A.cols)
        throw ParameterError("inverse of a non-square matrix");
    const int n = A.rows;
    FMatrix M = hstack(A, FMatrix::identity(n));
    auto piv = rref(F, M);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1)
        throw RangeError("matrix is singular");
    return columns(M, n, 2 * n);
}

FMatrix kernel(const FiniteField& F, const FMatrix& A)
{
    FMatrix R = A;
    auto piv = rref(F, R);
    std::vector<char> is_pivot(A.cols, 0);
    for (int c : piv)
        is_pivot[c] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < A.cols; ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    FMatrix K(A.cols, static_cast<int>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const int fc = free_cols[k];
        K.at(fc, static_cast<int>(k)) = 1;
        for (std::size_t r = 0; r < piv.size(); ++r)
            K.at(piv[r], static_cast<int>(k)) = F.neg(R.at(static_cast<int>(r), fc));
    }
    return K;
}

FMatrix column_basis(const FiniteField& F, const FMatrix& A)
{
    FMatrix R = A;
    auto piv = rref(F, R);
    FMatrix B(A.rows, static_cast<int>(piv.size()));
    for (std::size_t k = 0; k < piv.size(); ++k)
        for (int i = 0; i < A.rows; ++i)
            B.at(i, static_cast<int>(k)) = A.at(i, piv[k]);
    return B;
}

FMatrix solve(const FiniteField& F, const FMatrix& A, const FMatrix& B)
{
    if (A.rows != B.rows)
        throw ParameterError("solve shape mismatch");
    FMatrix M = hstack(A, B);
    auto piv = rref(F, M);
    const int k = A.cols;
    for (std::size_t r = 0; r < piv.size(); ++r)
        if (piv[r] >= k)
            throw NotFoundError("linear system is inconsistent");
    if (static_cast<int>(piv.size()) < k)
        throw PreconditionError("solve requires independent columns");
    FMatrix X(k, B.cols);
    for (int r = 0; r < k; ++r)
        for (int j = 0; j < B.cols; ++j)
            X.at(piv[r], j) = M.at(r, k + j);
    return X;
}

bool in_span(const FiniteField& F, const FMatrix& U, const FMatrix& v)
{
    return rank(F, hstack(U, v)) == rank(F, U);
}

bool same_span(const FiniteField& F, const FMatrix& U, const FMatrix& V)
{
    const int ru = rank(F, U);
    return ru == rank(F, V) && ru == rank(F, hstack(U, V));
}

FMatrix span_sum(const FiniteField& F, const FMatrix& U, const FMatrix& V)
{
    return column_basis(F, hstack(U, V));
}

FMatrix span_intersection(const FiniteField& F, const FMatrix& U, const FMatrix& V)
{
    const FMatrix Ub = column_basis(F, U);
    const FMatrix Vb = column_basis(F, V);
    if (Ub.cols == 0 || Vb.cols == 0)
        return FMatrix(U.rows, 0);
    const FMatrix K = kernel(F, hstack(Ub, Vb));
    const FMatrix coeffs = rows(K, 0, Ub.cols);
    return column_basis(F, mul(F, Ub, coeffs));
}

FMatrix complete_basis(const FiniteField& F, const FMatrix& U)
{
    FMatrix B = column_basis(F, U);
    FMatrix M = hstack(B, FMatrix::identity(U.rows));
    FMatrix R = M;
    auto piv = rref(F, R);
    FMatrix out(U.rows, static_cast<int>(piv.size()));
    for (std::size_t k = 0; k < piv.size(); ++k)
        for (int i = 0; i < U.rows; ++i)
            out.at(i, static_cast<int>(k)) = M.at(i, piv[k]);
    return out;
}

FMatrix annihilator(const FiniteField& F, const FMatrix& U)
{
    if (U.cols == 0)
        return FMatrix::identity(U.rows);
    return kernel(F, transpose(U));
}

}  // namespace linalg

}  // namespace gl2
