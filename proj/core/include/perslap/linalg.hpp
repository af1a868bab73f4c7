#pragma once

#include <span>
#include <vector>

#include "perslap/types.hpp"

namespace perslap {

/// Result of reducing the columns of a matrix D: reduced = D * ops, where ops
/// is a product of elementary column operations (hence nonsingular), and no
/// two nonzero columns of `reduced` share the row index of their lowest
/// nonzero entry.  `zero_columns` lists the columns of `reduced` that
/// vanished; the same columns of `ops` form a basis of ker(D).
struct ColumnReduction {
  Matrix reduced;
  Matrix ops;
  std::vector<int> zero_columns;
};

/// Left-to-right column reduction.  A column counts as zero when every entry
/// has magnitude at most pivot_tol * max|D|.  Deterministic; when two columns
/// compete for the same pivot row the one with the larger pivot magnitude is
/// kept as the eliminator.
ColumnReduction column_reduce(const Matrix& d, const Tolerances& tol = {});

/// Basis of ker(d) as matrix columns (n x nullity; zero columns of a reduction).
Matrix kernel_basis(const Matrix& d, const Tolerances& tol = {});

/// Moore-Penrose pseudoinverse.  Symmetric input goes through a symmetric
/// eigendecomposition, anything else through an SVD; singular values at or
/// below rank_tol times the largest are treated as zero.
Matrix pseudoinverse(const Matrix& m, const Tolerances& tol = {});

/// Eigenvalues of a symmetric matrix, ascending.  The input is symmetrized as
/// (M + M^T)/2 first and must be symmetric to within 1e-8 relative.
Spectrum eigenvalues_sym(const Matrix& m, const Tolerances& tol = {});

/// Rank via SVD with the relative rank_tol cutoff.
int rank(const Matrix& m, const Tolerances& tol = {});

/// Kernel dimension of a symmetric positive semi-definite matrix: the number
/// of eigenvalues with magnitude at most rank_tol times the largest.
int nullity(const Matrix& m, const Tolerances& tol = {});

/// Generalized Schur complement M / M(I, I) with I = `eliminate`:
///   M(J,J) - M(J,I) * pinv(M(I,I)) * M(I,J),   J = complement of I,
/// rows/columns of the result in ascending original index order.  I must be
/// nonempty and proper.
Matrix schur_complement(const Matrix& m, std::span<const int> eliminate,
                        const Tolerances& tol = {});

/// Whether M(I,I) is a proper principal submatrix of M, i.e. ker M(I,I) is
/// contained in ker M(J,I) and ker M(I,I)^T in ker M(I,J)^T.  Every principal
/// submatrix of a positive semi-definite matrix is proper.
bool is_proper(const Matrix& m, std::span<const int> eliminate,
               const Tolerances& tol = {});

}  // namespace perslap
