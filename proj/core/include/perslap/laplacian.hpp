#pragma once

#include "perslap/complex.hpp"
#include "perslap/types.hpp"

namespace perslap {

/// The three combinatorial Laplacians of one dimension, full = up + down.
struct LaplacianMatrices {
  int q = 0;
  Matrix up;
  Matrix down;
  Matrix full;
};

/// Up-Laplacian at dimension q (n_q x n_q).  Unit weights give
/// B_{q+1} B_{q+1}^T; general weights give B_{q+1} W_{q+1} B_{q+1}^T W_q^{-1},
/// which is similar to a symmetric PSD matrix but need not be symmetric
/// itself.  q above the dimension of the complex yields a zero matrix of
/// size n_q (so 0x0).
Matrix up_laplacian(const SimplicialComplex& k, int q);

/// Down-Laplacian at dimension q: B_q^T B_q for unit weights,
/// W_q B_q^T W_{q-1}^{-1} B_q in general; zero at q = 0.
Matrix down_laplacian(const SimplicialComplex& k, int q);

/// up, down and their sum via the boundary-product formulas.
/// Requires 0 <= q <= dimension().
LaplacianMatrices laplacian(const SimplicialComplex& k, int q);

/// The same three matrices assembled from simplex adjacency: the up part
/// scans cofaces (one pass over the (q+1)-simplices), the down part scans
/// shared facets.  Agrees with laplacian() entrywise.
LaplacianMatrices laplacian_via_degree_adjacency(const SimplicialComplex& k, int q);

/// diag(w)^{-1/2} M diag(w)^{1/2}.  Applied to a weighted Laplacian this
/// produces the symmetric matrix it is similar to; with unit weights it is
/// the identity map.
Matrix weight_conjugated(const Matrix& m, const std::vector<double>& w);

/// Betti number at dimension q: kernel dimension of the full Laplacian
/// (computed on the symmetrized similar matrix when weights are non-unit).
int betti(const SimplicialComplex& k, int q, const Tolerances& tol = {});

/// Ascending eigenvalues of the chosen Laplacian at dimension q, computed on
/// the weight-conjugated (symmetric) form.
enum class LaplacianPart { up, down, full };
Spectrum laplacian_spectrum(const SimplicialComplex& k, int q,
                            LaplacianPart part = LaplacianPart::full,
                            const Tolerances& tol = {});

}  // namespace perslap
