#pragma once

#include <utility>
#include <vector>

#include "perslap/complex.hpp"
#include "perslap/types.hpp"

namespace perslap {

enum class Method { reduction, schur };

/// Persistent Laplacian of a pair at dimension q.  All matrices have
/// sub().simplex_count(q) rows and columns and live in the pair's basis
/// order; full = up + down.
struct PersistentLaplacian {
  int q = 0;
  Matrix up;
  Matrix down;
  Matrix full;
  Method method = Method::schur;
};

/// Basis matrices for the subspace of ambient p-chains whose boundary stays
/// inside the subcomplex.  `basis` (Z) has one column per basis chain written
/// over the ambient p-simplices; `boundary` restricts the ambient boundary
/// map to those chains and expresses it over the sub (p-1)-simplices.  Both
/// have zero columns when the subspace is trivial.
struct ChainSubspace {
  Matrix basis;
  Matrix boundary;
};

/// Computes the subspace via column reduction of the rows of the ambient
/// boundary matrix that leave the subcomplex.  Requires that the pair
/// actually removes (p-1)-simplices; the degenerate cases (no removed
/// simplices, or no ambient p-simplices at all) are the caller's branch.
ChainSubspace chain_subspace_basis(const SimplicialPair& pair, int p,
                                   const Tolerances& tol = {});

/// The persistent Laplacian by either route.  The reduction route assembles
/// the up part from a kernel basis Z as B (Z^T W^{-1} Z)^{-1} B^T (with the
/// weight factors dropping out at unit weights); the schur route takes the
/// generalized Schur complement of the ambient up-Laplacian onto the
/// subcomplex positions.  Requires 0 <= q <= ambient dimension.
PersistentLaplacian persistent_laplacian(const SimplicialPair& pair, int q,
                                         Method method = Method::schur,
                                         const Tolerances& tol = {});

/// Persistent Betti number: kernel dimension of the (weight-conjugated)
/// persistent Laplacian.
int persistent_betti(const SimplicialPair& pair, int q, const Tolerances& tol = {});

/// Ascending eigenvalues of the persistent Laplacian.  For non-unit weights
/// at dimension q the operator matrix is not symmetric; the spectrum is then
/// computed on the similar symmetric form, but only when allow_conjugated is
/// set -- otherwise such input is refused.
Spectrum persistent_spectrum(const SimplicialPair& pair, int q,
                             const Tolerances& tol = {},
                             bool allow_conjugated = false);

/// The tempting-but-wrong construction: restrict the rows of the ambient
/// boundary matrix to the subcomplex and form the up product from the result
/// as if it were a boundary matrix.  Returns that matrix together with a
/// flag saying whether its kernel dimension (plus the down part) happens to
/// reproduce the persistent Betti number -- in general it does not.
std::pair<Matrix, bool> naive_submatrix_counterexample(const SimplicialPair& pair, int q,
                                                       const Tolerances& tol = {});

/// Positions (in the subcomplex list) of the q-simplices all of whose
/// up-neighbours in the ambient complex already lie in the subcomplex.
std::vector<int> interior_simplices(const SimplicialPair& pair, int q);

/// Checks the locality of the up action: applying the ambient up-Laplacian
/// to a chain and the persistent up-Laplacian to its truncation must agree
/// on every interior simplex, entrywise within check_tol.
bool interior_simplex_check(const SimplicialPair& pair, int q, const Chain& chain_on_ambient,
                            double check_tol = 1e-8, const Tolerances& tol = {});

}  // namespace perslap
