#include "perslap/persistent.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <string>

#include "perslap/laplacian.hpp"
#include "perslap/linalg.hpp"

namespace perslap {

namespace {

Vector to_vector(const std::vector<double>& w) {
  return Eigen::Map<const Vector>(w.data(), static_cast<Eigen::Index>(w.size()));
}

void require_in_range(const SimplicialPair& pair, int q) {
  if (q < 0 || q > pair.ambient().dimension())
    throw DomainError("dimension q=" + std::to_string(q) +
                      " out of range for an ambient complex of dimension " +
                      std::to_string(pair.ambient().dimension()));
}

Matrix up_via_reduction(const SimplicialPair& pair, int q, const Tolerances& tol) {
  const SimplicialComplex& k = pair.sub();
  const SimplicialComplex& l = pair.ambient();
  const int nq_sub = k.simplex_count(q);

  if (l.simplex_count(q + 1) == 0) return Matrix::Zero(nq_sub, nq_sub);
  if (pair.removed_count(q) == 0) return up_laplacian(l, q);
  if (nq_sub == 0) return Matrix::Zero(0, 0);

  const ChainSubspace cs = chain_subspace_basis(pair, q + 1, tol);
  if (cs.basis.cols() == 0) return Matrix::Zero(nq_sub, nq_sub);

  Matrix gram;  // Z^T W_{q+1}^{-1} Z, the basis Gram matrix in the weighted inner product
  if (l.has_unit_weights(q + 1)) {
    gram = cs.basis.transpose() * cs.basis;
  } else {
    const Vector w = to_vector(l.weights(q + 1));
    gram = cs.basis.transpose() * w.cwiseInverse().asDiagonal() * cs.basis;
  }
  const Matrix core = cs.boundary * Eigen::LDLT<Matrix>(gram).solve(cs.boundary.transpose());
  if (k.has_unit_weights(q)) return core;
  return core * to_vector(k.weights(q)).cwiseInverse().asDiagonal();
}

Matrix up_via_schur(const SimplicialPair& pair, int q, const Tolerances& tol) {
  const SimplicialComplex& l = pair.ambient();
  const int nq_sub = pair.sub().simplex_count(q);
  if (pair.removed_count(q) == 0) return up_laplacian(l, q);
  if (nq_sub == 0) return Matrix::Zero(0, 0);
  return schur_complement(up_laplacian(l, q), pair.removed_indices(q), tol);
}

}  // namespace

ChainSubspace chain_subspace_basis(const SimplicialPair& pair, int p, const Tolerances& tol) {
  if (p < 1) throw DomainError("chain dimension p=" + std::to_string(p) + " out of range");
  const int n_keep = pair.sub().simplex_count(p - 1);
  if (pair.removed_count(p - 1) == 0)
    throw DomainError("chain_subspace_basis: the pair removes no (p-1)-simplices; "
                      "the subspace is all ambient p-chains");
  if (p > pair.ambient().dimension()) {
    ChainSubspace out;  // no p-simplices at all: the subspace is {0}
    out.basis.resize(0, 0);
    out.boundary.resize(n_keep, 0);
    return out;
  }

  const Matrix b = pair.ambient().boundary_matrix(p);
  const Matrix leaving = b.bottomRows(b.rows() - n_keep);
  const ColumnReduction cr = column_reduce(leaving, tol);

  ChainSubspace out;
  out.basis.resize(b.cols(), static_cast<Eigen::Index>(cr.zero_columns.size()));
  for (size_t i = 0; i < cr.zero_columns.size(); ++i)
    out.basis.col(static_cast<Eigen::Index>(i)) = cr.ops.col(cr.zero_columns[i]);
  out.boundary = b.topRows(n_keep) * out.basis;
  return out;
}

PersistentLaplacian persistent_laplacian(const SimplicialPair& pair, int q, Method method,
                                         const Tolerances& tol) {
  require_in_range(pair, q);
  PersistentLaplacian out;
  out.q = q;
  out.method = method;
  out.up = method == Method::reduction ? up_via_reduction(pair, q, tol)
                                       : up_via_schur(pair, q, tol);
  out.down = down_laplacian(pair.sub(), q);
  out.full = out.up + out.down;
  return out;
}

int persistent_betti(const SimplicialPair& pair, int q, const Tolerances& tol) {
  const PersistentLaplacian pl = persistent_laplacian(pair, q, Method::schur, tol);
  return nullity(weight_conjugated(pl.full, pair.sub().weights(q)), tol);
}

Spectrum persistent_spectrum(const SimplicialPair& pair, int q, const Tolerances& tol,
                             bool allow_conjugated) {
  const PersistentLaplacian pl = persistent_laplacian(pair, q, Method::schur, tol);
  if (pair.sub().has_unit_weights(q)) return eigenvalues_sym(pl.full, tol);
  if (!allow_conjugated)
    throw DomainError("persistent_spectrum: non-unit weights at dimension q make the operator "
                      "matrix non-symmetric; pass allow_conjugated to diagonalize the similar "
                      "symmetric form");
  return eigenvalues_sym(weight_conjugated(pl.full, pair.sub().weights(q)), tol);
}

std::pair<Matrix, bool> naive_submatrix_counterexample(const SimplicialPair& pair, int q,
                                                       const Tolerances& tol) {
  require_in_range(pair, q);
  const SimplicialComplex& k = pair.sub();
  const SimplicialComplex& l = pair.ambient();
  const int nq_sub = k.simplex_count(q);

  Matrix naive_up = Matrix::Zero(nq_sub, nq_sub);
  if (l.simplex_count(q + 1) > 0 && nq_sub > 0) {
    const Matrix rows = l.boundary_matrix(q + 1).topRows(nq_sub);
    if (l.has_unit_weights(q) && l.has_unit_weights(q + 1)) {
      naive_up = rows * rows.transpose();
    } else {
      naive_up = rows * to_vector(l.weights(q + 1)).asDiagonal() * rows.transpose() *
                 to_vector(k.weights(q)).cwiseInverse().asDiagonal();
    }
  }

  const Matrix naive_full = naive_up + down_laplacian(k, q);
  const int naive_betti = nullity(weight_conjugated(naive_full, k.weights(q)), tol);
  return {naive_up, naive_betti == persistent_betti(pair, q, tol)};
}

std::vector<int> interior_simplices(const SimplicialPair& pair, int q) {
  require_in_range(pair, q);
  const SimplicialComplex& k = pair.sub();
  const SimplicialComplex& l = pair.ambient();
  const int nq_sub = k.simplex_count(q);

  std::vector<bool> interior(nq_sub, true);
  for (int col = 0; col < l.simplex_count(q + 1); ++col) {
    const Simplex& coface = l.simplices(q + 1)[col];
    std::vector<int> faces;
    bool touches_outside = false;
    for (int i = 0; i <= q + 1; ++i) {
      const int pos = *l.index_of(coface.facet(i));
      faces.push_back(pos);
      if (pos >= nq_sub) touches_outside = true;
    }
    if (!touches_outside) continue;
    for (int pos : faces)
      if (pos < nq_sub) interior[pos] = false;
  }

  std::vector<int> out;
  for (int i = 0; i < nq_sub; ++i)
    if (interior[i]) out.push_back(i);
  return out;
}

bool interior_simplex_check(const SimplicialPair& pair, int q, const Chain& chain_on_ambient,
                            double check_tol, const Tolerances& tol) {
  require_in_range(pair, q);
  if (chain_on_ambient.q != q ||
      chain_on_ambient.coeffs.size() != pair.ambient().simplex_count(q))
    throw DomainError("interior_simplex_check: chain does not live on the ambient q-simplices");

  const int nq_sub = pair.sub().simplex_count(q);
  const Vector ambient_image = up_laplacian(pair.ambient(), q) * chain_on_ambient.coeffs;
  const Vector truncated = chain_on_ambient.coeffs.head(nq_sub);
  const Vector pair_image =
      persistent_laplacian(pair, q, Method::schur, tol).up * truncated;

  for (int pos : interior_simplices(pair, q))
    if (std::abs(ambient_image[pos] - pair_image[pos]) > check_tol) return false;
  return true;
}

}  // namespace perslap
