#include "perslap/laplacian.hpp"

#include <cmath>
#include <string>

#include "perslap/linalg.hpp"

namespace perslap {

namespace {

Vector to_vector(const std::vector<double>& w) {
  return Eigen::Map<const Vector>(w.data(), static_cast<Eigen::Index>(w.size()));
}

void require_in_range(const SimplicialComplex& k, int q) {
  if (q < 0 || q > k.dimension())
    throw DomainError("dimension q=" + std::to_string(q) + " out of range for a complex of dimension " +
                      std::to_string(k.dimension()));
}

}  // namespace

Matrix up_laplacian(const SimplicialComplex& k, int q) {
  if (q < 0) throw DomainError("dimension q must be non-negative");
  const int n = k.simplex_count(q);
  if (k.simplex_count(q + 1) == 0) return Matrix::Zero(n, n);
  const Matrix b = k.boundary_matrix(q + 1);
  if (k.has_unit_weights(q) && k.has_unit_weights(q + 1)) return b * b.transpose();
  const Vector wq = to_vector(k.weights(q));
  const Vector wup = to_vector(k.weights(q + 1));
  return b * wup.asDiagonal() * b.transpose() * wq.cwiseInverse().asDiagonal();
}

Matrix down_laplacian(const SimplicialComplex& k, int q) {
  if (q < 0) throw DomainError("dimension q must be non-negative");
  const int n = k.simplex_count(q);
  if (q == 0) return Matrix::Zero(n, n);
  if (n == 0) return Matrix::Zero(0, 0);
  const Matrix b = k.boundary_matrix(q);
  if (k.has_unit_weights(q) && k.has_unit_weights(q - 1)) return b.transpose() * b;
  const Vector wq = to_vector(k.weights(q));
  const Vector wdn = to_vector(k.weights(q - 1));
  return wq.asDiagonal() * b.transpose() * wdn.cwiseInverse().asDiagonal() * b;
}

LaplacianMatrices laplacian(const SimplicialComplex& k, int q) {
  require_in_range(k, q);
  LaplacianMatrices out;
  out.q = q;
  out.up = up_laplacian(k, q);
  out.down = down_laplacian(k, q);
  out.full = out.up + out.down;
  return out;
}

LaplacianMatrices laplacian_via_degree_adjacency(const SimplicialComplex& k, int q) {
  require_in_range(k, q);
  const int n = k.simplex_count(q);
  LaplacianMatrices out;
  out.q = q;
  out.up = Matrix::Zero(n, n);
  out.down = Matrix::Zero(n, n);

  // up part: every (q+1)-simplex contributes its (q+2 choose 2) face pairs
  const int n_up = k.simplex_count(q + 1);
  if (n_up > 0) {
    const Int8Matrix& b = k.boundary_matrix_int8(q + 1);
    for (int col = 0; col < n_up; ++col) {
      const double w_coface = k.weight(q + 1, col);
      const Simplex& coface = k.simplices(q + 1)[col];
      std::vector<std::pair<int, double>> faces;  // (row, sign)
      faces.reserve(q + 2);
      for (int i = 0; i <= q + 1; ++i) {
        const int row = *k.index_of(coface.facet(i));
        faces.emplace_back(row, static_cast<double>(b(row, col)));
      }
      for (const auto& [ri, si] : faces)
        for (const auto& [rj, sj] : faces) {
          // degree on the diagonal, signed adjacency off it; the column
          // scaling by 1/w(face_j) matches the boundary-product form
          out.up(ri, rj) += si * sj * w_coface / k.weight(q, rj);
        }
    }
  }

  // down part: q-simplices sharing a facet
  if (q > 0 && n > 0) {
    const Int8Matrix& b = k.boundary_matrix_int8(q);
    const int n_dn = k.simplex_count(q - 1);
    for (int row = 0; row < n_dn; ++row) {
      std::vector<std::pair<int, double>> cofaces;  // (col, sign)
      for (int col = 0; col < n; ++col)
        if (b(row, col) != 0) cofaces.emplace_back(col, static_cast<double>(b(row, col)));
      const double w_facet = k.weight(q - 1, row);
      for (const auto& [ci, si] : cofaces)
        for (const auto& [cj, sj] : cofaces)
          out.down(ci, cj) += si * sj * k.weight(q, ci) / w_facet;
    }
  }

  out.full = out.up + out.down;
  return out;
}

Matrix weight_conjugated(const Matrix& m, const std::vector<double>& w) {
  if (m.rows() != m.cols() || m.rows() != static_cast<Eigen::Index>(w.size()))
    throw DomainError("weight_conjugated: matrix and weight sizes disagree");
  bool unit = true;
  for (double x : w)
    if (x != 1.0) unit = false;
  if (unit) return m;
  Vector sqrt_w(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) sqrt_w[i] = std::sqrt(w[i]);
  return sqrt_w.cwiseInverse().asDiagonal() * m * sqrt_w.asDiagonal();
}

int betti(const SimplicialComplex& k, int q, const Tolerances& tol) {
  require_in_range(k, q);
  const LaplacianMatrices l = laplacian(k, q);
  return nullity(weight_conjugated(l.full, k.weights(q)), tol);
}

Spectrum laplacian_spectrum(const SimplicialComplex& k, int q, LaplacianPart part,
                            const Tolerances& tol) {
  require_in_range(k, q);
  const LaplacianMatrices l = laplacian(k, q);
  const Matrix& m = part == LaplacianPart::up ? l.up
                    : part == LaplacianPart::down ? l.down
                                                  : l.full;
  return eigenvalues_sym(weight_conjugated(m, k.weights(q)), tol);
}

}  // namespace perslap
