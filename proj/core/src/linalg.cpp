#include "perslap/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace perslap {

namespace {

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool nearly_symmetric(const Matrix& m) {
  if (m.rows() != m.cols()) return false;
  if (m.size() == 0) return true;
  const double scale = std::max(1.0, max_abs(m));
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= 1e-8 * scale;
}

// Validated, sorted, deduplicated index set plus its complement.
std::pair<std::vector<int>, std::vector<int>> split_indices(
    Eigen::Index n, std::span<const int> eliminate) {
  std::set<int> elim;
  for (int i : eliminate) {
    if (i < 0 || i >= n)
      throw DomainError("index " + std::to_string(i) + " out of range for a " +
                        std::to_string(n) + "-dimensional matrix");
    elim.insert(i);
  }
  if (elim.empty()) throw DomainError("empty index set");
  if (static_cast<Eigen::Index>(elim.size()) == n)
    throw DomainError("index set must leave at least one row/column");
  std::vector<int> inside(elim.begin(), elim.end());
  std::vector<int> outside;
  outside.reserve(n - inside.size());
  for (int i = 0; i < n; ++i)
    if (!elim.count(i)) outside.push_back(i);
  return {inside, outside};
}

Matrix pick(const Matrix& m, const std::vector<int>& rows,
            const std::vector<int>& cols) {
  Matrix out(rows.size(), cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  return out;
}

}  // namespace

ColumnReduction column_reduce(const Matrix& d, const Tolerances& tol) {
  const Eigen::Index rows = d.rows();
  const Eigen::Index cols = d.cols();
  ColumnReduction out;
  out.reduced = d;
  out.ops = Matrix::Identity(cols, cols);
  const double eps = tol.pivot_tol * max_abs(d);

  // pivot row -> column currently owning it
  std::vector<Eigen::Index> owner(static_cast<size_t>(std::max<Eigen::Index>(rows, 0)), -1);
  auto low = [&](Eigen::Index j) -> Eigen::Index {
    for (Eigen::Index i = rows - 1; i >= 0; --i)
      if (std::abs(out.reduced(i, j)) > eps) return i;
    return -1;
  };

  for (Eigen::Index j = 0; j < cols; ++j) {
    Eigen::Index l = low(j);
    while (l >= 0 && owner[l] >= 0) {
      const Eigen::Index i = owner[l];
      if (std::abs(out.reduced(l, j)) > std::abs(out.reduced(l, i))) {
        // keep the column with the larger pivot as the eliminator
        out.reduced.col(j).swap(out.reduced.col(i));
        out.ops.col(j).swap(out.ops.col(i));
      }
      const double f = out.reduced(l, j) / out.reduced(l, i);
      out.reduced.col(j) -= f * out.reduced.col(i);
      out.ops.col(j) -= f * out.ops.col(i);
      l = low(j);
    }
    if (l >= 0)
      owner[l] = j;
    else
      out.zero_columns.push_back(static_cast<int>(j));
  }
  return out;
}

Matrix kernel_basis(const Matrix& d, const Tolerances& tol) {
  const ColumnReduction cr = column_reduce(d, tol);
  Matrix z(d.cols(), cr.zero_columns.size());
  for (size_t k = 0; k < cr.zero_columns.size(); ++k)
    z.col(k) = cr.ops.col(cr.zero_columns[k]);
  return z;
}

Matrix pseudoinverse(const Matrix& m, const Tolerances& tol) {
  if (m.size() == 0) return Matrix::Zero(m.cols(), m.rows());
  if (nearly_symmetric(m)) {
    const Matrix sym = 0.5 * (m + m.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
    const Vector& vals = es.eigenvalues();
    const double top = vals.cwiseAbs().maxCoeff();
    const double cut = tol.rank_tol * top;
    Vector inv = Vector::Zero(vals.size());
    for (Eigen::Index i = 0; i < vals.size(); ++i)
      if (std::abs(vals[i]) > cut) inv[i] = 1.0 / vals[i];
    return es.eigenvectors() * inv.asDiagonal() *
           es.eigenvectors().transpose();
  }
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& sv = svd.singularValues();
  const double cut = sv.size() == 0 ? 0.0 : tol.rank_tol * sv.maxCoeff();
  Vector inv = Vector::Zero(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > cut) inv[i] = 1.0 / sv[i];
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

Spectrum eigenvalues_sym(const Matrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols())
    throw DomainError("eigenvalues_sym requires a square matrix");
  if (!nearly_symmetric(m))
    throw DomainError("eigenvalues_sym requires a symmetric matrix");
  Spectrum s;
  s.tol = tol;
  if (m.size() == 0) return s;
  const Matrix sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym, Eigen::EigenvaluesOnly);
  s.values.assign(es.eigenvalues().data(),
                  es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(s.values.begin(), s.values.end());
  return s;
}

int rank(const Matrix& m, const Tolerances& tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const Vector& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double cut = tol.rank_tol * sv.maxCoeff();
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > cut) ++r;
  return r;
}

int nullity(const Matrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols())
    throw DomainError("nullity requires a square matrix");
  return eigenvalues_sym(m, tol).multiplicity_of_zero();
}

Matrix schur_complement(const Matrix& m, std::span<const int> eliminate,
                        const Tolerances& tol) {
  if (m.rows() != m.cols())
    throw DomainError("schur_complement requires a square matrix");
  const auto [inside, outside] = split_indices(m.rows(), eliminate);
  const Matrix d = pick(m, inside, inside);
  const Matrix b = pick(m, outside, inside);
  const Matrix c = pick(m, inside, outside);
  const Matrix a = pick(m, outside, outside);
  return a - b * pseudoinverse(d, tol) * c;
}

bool is_proper(const Matrix& m, std::span<const int> eliminate,
               const Tolerances& tol) {
  if (m.rows() != m.cols())
    throw DomainError("is_proper requires a square matrix");
  const auto [inside, outside] = split_indices(m.rows(), eliminate);
  const Matrix d = pick(m, inside, inside);
  const Matrix b = pick(m, outside, inside);
  const Matrix c = pick(m, inside, outside);
  const int rank_d = rank(d, tol);

  Matrix stacked(d.rows() + b.rows(), d.cols());
  stacked << d, b;
  if (rank(stacked, tol) != rank_d) return false;

  Matrix beside(d.rows(), d.cols() + c.cols());
  beside << d, c;
  return rank(beside, tol) == rank_d;
}

}  // namespace perslap
