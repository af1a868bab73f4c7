#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace perslap {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Int8Matrix = Eigen::Matrix<std::int8_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Relative tolerances used for every rank, kernel and pivot decision.
///
/// rank_tol cuts off eigenvalues/singular values relative to the largest one;
/// pivot_tol is the relative zero test applied to pivots during column
/// reduction and to diagonal entries during one-index Kron elimination.
struct Tolerances {
  double rank_tol = 1e-10;
  double pivot_tol = 1e-12;
};

/// Eigenvalues in ascending order, together with the tolerances that were in
/// force when they were computed.
struct Spectrum {
  std::vector<double> values;
  Tolerances tol;

  /// Number of eigenvalues that count as zero: |lambda| <= rank_tol * |lambda|_max.
  int multiplicity_of_zero() const {
    if (values.empty()) return 0;
    double top = 0.0;
    for (double v : values) top = std::max(top, std::abs(v));
    if (top == 0.0) return static_cast<int>(values.size());
    int count = 0;
    for (double v : values)
      if (std::abs(v) <= tol.rank_tol * top) ++count;
    return count;
  }
};

/// Malformed input text (complex/filtration files and friends).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structurally valid input that violates a precondition of the requested
/// operation (index out of range, disconnected graph, weight mismatch, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An internal cross-check failed: two routes that must agree did not.
struct SelfCheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace perslap
