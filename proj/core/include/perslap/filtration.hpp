#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "perslap/complex.hpp"
#include "perslap/types.hpp"

namespace perslap {

/// Persistent up-Laplacians of every pair (s, t) with fixed t: up[i] is the
/// operator matrix of the pair (s_values[i], t), written over the first
/// count_at(q, s_values[i]) simplices of the filtration order.
struct AllPairsResult {
  int q = 0;
  double t = 0.0;
  std::vector<double> s_values;
  std::vector<Matrix> up;
};

/// Computes all persistent up-Laplacians ending at t in one sweep: starting
/// from the up-Laplacian of the slice at t, trailing indices are eliminated
/// one at a time (a single generalized-Schur step each; a zero diagonal
/// entry, relative to pivot_tol, just drops its row and column), recording
/// the matrix whenever the size reaches the q-simplex count of a grid value.
/// Requires t to be one of the grid values.
AllPairsResult all_pairs_up_laplacians(const Filtration& f, int q, double t,
                                       const Tolerances& tol = {});

/// The k-th smallest persistent eigenvalue over every grid pair s <= t
/// (1-based k).  values[i][j] holds the value for s = grid[i], t = grid[j];
/// entries with j < i stay empty, as do pairs whose starting slice has fewer
/// than k q-simplices.  With up_only unset the down part of the starting
/// slice is added before diagonalizing.
struct PersistentEigenvalueFunction {
  int q = 0;
  int k = 1;
  bool up_only = true;
  std::vector<double> grid;
  std::vector<std::vector<std::optional<double>>> values;
};

PersistentEigenvalueFunction persistent_eigenvalue_function(const Filtration& f, int q, int k,
                                                            bool up_only = true,
                                                            const Tolerances& tol = {});

/// One broken instance of an eigenvalue comparison that the theory says must
/// hold.  `relation` names the comparison, the times list the grid values
/// involved, k is the eigenvalue index, and lhs <= rhs + slack failed.
struct MonotonicityViolation {
  std::string relation;
  std::vector<double> times;
  int k = 1;
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Exhaustively checks, over all grid triples s <= t <= u (and quadruples for
/// the four-point comparison), that up-persistent eigenvalues only grow when
/// the interval grows and that full-Laplacian eigenvalues grow with the right
/// endpoint.  Returns every violation beyond `slack`; empty means clean.
std::vector<MonotonicityViolation> check_monotonicity(const Filtration& f, int q,
                                                      double slack = 1e-8,
                                                      const Tolerances& tol = {});

/// Interleaving distance between two filtrations over the same vertex set:
/// the largest birth shift of any simplex when both filtrations build the
/// same complex, +infinity otherwise.  Filtrations over different vertex
/// sets are refused.
double interleaving_distance(const Filtration& a, const Filtration& b);

/// A nonnegative function of closed intervals [a, b]; empty optional where
/// undefined.
using IntervalFunction = std::function<std::optional<double>(double, double)>;

/// The k-th up-persistent eigenvalue of f as an interval function
/// I = [a, b] -> lambda_k(pair (a, b)), memoized on the filtration's grid.
IntervalFunction eigenvalue_interval_function(const Filtration& f, int q, int k,
                                              const Tolerances& tol = {});

/// Smallest grid-resolvable eps >= 0 such that enlarging either function's
/// interval by eps dominates the other: f([a-eps, b+eps]) >= g([a, b]) and
/// vice versa for every grid interval.  Comparisons where either side is
/// undefined are skipped, which also covers enlarged intervals reaching
/// below the range where a function exists; +infinity when no candidate
/// eps works.
double interleaving_distance_functions(const IntervalFunction& f, const IntervalFunction& g,
                                       std::span<const double> grid);

}  // namespace perslap
