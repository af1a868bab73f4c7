#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

#include <perslap/complex.hpp>
#include <perslap/random.hpp>
#include <perslap/types.hpp>

// Hand-built matrices and small named complexes shared across tests.
namespace fixtures {

inline perslap::Matrix mat(std::initializer_list<std::initializer_list<double>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  perslap::Matrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline double max_abs_diff(const perslap::Matrix& a, const perslap::Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return 1e300;
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

inline perslap::Matrix random_matrix(perslap::Rng& rng, int rows, int cols) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  perslap::Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = u(rng);
  return m;
}

/// B B^T with B of size n x (n - rank_deficit); PSD, rank n - rank_deficit a.s.
inline perslap::Matrix random_psd(perslap::Rng& rng, int n, int rank_deficit = 0) {
  const int k = std::max(1, n - rank_deficit);
  const perslap::Matrix b = random_matrix(rng, n, k);
  return b * b.transpose();
}

inline perslap::SimplicialComplex single_edge() {
  return perslap::ComplexBuilder().add({0, 1}).build();
}

inline perslap::SimplicialComplex three_cycle() {
  return perslap::ComplexBuilder().add({0, 1}).add({1, 2}).add({0, 2}).build();
}

inline perslap::SimplicialComplex filled_triangle() {
  return perslap::ComplexBuilder().add({0, 1, 2}).build();
}

inline perslap::SimplicialComplex tetrahedron() {
  return perslap::ComplexBuilder().add({0, 1, 2, 3}).build();
}

inline perslap::SimplicialComplex tetrahedron_boundary() {
  return perslap::ComplexBuilder()
      .add({0, 1, 2})
      .add({0, 1, 3})
      .add({0, 2, 3})
      .add({1, 2, 3})
      .build();
}

/// Six-vertex triangulation of the real projective plane: beta = (1, 0, 0)
/// over the rationals with 2-torsion in first homology.
inline perslap::SimplicialComplex projective_plane() {
  perslap::ComplexBuilder b;
  const int tri[10][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                          {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}};
  for (const auto& t : tri) b.add({t[0], t[1], t[2]});
  return b.build();
}

inline perslap::SimplicialComplex path_graph(int edges) {
  perslap::ComplexBuilder b;
  for (int i = 0; i < edges; ++i) b.add({i, i + 1});
  return b.build();
}

/// The four-point counterexample graph: vertices 1,2,3,4 in that order,
/// edges [1,3], [3,4], [2,4] in that order.
inline perslap::SimplicialComplex counterexample_graph() {
  return perslap::ComplexBuilder()
      .add({1})
      .add({2})
      .add({3})
      .add({4})
      .add({1, 3})
      .add({3, 4})
      .add({2, 4})
      .build();
}

/// The counterexample pair: K = vertices {1, 2} inside the graph above.
inline perslap::SimplicialPair counterexample_pair() {
  const perslap::SimplicialComplex k = perslap::ComplexBuilder().add({1}).add({2}).build();
  return perslap::make_pair(k, counterexample_graph());
}

/// Vertex 0 joined to vertex 1 by disjoint paths of the given lengths
/// (at most one length may be 1; interior vertices are fresh ids from 2 up).
inline perslap::SimplicialComplex parallel_paths_graph(const std::vector<int>& lengths) {
  perslap::ComplexBuilder b;
  b.add({0}).add({1});
  int next = 2;
  for (int len : lengths) {
    int prev = 0;
    for (int step = 1; step < len; ++step) {
      b.add({prev, next});
      prev = next++;
    }
    b.add({prev, 1});
  }
  return b.build();
}

/// K = the two endpoint vertices inside the parallel-paths graph.
inline perslap::SimplicialPair parallel_paths_pair(const std::vector<int>& lengths) {
  const perslap::SimplicialComplex k = perslap::ComplexBuilder().add({0}).add({1}).build();
  return perslap::make_pair(k, parallel_paths_graph(lengths));
}

}  // namespace fixtures
