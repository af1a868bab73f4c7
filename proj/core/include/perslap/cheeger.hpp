#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "perslap/complex.hpp"
#include "perslap/types.hpp"

namespace perslap {

/// A walk that never repeats an edge, stored as its vertex sequence.
/// Vertices may repeat; a single vertex is a trail of length 0.
struct Trail {
  std::vector<VertexId> vertices;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

struct TrailSet {
  std::vector<Trail> trails;
  std::size_t count() const { return trails.size(); }
  /// Sum of reciprocal lengths.  Refuses sets containing a length-0 trail.
  double inverse_length_sum() const;
};

/// All trails over the graph's edges starting in `a` and ending in `b`,
/// by exhaustive depth-first search (deterministic order: starts ascending,
/// then ascending neighbor choices).  A trail may pass through `b` and
/// continue; every prefix ending in `b` is its own trail.  Guards: at most
/// 16 edges; both sets nonempty and inside the vertex set.
TrailSet enumerate_trails(const SimplicialComplex& l, std::span<const VertexId> a,
                          std::span<const VertexId> b);

/// Same, restricted to trails whose interior vertices all avoid the union
/// of `a` and `b`.
TrailSet enumerate_strong_trails(const SimplicialComplex& l, std::span<const VertexId> a,
                                 std::span<const VertexId> b);

/// counts(i, j) = number of trails of length >= 1 from vertices[i] to
/// vertices[j].  One search per row; meant for sweeping many vertex-set
/// splits of one graph, since trail sets over disjoint unions add up.
Matrix pairwise_trail_counts(const SimplicialComplex& l, std::span<const VertexId> vertices);

/// sums(i, j) = sum of 1/length over trails of length >= 1 from vertices[i]
/// to vertices[j] whose interior avoids every listed vertex.  The avoided
/// set is the whole list, which is exactly the situation of the strong
/// constant: there A and B partition the listed set, so A or B makes no
/// difference to the interior condition.
Matrix pairwise_strong_inverse_lengths(const SimplicialComplex& l,
                                       std::span<const VertexId> vertices);

/// min over nonempty proper A of |V_K| |P_L(A, V_K \ A)| / (|A| |V_K \ A|),
/// where P_L counts trails of the ambient graph between the parts of the
/// split.  Guards: unweighted graph pair, 2 <= |V_K| <= 10, |E_L| <= 16.
double persistent_cheeger(const SimplicialPair& pair);

/// Same minimum with the strong trail set and reciprocal-length weighting.
double strong_persistent_cheeger(const SimplicialPair& pair);

struct CheegerReport {
  double lambda2 = 0.0;
  double h = 0.0;
  double h_strong = 0.0;
  /// lambda2 <= h (+1e-8): proved, expected to hold always.
  bool inequality_holds = false;
  /// lambda2 <= h_strong (+1e-8): conjectured, reported but never asserted.
  bool conjecture_holds = false;
};

/// The second-smallest eigenvalue of the persistent Laplacian at dimension 0
/// next to both Cheeger constants of the pair.
CheegerReport cheeger_report(const SimplicialPair& pair, const Tolerances& tol = {});

/// Classical cut-based constant of one graph:
/// min over splits of |V| |E(A, V \ A)| / (|A| |V \ A|).
double classical_cheeger(const SimplicialComplex& l);

}  // namespace perslap
