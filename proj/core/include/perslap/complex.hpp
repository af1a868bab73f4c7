#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "perslap/types.hpp"

namespace perslap {

/// Index into the global ordered vertex set.
using VertexId = int;

/// An abstract simplex: a nonempty set of vertices, stored in increasing
/// order.  The increasing order is also the orientation every boundary
/// matrix is written in.
class Simplex {
 public:
  /// Sorts the vertices; rejects empty input, repeated or negative vertices.
  explicit Simplex(std::vector<VertexId> vertices);

  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  const std::vector<VertexId>& vertices() const { return vertices_; }

  /// The facet obtained by dropping the i-th vertex (0-based, increasing order).
  Simplex facet(int i) const;

  bool operator==(const Simplex& other) const = default;
  /// Lexicographic on the increasing vertex sequence.
  bool operator<(const Simplex& other) const { return vertices_ < other.vertices_; }

  std::string to_string() const;

 private:
  struct AlreadySorted {};
  Simplex(std::vector<VertexId> vertices, AlreadySorted) : vertices_(std::move(vertices)) {}

  std::vector<VertexId> vertices_;
};

/// A coefficient vector on the q-simplices of some complex, in that complex's
/// simplex order.
struct Chain {
  int q = 0;
  Vector coeffs;
};

class ComplexBuilder;
class FiltrationBuilder;
class SimplicialPair;
class Filtration;

/// A finite simplicial complex with positive simplex weights.
///
/// Simplices are grouped by dimension; the position of a simplex inside its
/// dimension's list is the row/column it occupies in every matrix derived
/// from the complex.  Instances are immutable and safe to share across
/// threads; boundary matrices are precomputed at construction in signed 8-bit
/// form and widened to double on request.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Size of the global vertex set (one more than the largest vertex id).
  int vertex_count() const { return vertex_count_; }
  /// Largest q with a q-simplex; -1 for the empty complex.
  int dimension() const { return static_cast<int>(simplices_.size()) - 1; }
  /// Number of q-simplices (0 when q is negative or above the dimension).
  int simplex_count(int q) const;
  /// Total number of simplices over all dimensions.
  int total_simplex_count() const;

  const std::vector<Simplex>& simplices(int q) const;
  const std::vector<double>& weights(int q) const;
  double weight(int q, int i) const { return weights(q).at(i); }

  /// Position of the simplex inside its dimension's list, if present.
  std::optional<int> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  /// True when every weight at dimension q is exactly 1 (q = -1: all dims).
  bool has_unit_weights(int q = -1) const;

  /// Signed boundary matrix of dimension q: rows are (q-1)-simplices, columns
  /// are q-simplices; the q = 0 matrix has zero rows.  Entries follow the
  /// increasing-vertex orientation.  Requires 0 <= q <= dimension().
  const Int8Matrix& boundary_matrix_int8(int q) const;
  /// Same, widened to double.  For q > dimension() returns an empty matrix
  /// with simplex_count(q-1) rows, so up-Laplacians at the top dimension come
  /// out as zero matrices of the right size.
  Matrix boundary_matrix(int q) const;

  /// Canonical text form: one simplex per line, dimensions ascending,
  /// non-unit weights appended as "; w=...".  Parsing the output reproduces
  /// the complex exactly.
  std::string to_text() const;

  bool operator==(const SimplicialComplex& other) const;

 private:
  friend class ComplexBuilder;
  friend class FiltrationBuilder;
  friend class Filtration;
  friend SimplicialPair make_pair(const SimplicialComplex&, const SimplicialComplex&);

  void finalize();  // builds index maps + boundary matrices; validates closure

  int vertex_count_ = 0;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::vector<double>> weights_;
  std::vector<std::vector<std::pair<Simplex, int>>> index_;  // sorted per dim
  std::vector<Int8Matrix> boundaries_;
};

/// Assembles a SimplicialComplex while preserving the insertion order of the
/// simplices inside each dimension (the order fixes every matrix basis).
class ComplexBuilder {
 public:
  /// Queue a simplex.  Re-adding an existing simplex with the same weight is
  /// a no-op; with a different weight it throws.
  ComplexBuilder& add(Simplex s, double weight = 1.0);
  ComplexBuilder& add(std::initializer_list<VertexId> vertices, double weight = 1.0);

  /// Missing faces are appended with weight 1 when auto_close is set,
  /// otherwise they are an error.
  SimplicialComplex build(bool auto_close = true) const;

 private:
  std::vector<std::pair<Simplex, double>> entries_;
};

/// A pair K inside L over the same vertex set.  The ambient complex is stored
/// reordered so that for every q the K-simplices occupy the first
/// sub().simplex_count(q) positions, in K's own order; matrix bases of the
/// pair always refer to this ordering.
class SimplicialPair {
 public:
  const SimplicialComplex& sub() const { return sub_; }
  const SimplicialComplex& ambient() const { return ambient_; }

  /// Number of ambient q-simplices that are not in the subcomplex.
  int removed_count(int q) const {
    return ambient_.simplex_count(q) - sub_.simplex_count(q);
  }
  /// Ambient positions of those simplices: sub().simplex_count(q), ..., n_q - 1.
  std::vector<int> removed_indices(int q) const;

 private:
  friend SimplicialPair make_pair(const SimplicialComplex&, const SimplicialComplex&);
  SimplicialComplex sub_;
  SimplicialComplex ambient_;
};

/// Validates that `sub` is a subcomplex of `ambient` with matching weights
/// and builds the pair, reordering the ambient simplex lists as described on
/// SimplicialPair.
SimplicialPair make_pair(const SimplicialComplex& sub, const SimplicialComplex& ambient);

/// A filtered complex: the final complex plus a birth value per simplex, with
/// birth(face) <= birth(coface).  Simplices are ordered by (birth, vertex
/// lexicographic) inside each dimension, so every sublevel set is a prefix.
class Filtration {
 public:
  const SimplicialComplex& max_complex() const { return complex_; }
  /// Sorted distinct birth values.
  const std::vector<double>& grid() const { return grid_; }
  double birth(int q, int i) const { return births_.at(q).at(i); }
  /// Number of q-simplices born at or before t.
  int count_at(int q, double t) const;

  /// The subcomplex of simplices with birth <= t (any real t).
  SimplicialComplex slice(double t) const;
  /// The pair slice(s) inside slice(t); requires s <= t.
  SimplicialPair pair_at(double s, double t) const;

  /// Canonical text form with births appended as "; t=...".
  std::string to_text() const;

 private:
  friend class FiltrationBuilder;
  SimplicialComplex complex_;
  std::vector<std::vector<double>> births_;
  std::vector<double> grid_;
};

/// Assembles a Filtration; ordering is canonicalized, so insertion order does
/// not matter.
class FiltrationBuilder {
 public:
  FiltrationBuilder& add(Simplex s, double birth, double weight = 1.0);
  FiltrationBuilder& add(std::initializer_list<VertexId> vertices, double birth,
                         double weight = 1.0);

  /// Missing faces get weight 1 and the minimum birth of their cofaces when
  /// auto_close is set, otherwise they are an error.  A face explicitly born
  /// after one of its cofaces is always an error.
  Filtration build(bool auto_close = true) const;

 private:
  std::vector<std::pair<Simplex, std::pair<double, double>>> entries_;  // (birth, weight)
};

/// Text format, shared by complexes and filtrations: one simplex per line,
///
///   v0 v1 ... vq [; t=<real>] [; w=<positive real>]
///
/// with '#' starting a comment.  Missing t defaults to 0, missing w to 1.
/// parse_complex ignores birth values; parse_filtration enforces them.  With
/// strict set, files must list every face explicitly.
SimplicialComplex parse_complex(const std::string& text, bool strict = false);
Filtration parse_filtration(const std::string& text, bool strict = false);

}  // namespace perslap
