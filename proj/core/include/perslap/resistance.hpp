#pragma once

#include "perslap/complex.hpp"
#include "perslap/types.hpp"

namespace perslap {

/// A candidate current source: q0+1 distinct vertices spanning a (virtual)
/// q0-simplex whose boundary chain injects and drains current.  The vertex
/// set does not have to be a simplex of the network, but all of its facets
/// must be, or the boundary chain has no coordinates.
struct CurrentGenerator {
  /// Validates q0 >= 1 and |vertices| = q0 + 1 distinct nonnegative ids.
  CurrentGenerator(int q0, std::vector<VertexId> vertices);

  int q0() const { return q0_; }
  const Simplex& simplex() const { return simplex_; }

 private:
  int q0_;
  Simplex simplex_;
};

/// A complex of dimension exactly q0 whose q0-weights are conductances.
/// Weights of every other dimension are forced to 1 at construction, which is
/// part of the definition rather than a convenience.
class SimplicialNetwork {
 public:
  SimplicialNetwork(const SimplicialComplex& complex, int q0);

  int q0() const { return q0_; }
  const SimplicialComplex& complex() const { return complex_; }

 private:
  int q0_;
  SimplicialComplex complex_;
};

struct ResistanceQuery {
  SimplicialNetwork network;
  CurrentGenerator generator;
};

/// The boundary chain of the generator's simplex in k's (q0-1)-basis.
/// Throws when a facet is missing from k.
Vector generator_boundary_vector(const SimplicialComplex& k, const CurrentGenerator& g);

/// Whether current can actually flow: all facets present and the boundary
/// chain lies in the image of the q0-boundary map (rank test).
bool is_current_generator(const SimplicialComplex& k, const CurrentGenerator& g,
                          const Tolerances& tol = {});

/// Effective resistance D^T (up-Laplacian at q0-1)^+ D of the generator's
/// boundary chain D.  The same quadratic form against the full Laplacian is
/// computed as well; the two must agree, and a disagreement beyond 1e-8
/// raises SelfCheckError since it would mean a broken pseudoinverse.
double simplicial_effective_resistance(const SimplicialNetwork& network,
                                       const CurrentGenerator& generator,
                                       const Tolerances& tol = {});
double simplicial_effective_resistance(const ResistanceQuery& query, const Tolerances& tol = {});

/// Graph specialization: the network is the graph with edge weights as
/// conductances and the generator is the vertex pair.  Requires a connected
/// graph and v != w.
double effective_resistance_graph(const SimplicialComplex& l, VertexId v, VertexId w,
                                  const Tolerances& tol = {});

/// The persistent Laplacian of the two-vertex subcomplex {v, w} inside a
/// connected graph, which collapses to (1/R) [[1,-1],[-1,1]] with R the
/// effective resistance.  Both sides are computed and compared before the
/// matrix is returned.
Matrix two_point_persistent_laplacian(const SimplicialComplex& l, VertexId v, VertexId w,
                                      const Tolerances& tol = {});

/// Solves the current-balance equation J = (up-Laplacian) U for the potential
/// U at dimension q0-1.  J must be consistent (orthogonal to the kernel);
/// the residual is re-checked after the solve.
Chain current_balance_solve(const SimplicialNetwork& network, const Chain& j,
                            const Tolerances& tol = {});

/// Whether eliminating the simplices outside the subcomplex preserves the
/// generator's effective resistance: compares the ambient resistance with the
/// quadratic form against the persistent up-Laplacian of the pair, to 1e-8.
/// The generator's facets must all lie in the subcomplex.
bool kron_preservation_check(const SimplicialPair& pair, int q0, const CurrentGenerator& g,
                             const Tolerances& tol = {});

}  // namespace perslap
