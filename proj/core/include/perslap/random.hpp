#pragma once

#include <random>

#include "perslap/complex.hpp"

namespace perslap {

using Rng = std::mt19937_64;

/// Downward-closed random complex: the given number of vertices plus random
/// simplices of each dimension up to max_dim, auto-closed.  Weighted draws
/// put weights in [0.5, 2] on the explicitly added simplices.
SimplicialComplex random_complex(Rng& rng, int vertices, int max_dim, bool weighted = false);

/// Random subcomplex of a random complex (closed downward, weights inherited,
/// never empty), paired with it.
SimplicialPair random_pair(Rng& rng, int vertices, int max_dim, bool weighted = false);

/// Random filtration: vertex births on an integer grid, simplex births as the
/// maximum over the vertices, top-dimensional simplices delayed by a random
/// extra step so the grid is not just the vertex values.
Filtration random_filtration(Rng& rng, int vertices, int max_dim, int grid_points,
                             bool weighted = false);

/// Connected graph on exactly n labeled vertices: random spanning tree plus
/// independent extra edges.
SimplicialComplex random_connected_graph(Rng& rng, int n, double extra_edge_probability = 0.3,
                                         bool weighted = false);

/// Random complex of dimension exactly 2 built from random triangles, with
/// conductance weights on the triangles and unit weights below.
SimplicialComplex random_network_2d(Rng& rng, int vertices, bool weighted = true);

/// Graph pair for Cheeger-style checks: a random (possibly disconnected)
/// graph L on n vertices with at most 16 edges and a subgraph K on a random
/// vertex subset of size >= 2.
SimplicialPair random_graph_pair(Rng& rng, int n);

}  // namespace perslap
