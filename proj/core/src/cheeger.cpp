#include "perslap/cheeger.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <string>

#include "perslap/laplacian.hpp"
#include "perslap/linalg.hpp"
#include "perslap/persistent.hpp"

namespace perslap {

namespace {

constexpr int kMaxEdges = 16;        // edge-distinctness masks fit a 16-bit word
constexpr int kMaxSplitVertices = 10;  // 2^|V_K| splits
constexpr double kInequalitySlack = 1e-8;

// Adjacency view of a graph's 1-skeleton with vertices renumbered to
// positions 0..n-1 (position order = label order).
struct EdgeGraph {
  std::vector<VertexId> labels;
  std::map<VertexId, int> position;
  struct Arc {
    int neighbor;
    int edge;
  };
  std::vector<std::vector<Arc>> adjacency;
  int edge_count = 0;
};

EdgeGraph edge_graph(const SimplicialComplex& l) {
  EdgeGraph g;
  for (const Simplex& v : l.simplices(0)) g.labels.push_back(v.vertices()[0]);
  for (std::size_t i = 0; i < g.labels.size(); ++i) g.position[g.labels[i]] = static_cast<int>(i);
  g.adjacency.resize(g.labels.size());
  if (l.dimension() >= 1) {
    const auto& edges = l.simplices(1);
    g.edge_count = static_cast<int>(edges.size());
    if (g.edge_count > kMaxEdges) {
      throw DomainError("trail enumeration supports at most " + std::to_string(kMaxEdges) +
                        " edges, got " + std::to_string(g.edge_count));
    }
    for (int e = 0; e < g.edge_count; ++e) {
      const int a = g.position.at(edges[static_cast<std::size_t>(e)].vertices()[0]);
      const int b = g.position.at(edges[static_cast<std::size_t>(e)].vertices()[1]);
      g.adjacency[static_cast<std::size_t>(a)].push_back({b, e});
      g.adjacency[static_cast<std::size_t>(b)].push_back({a, e});
    }
    for (auto& arcs : g.adjacency) {
      std::sort(arcs.begin(), arcs.end(),
                [](const EdgeGraph::Arc& x, const EdgeGraph::Arc& y) {
                  return std::pair(x.neighbor, x.edge) < std::pair(y.neighbor, y.edge);
                });
    }
  }
  return g;
}

std::vector<int> to_positions(const EdgeGraph& g, std::span<const VertexId> vertices,
                              const char* role) {
  if (vertices.empty()) throw DomainError(std::string(role) + " vertex set is empty");
  std::vector<int> positions;
  for (VertexId v : vertices) {
    auto it = g.position.find(v);
    if (it == g.position.end()) {
      throw DomainError(std::string(role) + " vertex " + std::to_string(v) +
                        " is not in the graph");
    }
    positions.push_back(it->second);
  }
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  return positions;
}

// Depth-first walk over unused edges.  `targets` marks recording positions;
// `interior_block` (when given) marks vertices a trail may touch only as an
// endpoint of the walk so far, which is the strong-trail condition.
void collect_trails(const EdgeGraph& g, const std::vector<char>& targets,
                    const std::vector<char>* interior_block, std::vector<int>& path,
                    std::uint32_t used, std::vector<Trail>& out) {
  const int cur = path.back();
  if (targets[static_cast<std::size_t>(cur)]) {
    Trail t;
    for (int p : path) t.vertices.push_back(g.labels[static_cast<std::size_t>(p)]);
    out.push_back(std::move(t));
  }
  if (interior_block && path.size() > 1 && (*interior_block)[static_cast<std::size_t>(cur)]) {
    return;
  }
  for (const EdgeGraph::Arc& arc : g.adjacency[static_cast<std::size_t>(cur)]) {
    const std::uint32_t bit = std::uint32_t{1} << arc.edge;
    if (used & bit) continue;
    path.push_back(arc.neighbor);
    collect_trails(g, targets, interior_block, path, used | bit, out);
    path.pop_back();
  }
}

TrailSet enumerate(const SimplicialComplex& l, std::span<const VertexId> a,
                   std::span<const VertexId> b, bool strong) {
  const EdgeGraph g = edge_graph(l);
  const std::vector<int> starts = to_positions(g, a, "source");
  const std::vector<int> ends = to_positions(g, b, "target");

  std::vector<char> targets(g.labels.size(), 0);
  for (int p : ends) targets[static_cast<std::size_t>(p)] = 1;
  std::vector<char> block(g.labels.size(), 0);
  for (int p : starts) block[static_cast<std::size_t>(p)] = 1;
  for (int p : ends) block[static_cast<std::size_t>(p)] = 1;

  TrailSet set;
  std::vector<int> path;
  for (int s : starts) {
    path.assign(1, s);
    collect_trails(g, targets, strong ? &block : nullptr, path, 0, set.trails);
  }
  return set;
}

// Counting twin of collect_trails: accumulates, per end position, the trail
// count or the reciprocal-length sum instead of materializing anything.
void tally_trails(const EdgeGraph& g, const std::vector<char>* interior_block, int cur,
                  std::uint32_t used, int depth, Vector& counts, Vector* inverse_lengths) {
  if (depth > 0) {
    counts(cur) += 1.0;
    if (inverse_lengths) (*inverse_lengths)(cur) += 1.0 / depth;
  }
  if (interior_block && depth > 0 && (*interior_block)[static_cast<std::size_t>(cur)]) return;
  for (const EdgeGraph::Arc& arc : g.adjacency[static_cast<std::size_t>(cur)]) {
    const std::uint32_t bit = std::uint32_t{1} << arc.edge;
    if (used & bit) continue;
    tally_trails(g, interior_block, arc.neighbor, used | bit, depth + 1, counts,
                 inverse_lengths);
  }
}

Matrix pairwise(const SimplicialComplex& l, std::span<const VertexId> vertices, bool strong) {
  const EdgeGraph g = edge_graph(l);
  const std::vector<int> positions = to_positions(g, vertices, "listed");
  std::vector<char> block(g.labels.size(), 0);
  for (int p : positions) block[static_cast<std::size_t>(p)] = 1;

  const int n = static_cast<int>(positions.size());
  Matrix out = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    Vector counts = Vector::Zero(static_cast<Eigen::Index>(g.labels.size()));
    Vector inverse = Vector::Zero(static_cast<Eigen::Index>(g.labels.size()));
    tally_trails(g, strong ? &block : nullptr, positions[static_cast<std::size_t>(i)], 0, 0,
                 counts, strong ? &inverse : nullptr);
    const Vector& row = strong ? inverse : counts;
    for (int j = 0; j < n; ++j) out(i, j) = row(positions[static_cast<std::size_t>(j)]);
  }
  return out;
}

std::vector<VertexId> split_vertices(const SimplicialPair& pair) {
  if (pair.sub().dimension() > 1 || pair.ambient().dimension() > 1) {
    throw DomainError("Cheeger constants are defined for graph pairs");
  }
  if (!pair.sub().has_unit_weights() || !pair.ambient().has_unit_weights()) {
    throw DomainError("Cheeger constants are defined for unweighted graphs");
  }
  std::vector<VertexId> vk;
  for (const Simplex& v : pair.sub().simplices(0)) vk.push_back(v.vertices()[0]);
  if (vk.size() < 2) throw DomainError("the subcomplex needs at least 2 vertices");
  if (vk.size() > kMaxSplitVertices) {
    throw DomainError("split enumeration supports at most " +
                      std::to_string(kMaxSplitVertices) + " subcomplex vertices");
  }
  return vk;
}

// Minimum of |V_K| * cross(A, V_K \ A) / (|A| |V_K \ A|) with cross summed
// from a pairwise per-split-part matrix.  Complement symmetry lets the scan
// fix vertex 0 in A.
double minimize_over_splits(const Matrix& pairwise_values) {
  const int n = static_cast<int>(pairwise_values.rows());
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); mask += 2) {
    const int size_a = std::popcount(mask);
    if (size_a == n) continue;
    double cross = 0.0;
    for (int i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int j = 0; j < n; ++j) {
        if (mask >> j & 1) continue;
        cross += pairwise_values(i, j);
      }
    }
    best = std::min(best, n * cross / (size_a * (n - size_a)));
  }
  return best;
}

}  // namespace

double TrailSet::inverse_length_sum() const {
  double sum = 0.0;
  for (const Trail& t : trails) {
    if (t.length() == 0) {
      throw DomainError("reciprocal-length sum is undefined for a length-0 trail");
    }
    sum += 1.0 / t.length();
  }
  return sum;
}

TrailSet enumerate_trails(const SimplicialComplex& l, std::span<const VertexId> a,
                          std::span<const VertexId> b) {
  return enumerate(l, a, b, false);
}

TrailSet enumerate_strong_trails(const SimplicialComplex& l, std::span<const VertexId> a,
                                 std::span<const VertexId> b) {
  return enumerate(l, a, b, true);
}

Matrix pairwise_trail_counts(const SimplicialComplex& l, std::span<const VertexId> vertices) {
  return pairwise(l, vertices, false);
}

Matrix pairwise_strong_inverse_lengths(const SimplicialComplex& l,
                                       std::span<const VertexId> vertices) {
  return pairwise(l, vertices, true);
}

double persistent_cheeger(const SimplicialPair& pair) {
  const std::vector<VertexId> vk = split_vertices(pair);
  return minimize_over_splits(pairwise_trail_counts(pair.ambient(), vk));
}

double strong_persistent_cheeger(const SimplicialPair& pair) {
  const std::vector<VertexId> vk = split_vertices(pair);
  return minimize_over_splits(pairwise_strong_inverse_lengths(pair.ambient(), vk));
}

CheegerReport cheeger_report(const SimplicialPair& pair, const Tolerances& tol) {
  CheegerReport report;
  report.h = persistent_cheeger(pair);
  report.h_strong = strong_persistent_cheeger(pair);

  const Matrix full = persistent_laplacian(pair, 0, Method::schur, tol).full;
  report.lambda2 = eigenvalues_sym(full, tol).values.at(1);
  report.inequality_holds = report.lambda2 <= report.h + kInequalitySlack;
  report.conjecture_holds = report.lambda2 <= report.h_strong + kInequalitySlack;
  return report;
}

double classical_cheeger(const SimplicialComplex& l) {
  if (l.dimension() > 1) throw DomainError("classical Cheeger constant is for graphs");
  if (!l.has_unit_weights()) throw DomainError("classical Cheeger constant is for unweighted graphs");
  const EdgeGraph g = edge_graph(l);
  const int n = static_cast<int>(g.labels.size());
  if (n < 2) throw DomainError("the graph needs at least 2 vertices");
  if (n > kMaxEdges) {
    throw DomainError("split enumeration supports at most " + std::to_string(kMaxEdges) +
                      " vertices");
  }

  Matrix adjacency = Matrix::Zero(n, n);
  for (int v = 0; v < n; ++v) {
    for (const EdgeGraph::Arc& arc : g.adjacency[static_cast<std::size_t>(v)]) {
      adjacency(v, arc.neighbor) = 1.0;
    }
  }
  return minimize_over_splits(adjacency);
}

}  // namespace perslap
