#include "perslap/random.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace perslap {

namespace {

double random_weight(Rng& rng) { return std::uniform_real_distribution<double>(0.5, 2.0)(rng); }

// Collects random draws, keeping the first weight when a simplex repeats.
class DrawSet {
 public:
  void insert(Simplex s, double weight) { entries_.try_emplace(std::move(s), weight); }
  SimplicialComplex build(bool auto_close = true) const {
    ComplexBuilder builder;
    for (const auto& [simplex, weight] : entries_) builder.add(simplex, weight);
    return builder.build(auto_close);
  }

 private:
  std::map<Simplex, double> entries_;
};

std::vector<VertexId> random_subset(Rng& rng, int n, int size) {
  std::vector<VertexId> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(size));
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

SimplicialComplex random_complex(Rng& rng, int vertices, int max_dim, bool weighted) {
  if (vertices < 1) throw DomainError("random complex needs at least one vertex");
  DrawSet draws;
  for (int v = 0; v < vertices; ++v) {
    draws.insert(Simplex({v}), weighted ? random_weight(rng) : 1.0);
  }
  // Denser in low dimensions, sparser up high; auto-close fills the faces.
  for (int d = 1; d <= max_dim && d < vertices; ++d) {
    const int cap = std::max(1, 2 * vertices / (d + 1));
    const int count = std::uniform_int_distribution<int>(0, cap)(rng);
    for (int i = 0; i < count; ++i) {
      draws.insert(Simplex(random_subset(rng, vertices, d + 1)),
                   weighted ? random_weight(rng) : 1.0);
    }
  }
  return draws.build();
}

SimplicialPair random_pair(Rng& rng, int vertices, int max_dim, bool weighted) {
  SimplicialComplex l = random_complex(rng, vertices, max_dim, weighted);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  // Keep a random simplex subset, then close it downward so every facet of a
  // kept simplex is kept with its ambient weight.
  std::vector<std::vector<char>> keep(static_cast<std::size_t>(l.dimension()) + 1);
  for (int q = 0; q <= l.dimension(); ++q) {
    keep[static_cast<std::size_t>(q)].assign(static_cast<std::size_t>(l.simplex_count(q)), 0);
    for (auto& flag : keep[static_cast<std::size_t>(q)]) flag = coin(rng) < 0.55 ? 1 : 0;
  }
  for (int q = l.dimension(); q >= 1; --q) {
    const auto& level = l.simplices(q);
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (!keep[static_cast<std::size_t>(q)][i]) continue;
      for (int f = 0; f <= q; ++f) {
        keep[static_cast<std::size_t>(q) - 1][static_cast<std::size_t>(
            *l.index_of(level[i].facet(f)))] = 1;
      }
    }
  }
  if (std::none_of(keep[0].begin(), keep[0].end(), [](char c) { return c != 0; })) {
    keep[0][0] = 1;
  }

  ComplexBuilder sub;
  for (int q = 0; q <= l.dimension(); ++q) {
    const auto& level = l.simplices(q);
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (keep[static_cast<std::size_t>(q)][i]) {
        sub.add(level[i], l.weight(q, static_cast<int>(i)));
      }
    }
  }
  return make_pair(sub.build(false), l);
}

Filtration random_filtration(Rng& rng, int vertices, int max_dim, int grid_points,
                             bool weighted) {
  if (grid_points < 1) throw DomainError("random filtration needs a nonempty grid");
  SimplicialComplex shape = random_complex(rng, vertices, max_dim, weighted);
  std::uniform_int_distribution<int> grid_value(0, grid_points - 1);

  std::vector<double> vertex_birth(static_cast<std::size_t>(shape.vertex_count()), 0.0);
  for (auto& b : vertex_birth) b = grid_value(rng);

  FiltrationBuilder builder;
  std::uniform_int_distribution<int> extra(0, 2);
  for (int q = 0; q <= shape.dimension(); ++q) {
    const auto& level = shape.simplices(q);
    for (std::size_t i = 0; i < level.size(); ++i) {
      double birth = 0.0;
      for (VertexId v : level[i].vertices()) {
        birth = std::max(birth, vertex_birth[static_cast<std::size_t>(v)]);
      }
      if (q == shape.dimension() && q > 0) birth += extra(rng);
      builder.add(level[i], birth, shape.weight(q, static_cast<int>(i)));
    }
  }
  return builder.build(false);
}

SimplicialComplex random_connected_graph(Rng& rng, int n, double extra_edge_probability,
                                         bool weighted) {
  if (n < 1) throw DomainError("random graph needs at least one vertex");
  ComplexBuilder builder;
  for (int v = 0; v < n; ++v) builder.add(Simplex({v}));

  std::vector<std::vector<char>> present(static_cast<std::size_t>(n),
                                         std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int v = 1; v < n; ++v) {
    const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
  }
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] &&
          coin(rng) < extra_edge_probability) {
        present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
        builder.add(Simplex({u, v}), weighted ? random_weight(rng) : 1.0);
      }
    }
  }
  return builder.build(false);
}

SimplicialComplex random_network_2d(Rng& rng, int vertices, bool weighted) {
  if (vertices < 3) throw DomainError("a 2-dimensional network needs at least 3 vertices");
  DrawSet draws;
  const int count = std::uniform_int_distribution<int>(2, std::max(2, vertices))(rng);
  for (int i = 0; i < count; ++i) {
    draws.insert(Simplex(random_subset(rng, vertices, 3)), weighted ? random_weight(rng) : 1.0);
  }
  return draws.build();
}

SimplicialPair random_graph_pair(Rng& rng, int n) {
  if (n < 2) throw DomainError("graph pair needs at least 2 vertices");
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  std::vector<std::pair<VertexId, VertexId>> edges;
  do {
    edges.clear();
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng) < 0.4) edges.emplace_back(u, v);
      }
    }
  } while (edges.size() > 16);

  ComplexBuilder ambient;
  for (int v = 0; v < n; ++v) ambient.add(Simplex({v}));
  for (auto [u, v] : edges) ambient.add(Simplex({u, v}));

  const int k_size = std::uniform_int_distribution<int>(2, std::min(n, 10))(rng);
  std::vector<VertexId> vk = random_subset(rng, n, k_size);
  std::vector<char> in_k(static_cast<std::size_t>(n), 0);
  for (VertexId v : vk) in_k[static_cast<std::size_t>(v)] = 1;

  ComplexBuilder sub;
  for (VertexId v : vk) sub.add(Simplex({v}));
  for (auto [u, v] : edges) {
    if (in_k[static_cast<std::size_t>(u)] && in_k[static_cast<std::size_t>(v)] &&
        coin(rng) < 0.5) {
      sub.add(Simplex({u, v}));
    }
  }
  return make_pair(sub.build(false), ambient.build(false));
}

}  // namespace perslap
