#include "support/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

std::size_t rows(const RationalMatrix& m) { return m.size(); }
std::size_t cols(const RationalMatrix& m) { return m.empty() ? 0 : m[0].size(); }

// Reduced row echelon form in place; returns the pivot column of each
// eliminated row.
std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols(m) && row < rows(m); ++col) {
    std::size_t pivot = row;
    while (pivot < rows(m) && m[pivot][col] == 0) ++pivot;
    if (pivot == rows(m)) continue;
    std::swap(m[row], m[pivot]);
    const Rational inv = m[row][col];
    for (auto& x : m[row]) x /= inv;
    for (std::size_t r = 0; r < rows(m); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < cols(m); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RationalMatrix from_int8(const perslap::Int8Matrix& m) {
  RationalMatrix out(static_cast<std::size_t>(m.rows()),
                     std::vector<Rational>(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(m(i, j));
    }
  }
  return out;
}

RationalMatrix from_double(const perslap::Matrix& m) {
  RationalMatrix out(static_cast<std::size_t>(m.rows()),
                     std::vector<Rational>(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rational(m(i, j));
    }
  }
  return out;
}

IntMatrix int_from_int8(const perslap::Int8Matrix& m) {
  IntMatrix out(static_cast<std::size_t>(m.rows()),
                std::vector<Int>(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(m(i, j));
    }
  }
  return out;
}

int rank_exact(RationalMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<Rational>> kernel_exact(RationalMatrix m) {
  const std::size_t n = cols(m);
  const std::vector<std::size_t> pivots = rref(m);

  std::vector<char> is_pivot(n, 0);
  for (std::size_t p : pivots) is_pivot[p] = 1;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -m[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Int> smith_invariant_factors(IntMatrix m) {
  const std::size_t nr = m.size();
  const std::size_t nc = nr == 0 ? 0 : m[0].size();
  std::vector<Int> factors;

  std::size_t corner = 0;
  while (true) {
    // pick the smallest nonzero entry of the remaining block as pivot
    std::size_t pi = corner, pj = corner;
    bool found = false;
    for (std::size_t i = corner; i < nr; ++i) {
      for (std::size_t j = corner; j < nc; ++j) {
        if (m[i][j] == 0) continue;
        if (!found || abs(m[i][j]) < abs(m[pi][pj])) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    }
    if (!found) break;
    std::swap(m[corner], m[pi]);
    for (std::size_t i = 0; i < nr; ++i) std::swap(m[i][corner], m[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = corner + 1; i < nr; ++i) {
        if (m[i][corner] == 0) continue;
        const Int q = m[i][corner] / m[corner][corner];
        for (std::size_t j = corner; j < nc; ++j) m[i][j] -= q * m[corner][j];
        if (m[i][corner] != 0) {  // remainder smaller than pivot: swap up and redo
          std::swap(m[corner], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = corner + 1; j < nc; ++j) {
        if (m[corner][j] == 0) continue;
        const Int q = m[corner][j] / m[corner][corner];
        for (std::size_t i = corner; i < nr; ++i) m[i][j] -= q * m[i][corner];
        if (m[corner][j] != 0) {
          for (std::size_t i = corner; i < nr; ++i) std::swap(m[i][corner], m[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot must divide every remaining entry; fold a violating row in
      for (std::size_t i = corner + 1; i < nr && clean; ++i) {
        for (std::size_t j = corner + 1; j < nc && clean; ++j) {
          if (m[i][j] % m[corner][corner] != 0) {
            for (std::size_t c = corner; c < nc; ++c) m[corner][c] += m[i][c];
            clean = false;
          }
        }
      }
    }
    factors.push_back(abs(m[corner][corner]));
    ++corner;
    if (corner >= nr || corner >= nc) break;
  }
  return factors;
}

namespace {

IntMatrix boundary_or_zero(const perslap::SimplicialComplex& c, int q) {
  if (q < 0 || q > c.dimension()) {
    const int rows = q >= 1 ? c.simplex_count(q - 1) : 0;
    return IntMatrix(static_cast<std::size_t>(rows));
  }
  return int_from_int8(c.boundary_matrix_int8(q));
}

int smith_rank(const IntMatrix& m) {
  return static_cast<int>(smith_invariant_factors(m).size());
}

}  // namespace

int betti_exact(const perslap::SimplicialComplex& c, int q) {
  if (q < 0 || q > c.dimension()) return 0;
  // the q = 0 boundary map is zero, matching the library convention
  const int rank_down = q == 0 ? 0 : smith_rank(boundary_or_zero(c, q));
  const int rank_up = smith_rank(boundary_or_zero(c, q + 1));
  return c.simplex_count(q) - rank_down - rank_up;
}

std::vector<Int> torsion_exact(const perslap::SimplicialComplex& c, int q) {
  std::vector<Int> torsion;
  for (const Int& f : smith_invariant_factors(boundary_or_zero(c, q + 1))) {
    if (f > 1) torsion.push_back(f);
  }
  return torsion;
}

int persistent_betti_exact(const perslap::SimplicialPair& pair, int q) {
  const perslap::SimplicialComplex& k = pair.sub();
  const perslap::SimplicialComplex& l = pair.ambient();
  if (q < 0 || q > k.dimension()) return 0;

  // cycles of the subcomplex: everything at q = 0 (the boundary map is zero)
  std::vector<std::vector<Rational>> cycles;
  if (q == 0) {
    const std::size_t n = static_cast<std::size_t>(k.simplex_count(0));
    cycles.assign(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) cycles[i][i] = 1;
  } else {
    cycles = kernel_exact(from_int8(k.boundary_matrix_int8(q)));
  }

  // columns: padded cycle vectors of K, then the ambient (q+1)-boundary
  const std::size_t n_ambient = static_cast<std::size_t>(l.simplex_count(q));
  RationalMatrix up = q + 1 <= l.dimension()
                          ? from_int8(l.boundary_matrix_int8(q + 1))
                          : RationalMatrix(n_ambient, std::vector<Rational>());
  const std::size_t n_up = up.empty() ? 0 : up[0].size();

  RationalMatrix joint(n_ambient, std::vector<Rational>(cycles.size() + n_up, Rational(0)));
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (std::size_t r = 0; r < cycles[c].size(); ++r) joint[r][c] = cycles[c][r];
  }
  for (std::size_t r = 0; r < n_ambient; ++r) {
    for (std::size_t c = 0; c < n_up; ++c) joint[r][cycles.size() + c] = up[r][c];
  }
  RationalMatrix up_only(n_ambient, std::vector<Rational>(n_up));
  for (std::size_t r = 0; r < n_ambient; ++r) {
    for (std::size_t c = 0; c < n_up; ++c) up_only[r][c] = up[r][c];
  }
  return rank_exact(std::move(joint)) - rank_exact(std::move(up_only));
}

Rational resistance_exact(const perslap::SimplicialComplex& graph, perslap::VertexId v,
                          perslap::VertexId w) {
  const auto& verts = graph.simplices(0);
  std::map<perslap::VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i].vertices()[0]] = i;
  if (!pos.count(v) || !pos.count(w) || v == w) {
    throw std::invalid_argument("resistance_exact needs two distinct graph vertices");
  }
  const std::size_t n = verts.size();

  RationalMatrix lap(n, std::vector<Rational>(n, Rational(0)));
  if (graph.dimension() >= 1) {
    const auto& edges = graph.simplices(1);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const std::size_t a = pos.at(edges[e].vertices()[0]);
      const std::size_t b = pos.at(edges[e].vertices()[1]);
      const Rational c(graph.weight(1, static_cast<int>(e)));
      lap[a][a] += c;
      lap[b][b] += c;
      lap[a][b] -= c;
      lap[b][a] -= c;
    }
  }

  // ground w: drop its row and column, solve for the potential, read R at v
  const std::size_t ground = pos.at(w);
  const std::size_t source = pos.at(v);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != ground) keep.push_back(i);
  }
  RationalMatrix system(keep.size(), std::vector<Rational>(keep.size() + 1, Rational(0)));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) system[i][j] = lap[keep[i]][keep[j]];
    system[i][keep.size()] = keep[i] == source ? Rational(-1) : Rational(0);
  }
  const std::vector<std::size_t> pivots = rref(system);
  if (pivots.size() != keep.size()) {
    throw std::invalid_argument("resistance_exact needs a connected graph");
  }
  // fully reduced system: the row with pivot column i states x_i = rhs
  Rational potential_v(0);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] != source) continue;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (pivots[r] == i) potential_v = system[r][keep.size()];
    }
  }
  return -potential_v;
}

int components_touched(const perslap::SimplicialPair& pair) {
  const auto& verts = pair.ambient().simplices(0);
  std::map<perslap::VertexId, int> pos;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    pos[verts[i].vertices()[0]] = static_cast<int>(i);
  }
  std::vector<int> parent(verts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  };
  if (pair.ambient().dimension() >= 1) {
    for (const perslap::Simplex& e : pair.ambient().simplices(1)) {
      parent[static_cast<std::size_t>(find(pos.at(e.vertices()[0])))] =
          find(pos.at(e.vertices()[1]));
    }
  }
  std::vector<int> roots;
  for (const perslap::Simplex& kv : pair.sub().simplices(0)) {
    roots.push_back(find(pos.at(kv.vertices()[0])));
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return static_cast<int>(roots.size());
}

double to_double(const Rational& r) { return static_cast<double>(r); }

}  // namespace oracle
