#include "perslap/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <utility>

#include "perslap/laplacian.hpp"
#include "perslap/linalg.hpp"
#include "perslap/persistent.hpp"

namespace perslap {

namespace {

// One generalized-Schur step on the last index.  When the diagonal entry is
// zero (up to pivot_tol relative to the current matrix) the whole row and
// column are zero for the operators handled here, so dropping them is the
// correct limit.
void eliminate_last(Matrix& m, double pivot_tol) {
  const Eigen::Index l = m.rows() - 1;
  const double scale = m.size() > 0 ? m.cwiseAbs().maxCoeff() : 0.0;
  const double d = m(l, l);
  Matrix next = m.topLeftCorner(l, l);
  if (std::abs(d) > pivot_tol * scale) {
    next.noalias() -= m.topRightCorner(l, 1) * m.bottomLeftCorner(1, l) / d;
  }
  m = std::move(next);
}

int grid_index_of(const std::vector<double>& grid, double t) {
  auto it = std::lower_bound(grid.begin(), grid.end(), t);
  if (it == grid.end() || *it != t) {
    throw DomainError("time " + std::to_string(t) + " is not a filtration grid value");
  }
  return static_cast<int>(it - grid.begin());
}

std::vector<double> conjugated_eigenvalues(const Matrix& m, const std::vector<double>& weights,
                                           const Tolerances& tol) {
  return eigenvalues_sym(weight_conjugated(m, weights), tol).values;
}

}  // namespace

AllPairsResult all_pairs_up_laplacians(const Filtration& f, int q, double t,
                                       const Tolerances& tol) {
  if (q < 0) throw DomainError("negative dimension");
  const std::vector<double>& grid = f.grid();
  const int jt = grid_index_of(grid, t);

  AllPairsResult result;
  result.q = q;
  result.t = t;

  Matrix cur = up_laplacian(f.slice(t), q);
  for (int i = jt; i >= 0; --i) {
    const Eigen::Index target = f.count_at(q, grid[i]);
    while (cur.rows() > target) eliminate_last(cur, tol.pivot_tol);
    result.s_values.push_back(grid[i]);
    result.up.push_back(cur);
  }
  std::reverse(result.s_values.begin(), result.s_values.end());
  std::reverse(result.up.begin(), result.up.end());
  return result;
}

PersistentEigenvalueFunction persistent_eigenvalue_function(const Filtration& f, int q, int k,
                                                            bool up_only,
                                                            const Tolerances& tol) {
  if (k < 1) throw DomainError("eigenvalue index must be at least 1");
  PersistentEigenvalueFunction out;
  out.q = q;
  out.k = k;
  out.up_only = up_only;
  out.grid = f.grid();
  const int n = static_cast<int>(out.grid.size());
  out.values.assign(n, std::vector<std::optional<double>>(n));

  std::vector<SimplicialComplex> slices;
  slices.reserve(n);
  for (double s : out.grid) slices.push_back(f.slice(s));

  for (int j = 0; j < n; ++j) {
    AllPairsResult pairs = all_pairs_up_laplacians(f, q, out.grid[j], tol);
    for (int i = 0; i <= j; ++i) {
      Matrix m = pairs.up[i];
      if (m.rows() < k) continue;
      if (!up_only) m += down_laplacian(slices[i], q);
      std::vector<double> lam = conjugated_eigenvalues(m, slices[i].weights(q), tol);
      out.values[i][j] = lam[static_cast<std::size_t>(k - 1)];
    }
  }
  return out;
}

std::vector<MonotonicityViolation> check_monotonicity(const Filtration& f, int q, double slack,
                                                      const Tolerances& tol) {
  const std::vector<double>& grid = f.grid();
  const int n = static_cast<int>(grid.size());

  std::vector<SimplicialComplex> slices;
  slices.reserve(n);
  for (double s : grid) slices.push_back(f.slice(s));

  // lam_up[i][j] and lam_full[i][j]: ascending spectra of the pair
  // (grid[i], grid[j]), sized by the q-simplex count at grid[i].
  std::vector<std::vector<std::vector<double>>> lam_up(n), lam_full(n);
  for (int i = 0; i < n; ++i) {
    lam_up[i].resize(n);
    lam_full[i].resize(n);
  }
  for (int j = 0; j < n; ++j) {
    AllPairsResult pairs = all_pairs_up_laplacians(f, q, grid[j], tol);
    for (int i = 0; i <= j; ++i) {
      const std::vector<double>& w = slices[i].weights(q);
      lam_up[i][j] = conjugated_eigenvalues(pairs.up[i], w, tol);
      Matrix full = pairs.up[i] + down_laplacian(slices[i], q);
      lam_full[i][j] = conjugated_eigenvalues(full, w, tol);
    }
  }

  std::vector<MonotonicityViolation> violations;
  auto record = [&](std::string relation, std::vector<double> times, int k, double lhs,
                    double rhs) {
    violations.push_back({std::move(relation), std::move(times), k, lhs, rhs});
  };

  // Up part: a nested interval [t2, t3] inside [t1, t4] never has the larger
  // k-th eigenvalue, for k up to the q-simplex count at t1.  Triples with a
  // shared endpoint are the i == j and l == p cases.
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      for (int l = j; l < n; ++l) {
        for (int p = l; p < n; ++p) {
          if (i == j && l == p) continue;
          const std::size_t limit = lam_up[i][p].size();
          for (std::size_t m = 0; m < limit; ++m) {
            const double inner = lam_up[j][l][m];
            const double outer = lam_up[i][p][m];
            if (inner > outer + slack) {
              record("up:nested-interval", {grid[i], grid[j], grid[l], grid[p]},
                     static_cast<int>(m + 1), inner, outer);
            }
          }
        }
      }
    }
  }

  // Full Laplacian: only growth of the right endpoint is ordered.
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      for (int l = j; l < n; ++l) {
        if (j == l) continue;
        const std::size_t limit = lam_full[i][j].size();
        for (std::size_t m = 0; m < limit; ++m) {
          const double lhs = lam_full[i][j][m];
          const double rhs = lam_full[i][l][m];
          if (lhs > rhs + slack) {
            record("full:right-endpoint", {grid[i], grid[j], grid[l]}, static_cast<int>(m + 1),
                   lhs, rhs);
          }
        }
      }
    }
  }
  return violations;
}

double interleaving_distance(const Filtration& a, const Filtration& b) {
  auto vertex_labels = [](const Filtration& f) {
    std::vector<VertexId> labels;
    const SimplicialComplex& top = f.max_complex();
    for (const Simplex& s : top.simplices(0)) labels.push_back(s.vertices()[0]);
    std::sort(labels.begin(), labels.end());
    return labels;
  };
  if (vertex_labels(a) != vertex_labels(b)) {
    throw DomainError("filtrations are over different vertex sets");
  }

  auto birth_map = [](const Filtration& f) {
    std::map<Simplex, double> births;
    const SimplicialComplex& top = f.max_complex();
    for (int q = 0; q <= top.dimension(); ++q) {
      const auto& level = top.simplices(q);
      for (std::size_t i = 0; i < level.size(); ++i) {
        births.emplace(level[i], f.birth(q, static_cast<int>(i)));
      }
    }
    return births;
  };

  std::map<Simplex, double> ba = birth_map(a);
  std::map<Simplex, double> bb = birth_map(b);
  if (ba.size() != bb.size()) return std::numeric_limits<double>::infinity();

  double shift = 0.0;
  for (const auto& [simplex, birth] : ba) {
    auto it = bb.find(simplex);
    if (it == bb.end()) return std::numeric_limits<double>::infinity();
    shift = std::max(shift, std::abs(birth - it->second));
  }
  return shift;
}

IntervalFunction eigenvalue_interval_function(const Filtration& f, int q, int k,
                                              const Tolerances& tol) {
  if (k < 1) throw DomainError("eigenvalue index must be at least 1");
  struct State {
    Filtration f;
    std::vector<double> grid;
    int q;
    int k;
    Tolerances tol;
    std::map<std::pair<int, int>, std::optional<double>> memo;
  };
  auto state = std::make_shared<State>(State{f, f.grid(), q, k, tol, {}});

  return [state](double a, double b) -> std::optional<double> {
    if (a > b) return std::nullopt;
    auto snap = [&](double x) {
      auto it = std::upper_bound(state->grid.begin(), state->grid.end(), x);
      return static_cast<int>(it - state->grid.begin()) - 1;
    };
    const int i = snap(a);
    const int j = snap(b);
    if (i < 0) return std::nullopt;

    auto [it, inserted] = state->memo.try_emplace({i, j});
    if (!inserted) return it->second;

    const double s = state->grid[static_cast<std::size_t>(i)];
    const double t = state->grid[static_cast<std::size_t>(j)];
    if (state->f.count_at(state->q, s) < state->k) return it->second = std::nullopt;

    SimplicialPair pair = state->f.pair_at(s, t);
    PersistentLaplacian pl = persistent_laplacian(pair, state->q, Method::schur, state->tol);
    std::vector<double> lam =
        conjugated_eigenvalues(pl.up, pair.sub().weights(state->q), state->tol);
    return it->second = lam[static_cast<std::size_t>(state->k - 1)];
  };
}

double interleaving_distance_functions(const IntervalFunction& f, const IntervalFunction& g,
                                       std::span<const double> grid) {
  std::vector<double> pts(grid.begin(), grid.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return 0.0;

  std::vector<double> candidates{0.0};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      candidates.push_back(pts[j] - pts[i]);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  constexpr double kSlack = 1e-8;
  for (double eps : candidates) {
    bool ok = true;
    for (std::size_t ai = 0; ai < pts.size() && ok; ++ai) {
      for (std::size_t bi = ai; bi < pts.size() && ok; ++bi) {
        const double a = pts[ai];
        const double b = pts[bi];
        std::optional<double> fi = f(a, b);
        std::optional<double> gi = g(a, b);
        std::optional<double> fe = f(a - eps, b + eps);
        std::optional<double> ge = g(a - eps, b + eps);
        if (gi && fe && *fe < *gi - kSlack) ok = false;
        if (fi && ge && *ge < *fi - kSlack) ok = false;
      }
    }
    if (ok) return eps;
  }
  return std::numeric_limits<double>::infinity();
}

}  // namespace perslap
