#include "perslap/resistance.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "perslap/laplacian.hpp"
#include "perslap/linalg.hpp"
#include "perslap/persistent.hpp"

namespace perslap {

namespace {

constexpr double kFormAgreement = 1e-8;

// Rebuilds the complex with weight 1 everywhere except dimension q0,
// preserving the simplex order of every dimension.
SimplicialComplex force_unit_weights_off(const SimplicialComplex& c, int q0) {
  ComplexBuilder builder;
  for (int q = 0; q <= c.dimension(); ++q) {
    const auto& level = c.simplices(q);
    for (std::size_t i = 0; i < level.size(); ++i) {
      builder.add(level[i], q == q0 ? c.weight(q, static_cast<int>(i)) : 1.0);
    }
  }
  return builder.build(false);
}

bool graph_connected(const SimplicialComplex& l) {
  const auto& verts = l.simplices(0);
  if (verts.empty()) return false;
  std::map<VertexId, int> pos;
  for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i].vertices()[0]] = static_cast<int>(i);

  std::vector<int> parent(verts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  if (l.dimension() >= 1) {
    for (const Simplex& e : l.simplices(1)) {
      const int a = find(pos.at(e.vertices()[0]));
      const int b = find(pos.at(e.vertices()[1]));
      parent[a] = b;
    }
  }
  const int root = find(0);
  for (std::size_t i = 1; i < verts.size(); ++i) {
    if (find(static_cast<int>(i)) != root) return false;
  }
  return true;
}

double quadratic_pinv_form(const Matrix& m, const Vector& d, const Tolerances& tol) {
  return d.dot(pseudoinverse(m, tol) * d);
}

}  // namespace

CurrentGenerator::CurrentGenerator(int q0, std::vector<VertexId> vertices)
    : q0_(q0), simplex_(std::move(vertices)) {
  if (q0 < 1) throw DomainError("current generator needs q0 >= 1");
  if (simplex_.dimension() != q0) {
    throw DomainError("current generator needs exactly q0 + 1 distinct vertices");
  }
}

SimplicialNetwork::SimplicialNetwork(const SimplicialComplex& complex, int q0) : q0_(q0) {
  if (q0 < 1) throw DomainError("simplicial network needs q0 >= 1");
  if (complex.dimension() != q0) {
    throw DomainError("simplicial network of dimension " + std::to_string(q0) +
                      " requires a complex of exactly that dimension");
  }
  complex_ = force_unit_weights_off(complex, q0);
}

Vector generator_boundary_vector(const SimplicialComplex& k, const CurrentGenerator& g) {
  const int q0 = g.q0();
  Vector d = Vector::Zero(k.simplex_count(q0 - 1));
  double sign = 1.0;
  for (int i = 0; i <= q0; ++i) {
    const Simplex facet = g.simplex().facet(i);
    std::optional<int> idx = k.index_of(facet);
    if (!idx) {
      throw DomainError("generator facet " + facet.to_string() + " is not in the complex");
    }
    d(*idx) += sign;
    sign = -sign;
  }
  return d;
}

bool is_current_generator(const SimplicialComplex& k, const CurrentGenerator& g,
                          const Tolerances& tol) {
  Vector d;
  try {
    d = generator_boundary_vector(k, g);
  } catch (const DomainError&) {
    return false;
  }
  const Matrix b = k.boundary_matrix(g.q0());
  Matrix augmented(d.size(), b.cols() + 1);
  augmented << b, d;
  return rank(augmented, tol) == rank(b, tol);
}

double simplicial_effective_resistance(const SimplicialNetwork& network,
                                       const CurrentGenerator& generator,
                                       const Tolerances& tol) {
  if (generator.q0() != network.q0()) {
    throw DomainError("generator and network dimensions disagree");
  }
  const SimplicialComplex& c = network.complex();
  const Vector d = generator_boundary_vector(c, generator);
  if (!is_current_generator(c, generator, tol)) {
    throw DomainError("boundary of " + generator.simplex().to_string() +
                      " is not in the image of the boundary map: not a current generator");
  }

  const int q = network.q0() - 1;
  const Matrix up = up_laplacian(c, q);
  const double r_up = quadratic_pinv_form(up, d, tol);
  const double r_full = quadratic_pinv_form(up + down_laplacian(c, q), d, tol);
  if (std::abs(r_up - r_full) > kFormAgreement * std::max(1.0, std::abs(r_up))) {
    throw SelfCheckError("up-Laplacian resistance " + std::to_string(r_up) +
                         " disagrees with full-Laplacian resistance " + std::to_string(r_full));
  }
  return r_up;
}

double simplicial_effective_resistance(const ResistanceQuery& query, const Tolerances& tol) {
  return simplicial_effective_resistance(query.network, query.generator, tol);
}

double effective_resistance_graph(const SimplicialComplex& l, VertexId v, VertexId w,
                                  const Tolerances& tol) {
  if (v == w) throw DomainError("effective resistance needs two distinct vertices");
  if (!l.contains(Simplex({v})) || !l.contains(Simplex({w}))) {
    throw DomainError("vertex is not in the graph");
  }
  if (!graph_connected(l)) throw DomainError("graph is not connected");
  return simplicial_effective_resistance(SimplicialNetwork(l, 1), CurrentGenerator(1, {v, w}),
                                         tol);
}

Matrix two_point_persistent_laplacian(const SimplicialComplex& l, VertexId v, VertexId w,
                                      const Tolerances& tol) {
  const double r = effective_resistance_graph(l, v, w, tol);

  SimplicialNetwork network(l, 1);
  SimplicialComplex k = ComplexBuilder().add({v}).add({w}).build();
  SimplicialPair pair = make_pair(k, network.complex());
  const Matrix actual = persistent_laplacian(pair, 0, Method::schur, tol).full;

  Matrix expected(2, 2);
  expected << 1.0, -1.0, -1.0, 1.0;
  expected /= r;
  const double gap = (actual - expected).cwiseAbs().maxCoeff();
  if (gap > kFormAgreement * std::max(1.0, 1.0 / r)) {
    throw SelfCheckError("two-point persistent Laplacian deviates from (1/R) [[1,-1],[-1,1]] by " +
                         std::to_string(gap));
  }
  return actual;
}

Chain current_balance_solve(const SimplicialNetwork& network, const Chain& j,
                            const Tolerances& tol) {
  const int q = network.q0() - 1;
  if (j.q != q) throw DomainError("current chain must live at dimension q0 - 1");
  const SimplicialComplex& c = network.complex();
  if (j.coeffs.size() != c.simplex_count(q)) {
    throw DomainError("current chain has the wrong number of coefficients");
  }

  const Matrix up = up_laplacian(c, q);
  Vector u = pseudoinverse(up, tol) * j.coeffs;
  const double residual = (up * u - j.coeffs).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, j.coeffs.size() > 0 ? j.coeffs.cwiseAbs().maxCoeff() : 0.0);
  if (residual > kFormAgreement * scale) {
    throw DomainError("current vector is not balanced: no potential solves the equation");
  }
  return Chain{q, std::move(u)};
}

bool kron_preservation_check(const SimplicialPair& pair, int q0, const CurrentGenerator& g,
                             const Tolerances& tol) {
  if (g.q0() != q0) throw DomainError("generator dimension disagrees with q0");
  SimplicialNetwork ambient(pair.ambient(), q0);
  SimplicialPair network_pair = make_pair(force_unit_weights_off(pair.sub(), q0),
                                          ambient.complex());

  if (!is_current_generator(ambient.complex(), g, tol)) {
    throw DomainError("not a current generator for the ambient network");
  }
  const Vector d_ambient = generator_boundary_vector(ambient.complex(), g);
  // Requires every facet inside the subcomplex, or the reduced form does not exist.
  const Vector d_sub = generator_boundary_vector(network_pair.sub(), g);

  const int q = q0 - 1;
  const double r_ambient =
      quadratic_pinv_form(up_laplacian(ambient.complex(), q), d_ambient, tol);
  const Matrix up_pair = persistent_laplacian(network_pair, q, Method::schur, tol).up;
  const double r_reduced = quadratic_pinv_form(up_pair, d_sub, tol);
  return std::abs(r_ambient - r_reduced) <= kFormAgreement * std::max(1.0, std::abs(r_ambient));
}

}  // namespace perslap
