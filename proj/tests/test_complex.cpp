#include <doctest.h>

#include <perslap/complex.hpp>
#include <perslap/random.hpp>

#include <string>
#include <vector>

#include "support/fixtures.hpp"

using namespace perslap;
using fixtures::mat;
using fixtures::max_abs_diff;

TEST_CASE("simplex normalizes and validates its vertex list") {
  const Simplex s({3, 0, 2});
  CHECK(s.vertices() == std::vector<VertexId>{0, 2, 3});
  CHECK(s.dimension() == 2);
  CHECK(s.facet(0) == Simplex({2, 3}));
  CHECK(s.facet(2) == Simplex({0, 2}));
  CHECK_THROWS_AS(Simplex({}), DomainError);
  CHECK_THROWS_AS(Simplex({1, 1}), DomainError);
  CHECK_THROWS_AS(Simplex({-1, 0}), DomainError);
  CHECK_THROWS_AS(s.facet(3), DomainError);
}

TEST_CASE("boundary matrix of the four-point counterexample graph") {
  const SimplicialComplex l = fixtures::counterexample_graph();
  REQUIRE(l.simplex_count(0) == 4);
  REQUIRE(l.simplex_count(1) == 3);
  CHECK(l.simplices(1)[0] == Simplex({1, 3}));
  CHECK(l.simplices(1)[1] == Simplex({2, 4}));
  CHECK(l.simplices(1)[2] == Simplex({3, 4}));
  // columns in the increasing-vertex orientation: d[a,b] = [b] - [a]
  const Matrix expected = mat({{-1, 0, 0},  //
                               {0, -1, 0},
                               {1, 0, -1},
                               {0, 1, 1}});
  CHECK(max_abs_diff(l.boundary_matrix(1), expected) == 0.0);
}

TEST_CASE("boundary matrix conventions at the extremes") {
  const SimplicialComplex edge = fixtures::single_edge();
  CHECK(max_abs_diff(edge.boundary_matrix(1), mat({{-1}, {1}})) == 0.0);
  CHECK(edge.boundary_matrix(0).rows() == 0);
  CHECK(edge.boundary_matrix(0).cols() == 2);
  // one past the dimension: empty matrix with one row per top simplex
  CHECK(edge.boundary_matrix(2).rows() == 1);
  CHECK(edge.boundary_matrix(2).cols() == 0);
  CHECK_THROWS_AS(edge.boundary_matrix(-1), DomainError);
  CHECK_THROWS_AS(edge.boundary_matrix_int8(2), DomainError);
}

TEST_CASE("boundary operators compose to zero in integer arithmetic") {
  Rng rng(21);
  std::vector<SimplicialComplex> cases{fixtures::tetrahedron(), fixtures::projective_plane()};
  for (int i = 0; i < 10; ++i) cases.push_back(random_complex(rng, 7, 3));
  for (const SimplicialComplex& k : cases) {
    for (int q = 1; q < k.dimension(); ++q) {
      const Eigen::MatrixXi a = k.boundary_matrix_int8(q).cast<int>();
      const Eigen::MatrixXi b = k.boundary_matrix_int8(q + 1).cast<int>();
      CHECK((a * b).isZero(0));
    }
  }
}

TEST_CASE("every facet of every simplex is present") {
  Rng rng(22);
  for (int i = 0; i < 10; ++i) {
    const SimplicialComplex k = random_complex(rng, 8, 3, i % 2 == 1);
    for (int q = 1; q <= k.dimension(); ++q)
      for (const Simplex& s : k.simplices(q))
        for (int f = 0; f <= q; ++f) CHECK(k.contains(s.facet(f)));
  }
}

TEST_CASE("make_pair with identical complexes removes nothing") {
  const SimplicialComplex k = fixtures::filled_triangle();
  const SimplicialPair pair = make_pair(k, k);
  for (int q = 0; q <= k.dimension(); ++q) {
    CHECK(pair.removed_count(q) == 0);
    CHECK(pair.removed_indices(q).empty());
  }
  CHECK(pair.ambient() == k);
}

TEST_CASE("make_pair on the counterexample inputs reorders vertices to 1,2,3,4") {
  const SimplicialPair pair = fixtures::counterexample_pair();
  REQUIRE(pair.ambient().simplex_count(0) == 4);
  CHECK(pair.ambient().simplices(0)[0] == Simplex({1}));
  CHECK(pair.ambient().simplices(0)[1] == Simplex({2}));
  CHECK(pair.ambient().simplices(0)[2] == Simplex({3}));
  CHECK(pair.ambient().simplices(0)[3] == Simplex({4}));
  CHECK(pair.removed_indices(0) == std::vector<int>{2, 3});
  CHECK(pair.removed_indices(1) == std::vector<int>{0, 1, 2});
}

TEST_CASE("make_pair puts the subcomplex simplices first") {
  const SimplicialComplex k = ComplexBuilder().add({1, 2}).build();
  const SimplicialPair pair = make_pair(k, fixtures::three_cycle());
  CHECK(pair.sub().simplex_count(1) == 1);
  CHECK(pair.ambient().simplex_count(1) == 3);
  CHECK(pair.ambient().simplices(1)[0] == Simplex({1, 2}));
  CHECK(pair.removed_indices(1) == std::vector<int>{1, 2});
}

TEST_CASE("make_pair validation") {
  const SimplicialComplex square =
      ComplexBuilder().add({0, 1}).add({1, 2}).add({2, 3}).add({0, 3}).build();
  CHECK_THROWS_AS(make_pair(fixtures::three_cycle(), square), DomainError);
  const SimplicialComplex heavy = ComplexBuilder().add({0, 1}, 2.0).build();
  CHECK_THROWS_AS(make_pair(fixtures::single_edge(), heavy), DomainError);
}

TEST_CASE("builder rejects conflicting weights and unclosed strict input") {
  ComplexBuilder b;
  b.add({0, 1}, 1.0);
  CHECK_NOTHROW(b.add({0, 1}, 1.0));
  CHECK_THROWS_AS(b.add({0, 1}, 2.0).build(), ParseError);
  CHECK_THROWS_AS(ComplexBuilder().add({0, 1, 2}).build(false), ParseError);
}

TEST_CASE("slices of a filtration") {
  Filtration f = FiltrationBuilder()
                     .add({0}, 0.0)
                     .add({1}, 0.0)
                     .add({0, 1}, 1.0)
                     .build();
  CHECK(f.grid() == std::vector<double>{0.0, 1.0});
  CHECK(f.slice(-1.0).total_simplex_count() == 0);
  CHECK(f.slice(2.0) == f.max_complex());
  CHECK(f.count_at(0, 0.0) == 2);
  CHECK(f.count_at(1, 0.5) == 0);
  CHECK(f.count_at(1, 1.0) == 1);

  const SimplicialPair pair = f.pair_at(0.0, 1.0);
  CHECK(pair.sub().simplex_count(0) == 2);
  CHECK(pair.sub().simplex_count(1) == 0);
  CHECK(pair.ambient().simplex_count(1) == 1);
  CHECK_THROWS_AS(f.pair_at(1.0, 0.0), DomainError);
}

TEST_CASE("filtration slices are prefixes of the final ordering") {
  Rng rng(23);
  for (int i = 0; i < 8; ++i) {
    const Filtration f = random_filtration(rng, 7, 2, 4);
    const std::vector<double>& grid = f.grid();
    for (size_t a = 0; a < grid.size(); ++a)
      for (size_t b = a; b < grid.size(); ++b) {
        const SimplicialPair pair = f.pair_at(grid[a], grid[b]);
        for (int q = 0; q <= pair.ambient().dimension(); ++q) {
          const int nk = pair.sub().simplex_count(q);
          REQUIRE(nk <= pair.ambient().simplex_count(q));
          for (int j = 0; j < nk; ++j)
            CHECK(pair.ambient().simplices(q)[j] == pair.sub().simplices(q)[j]);
        }
      }
  }
}

TEST_CASE("filtration orders simplices by birth then lexicographically") {
  const Filtration f = FiltrationBuilder()
                           .add({2}, 0.0)
                           .add({0}, 1.0)
                           .add({1}, 0.0)
                           .add({1, 2}, 1.0)
                           .add({0, 1}, 1.0)
                           .build();
  CHECK(f.max_complex().simplices(0) ==
        std::vector<Simplex>{Simplex({1}), Simplex({2}), Simplex({0})});
  CHECK(f.max_complex().simplices(1) == std::vector<Simplex>{Simplex({0, 1}), Simplex({1, 2})});
  CHECK(f.birth(0, 2) == 1.0);
}

TEST_CASE("filtration builder closes faces at the minimum coface birth") {
  const Filtration f = FiltrationBuilder().add({0, 1}, 2.0).add({1, 2}, 5.0).build();
  const int v0 = *f.max_complex().index_of(Simplex({0}));
  const int v1 = *f.max_complex().index_of(Simplex({1}));
  const int v2 = *f.max_complex().index_of(Simplex({2}));
  CHECK(f.birth(0, v0) == 2.0);
  CHECK(f.birth(0, v1) == 2.0);
  CHECK(f.birth(0, v2) == 5.0);
  CHECK_THROWS_AS(FiltrationBuilder().add({0}, 2.0).add({0, 1}, 1.0).build(), ParseError);
}

TEST_CASE("parsing accepts comments, defaults, and weight annotations") {
  const std::string text =
      "# a weighted edge and a vertex\n"
      "0 1 ; w=2.5\n"
      "2 ; t=1\n";
  const SimplicialComplex k = parse_complex(text);
  CHECK(k.simplex_count(0) == 3);
  CHECK(k.simplex_count(1) == 1);
  CHECK(k.weight(1, 0) == 2.5);
  CHECK(k.weight(0, 0) == 1.0);  // default weight

  const Filtration f = parse_filtration("0 1 ; t=1 ; w=3\n");
  CHECK(f.max_complex().weight(1, 0) == 3.0);
  CHECK(f.grid() == std::vector<double>{1.0});
  CHECK(parse_filtration("0 1\n").grid() == std::vector<double>{0.0});  // default birth
}

TEST_CASE("parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_complex("a b\n"), ParseError);
  CHECK_THROWS_AS(parse_complex("0 1 ; w=-2\n"), ParseError);
  CHECK_THROWS_AS(parse_complex("0 1 ; q=3\n"), ParseError);
  CHECK_THROWS_AS(parse_complex("0 1\n", true), ParseError);  // strict: faces must be listed
  CHECK_THROWS_AS(parse_filtration("0 ; t=2\n1 ; t=0\n0 1 ; t=1\n"), ParseError);
}

TEST_CASE("serialization round-trips complexes and filtrations") {
  Rng rng(24);
  for (int i = 0; i < 6; ++i) {
    const SimplicialComplex k = random_complex(rng, 7, 3, i % 2 == 1);
    CHECK(parse_complex(k.to_text()) == k);
    CHECK(parse_complex(k.to_text(), true) == k);  // canonical form lists every face

    const Filtration f = random_filtration(rng, 6, 2, 3, i % 2 == 0);
    const Filtration g = parse_filtration(f.to_text());
    CHECK(g.max_complex() == f.max_complex());
    CHECK(g.grid() == f.grid());
    for (int q = 0; q <= f.max_complex().dimension(); ++q)
      for (int j = 0; j < f.max_complex().simplex_count(q); ++j)
        CHECK(g.birth(q, j) == f.birth(q, j));
  }
}
