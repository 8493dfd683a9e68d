#include <bit>
#include <set>

#include "doctest.h"

#include "augsimp/corpus.hpp"
#include "augsimp/errors.hpp"
#include "augsimp/sset.hpp"

using namespace augsimp;

namespace {

// Level sizes of the face closure of the generators, by subset enumeration.
AugSequence closure_oracle(int n, const std::vector<std::vector<int>>& generators) {
  std::set<unsigned> closed;
  for (const auto& g : generators) {
    unsigned mask = 0;
    for (int v : g) mask |= 1u << v;
    for (unsigned s = mask;; s = (s - 1) & mask) {
      closed.insert(s);
      if (s == 0) break;
    }
  }
  std::vector<Scalar> sizes(n + 2, 0);
  for (unsigned s : closed) sizes[std::popcount(s)] += 1;
  return AugSequence(sizes);
}

AugSSet swapped_faces() {
  auto levels = gamma(3).levels();
  std::swap(levels[3].faces[0], levels[3].faces[1]);
  return AugSSet(levels);
}

}  // namespace

TEST_CASE("gamma") {
  CHECK(cardinal(gamma(2)) == AugSequence{1, 3, 3, 1});
  CHECK(cardinal(gamma(-1)) == AugSequence{1});
  CHECK(cardinal(gamma(4)) == closure_oracle(4, {{0, 1, 2, 3, 4}}));
  CHECK(gamma(3).dim() == 3);
  for (int n = -1; n <= 8; ++n) CHECK(validate(gamma(n)).ok);
  CHECK(gamma(3).embedding()->ambient == 3);
}

TEST_CASE("gamma face maps delete the i-th vertex") {
  const AugSSet g = gamma(4);
  const auto& sets = g.embedding()->vertex_sets;
  for (int n = 0; n <= 4; ++n)
    for (int s = 0; s < g.size(n); ++s) {
      const auto verts = vertices_of(sets[n + 1][s]);
      for (int i = 0; i <= n; ++i) {
        VertexSet expect = sets[n + 1][s] & ~(VertexSet{1} << verts[i]);
        CHECK(sets[n][g.face(n, i, s)] == expect);
      }
    }
}

TEST_CASE("boundary") {
  CHECK(cardinal(boundary(2)) == AugSequence{1, 3, 3});
  CHECK(boundary(-1).empty());
  CHECK(cardinal(boundary(-1)) == AugSequence());
  CHECK(cardinal(boundary(3)) == closure_oracle(3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
  for (int n = -1; n <= 7; ++n) CHECK(validate(boundary(n)).ok);
}

TEST_CASE("empty complex differs from gamma(-1)") {
  AugSSet e;
  CHECK(e.empty());
  CHECK_FALSE(gamma(-1).empty());
  CHECK(gamma(-1).dim() == -1);
  CHECK(validate(e).ok);
}

TEST_CASE("validate reports identity violations") {
  CHECK(validate(gamma(4)).ok);
  auto report = validate(swapped_faces());
  CHECK_FALSE(report.ok);
  CHECK_FALSE(report.message.empty());
  LevelData bad_range{1, {{5}}};
  CHECK_FALSE(validate(AugSSet({LevelData{1, {}}, bad_range})).ok);
}

TEST_CASE("malformed shapes are rejected") {
  CHECK_THROWS_AS(AugSSet({LevelData{1, {}}, LevelData{2, {{0}}}}), InvalidComplex);
  CHECK_THROWS_AS(AugSSet({LevelData{-1, {}}}), InvalidComplex);
}

TEST_CASE("subcomplex_of_gamma") {
  CHECK(cardinal(subcomplex_of_gamma(2, {{0, 1}, {1, 2}, {0, 2}})) == cardinal(boundary(2)));
  std::vector<std::vector<int>> edges;
  for (int a = 0; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b) edges.push_back({a, b});
  CHECK(cardinal(subcomplex_of_gamma(5, edges)) == AugSequence{1, 6, 15});
  CHECK(cardinal(subcomplex_of_gamma(5, edges)) == closure_oracle(5, edges));
  CHECK(cardinal(subcomplex_of_gamma(1, {{0}, {1}})) == AugSequence{1, 2});
  CHECK_THROWS_AS(subcomplex_of_gamma(2, {{0, 3}}), VertexOutOfRange);
  for (const auto& e : random_subcomplexes(60, 0, 6, 7)) {
    CHECK(validate(e.complex).ok);
    CHECK(cardinal(e.complex) == closure_oracle(e.ambient, e.generators));
  }
}

TEST_CASE("hexagon") {
  const AugSSet h = hexagon();
  CHECK(cardinal(h) == AugSequence{1, 6, 6});
  CHECK(validate(h).ok);
  std::vector<int> degree(6, 0);
  for (int s = 0; s < h.size(1); ++s)
    for (int i = 0; i <= 1; ++i) ++degree[h.face(1, i, s)];
  for (int d : degree) CHECK(d == 2);
}

TEST_CASE("join") {
  for (int n = -1; n <= 4; ++n)
    for (int m = -1; m <= 4; ++m) {
      const AugSSet j = join(gamma(n), gamma(m));
      CHECK(cardinal(j) == cardinal(gamma(n + m + 1)));
      CHECK(validate(j).ok);
    }
  CHECK(cardinal(join(boundary(2), boundary(2))) == AugSequence{1, 6, 15, 18, 9});
  const AugSSet h = hexagon();
  CHECK(cardinal(join(h, gamma(-1))) == cardinal(h));
  CHECK(join(h, AugSSet()).empty());
  CHECK(join(h, h).dim() == 3);
}

TEST_CASE("join orders simplices by (p, a, b)") {
  const AugSSet j = join(gamma(0), boundary(1));
  // Level 0 lists the two points of Y (p = -1), then the point of X.
  REQUIRE(j.size(0) == 3);
  REQUIRE(j.size(1) == 2);
  for (int s = 0; s < 2; ++s) CHECK(j.face(1, 1, s) == 2);
  CHECK(j.face(1, 0, 0) == 0);
  CHECK(j.face(1, 0, 1) == 1);
}

TEST_CASE("cones") {
  CHECK(cardinal(cone_left(gamma(1))) == AugSequence{1, 3, 3, 1});
  CHECK(cone_right(AugSSet()).empty());
  for (const auto& e : random_subcomplexes(40, 0, 5, 11)) {
    const auto want = seq_cone(cardinal(e.complex));
    CHECK(cardinal(cone_left(e.complex)) == want);
    CHECK(cardinal(cone_right(e.complex)) == want);
    CHECK(validate(cone_left(e.complex)).ok);
    CHECK(validate(cone_right(e.complex)).ok);
  }
}

TEST_CASE("complex_from_vertex_sets orders lexicographically") {
  const AugSSet x = complex_from_vertex_sets(2, {0b000, 0b001, 0b010, 0b100, 0b011, 0b101});
  const auto& sets = x.embedding()->vertex_sets;
  CHECK(sets[1] == std::vector<VertexSet>{0b001, 0b010, 0b100});
  CHECK(sets[2] == std::vector<VertexSet>{0b011, 0b101});
  CHECK_THROWS_AS(complex_from_vertex_sets(2, {0b000, 0b011}), InvalidComplex);
}

TEST_CASE("maps") {
  auto g = std::make_shared<const AugSSet>(gamma(1));
  SSetMap id{g, g, {{0}, {0, 1}, {0}}};
  CHECK(validate_map(id).ok);
  CHECK(is_injective(id));
  SSetMap collapse{g, g, {{0}, {0, 0}, {0}}};
  CHECK_FALSE(validate_map(collapse).ok);
  CHECK_FALSE(is_injective(collapse));
}

TEST_CASE("labels") {
  CHECK(gamma(2).label(1, 0) == "{0,1}");
  CHECK(join(gamma(0), gamma(0)).label(1, 0) == "#0");
}
