#include "doctest.h"

#include "augsimp/corpus.hpp"
#include "augsimp/errors.hpp"
#include "augsimp/extend.hpp"
#include "augsimp/json_io.hpp"
#include "augsimp/named_matrices.hpp"

using namespace augsimp;

namespace {

bool same_faces(const AugSSet& a, const AugSSet& b) {
  if (a.top() != b.top()) return false;
  for (int n = -1; n <= a.top(); ++n) {
    if (a.size(n) != b.size(n)) return false;
    for (int i = 0; i <= n; ++i)
      for (int s = 0; s < a.size(n); ++s)
        if (a.face(n, i, s) != b.face(n, i, s)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("complex round trip") {
  std::vector<AugSSet> xs{gamma(-1), gamma(3), boundary(2), hexagon(), AugSSet(), cylinder(hexagon())};
  for (const auto& e : random_subcomplexes(30, 0, 5, 17)) xs.push_back(e.complex);
  for (const auto& x : xs) {
    const std::string text = augsset_to_json(x);
    const AugSSet back = augsset_from_json(text);
    CHECK(same_faces(x, back));
    CHECK(augsset_to_json(back) == text);
  }
}

TEST_CASE("complex json layout") {
  CHECK(augsset_to_json(gamma(0)) == R"({"kind":"augsset","dim":0,"levels":[{"n":-1,"size":1},{"n":0,"size":1,"faces":[[0]]}]})");
  CHECK(augsset_to_json(AugSSet()) == R"({"kind":"augsset","dim":null,"levels":[{"n":-1,"size":0}]})");
}

TEST_CASE("malformed complexes") {
  CHECK_THROWS_AS(augsset_from_json("{"), ParseError);
  CHECK_THROWS_AS(augsset_from_json(R"({"kind":"seq"})"), ParseError);
  CHECK_THROWS_AS(augsset_from_json(R"({"kind":"augsset"})"), ParseError);
  CHECK_THROWS_AS(augsset_from_json(R"({"kind":"augsset","levels":[{"n":0,"size":1}]})"), ParseError);
  CHECK_THROWS_AS(augsset_from_json(R"({"kind":"augsset","levels":[{"n":-1,"size":-1}]})"), ParseError);
  CHECK_THROWS_AS(augsset_from_json(R"({"kind":"augsset","levels":[{"n":-1,"size":1,"faces":[]}]})"), ParseError);
  CHECK_THROWS_AS(augsset_from_json(R"({"kind":"augsset","levels":[{"n":-1,"size":1},{"n":0,"size":1}]})"), ParseError);
  CHECK_THROWS_AS(augsset_from_json(R"({"kind":"augsset","levels":[{"n":-1,"size":1},{"n":0,"size":2,"faces":[[0]]}]})"), ParseError);
  CHECK_THROWS_AS(augsset_from_json(R"({"kind":"augsset","dim":3,"levels":[{"n":-1,"size":1}]})"), ParseError);
  CHECK_THROWS_AS(augsset_from_json(R"({"kind":"augsset","levels":[{"n":-1,"size":"1"}]})"), ParseError);
}

TEST_CASE("sequence round trip") {
  for (const AugSequence& a : {AugSequence{1, 6, 6}, AugSequence(), AugSequence(std::vector<Scalar>{Scalar(1, 3), Scalar(-2)}), cad_plus().row(12)}) {
    CHECK(sequence_from_json(sequence_to_json(a)) == a);
  }
  CHECK(sequence_to_json(AugSequence{1, 6, 6}) == R"({"kind":"seq","start":-1,"entries":["1","6","6"],"tail":"zero"})");
  CHECK(sequence_from_json(R"({"kind":"seq","entries":[1,"2/4"]})") == AugSequence(std::vector<Scalar>{Scalar(1), Scalar(1, 2)}));
  CHECK_THROWS_AS(sequence_from_json(R"({"kind":"seq","start":0,"entries":[]})"), ParseError);
  CHECK_THROWS_AS(sequence_from_json(R"({"kind":"seq","entries":[],"tail":"unknown"})"), ParseError);
  CHECK_THROWS_AS(sequence_from_json(R"({"kind":"seq","entries":[1.5]})"), ParseError);
}

TEST_CASE("large entries stay exact") {
  const AugSequence row = cad_plus().row(30);
  CHECK(sequence_from_json(sequence_to_json(row)) == row);
  BigInt chains = 1;
  for (int k = 2; k <= 31; ++k) chains *= k;
  CHECK(row[30] == Scalar(chains));
}

TEST_CASE("subcomplex generator files") {
  auto spec = subcomplex_spec_from_json(R"({"kind":"subcomplex","n":5,"generators":[[0,1],[1,2]]})");
  CHECK(spec.n == 5);
  CHECK(spec.generators == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(subcomplex_spec_from_json(R"({"kind":"subcomplex","n":-2,"generators":[]})"), ParseError);
  CHECK_THROWS_AS(subcomplex_spec_from_json(R"({"kind":"subcomplex","generators":[]})"), ParseError);
  CHECK_THROWS_AS(subcomplex_spec_from_json(R"({"kind":"subcomplex","n":2,"generators":[0]})"), ParseError);
}

TEST_CASE("matrix windows") {
  auto w = kernels::materialize(cad_plus(), {-1, 1}, {-1, 2});
  w.name = "cad+";
  CHECK(window_to_json(w) ==
        R"({"kind":"matwin","name":"cad+","rows":[-1,1],"cols":[-1,2],"data":[["1","0","0","0"],["1","1","0","0"],["1","3","2","0"]]})");
  const std::string text = window_to_text(w);
  CHECK(text ==
        "cad+ | -1 0 1 2\n"
        "-----+---------\n"
        "  -1 |  1 0 0 0\n"
        "   0 |  1 1 0 0\n"
        "   1 |  1 3 2 0\n");
}
